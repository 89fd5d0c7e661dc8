#include "xprod/basis.hpp"

#include <bit>
#include <string>

#include "xprod/error.hpp"

namespace xprod {

BasisWord::BasisWord(std::uint32_t generators) : generators_(generators) {
  if (generators == 0) throw RangeError("basis word needs at least one generator");
  if (std::bit_width(generators) > kMaxLevel + 1) {
    throw RangeError("generator above u_" + std::to_string(kMaxLevel));
  }
}

BasisWord BasisWord::from_generators(const std::vector<int>& generators) {
  std::uint32_t mask = 0;
  for (int b : generators) {
    if (b < 0 || b > kMaxLevel) throw RangeError("generator u_" + std::to_string(b));
    mask |= std::uint32_t{1} << b;
  }
  return BasisWord(mask);
}

int BasisWord::top() const { return std::bit_width(generators_) - 1; }

bool BasisWord::is_generator() const { return std::has_single_bit(generators_); }

BasisWord BasisWord::without_top() const {
  if (is_generator()) throw RangeError("a single generator has no inner word");
  return BasisWord(generators_ & ~(std::uint32_t{1} << top()));
}

std::string BasisWord::to_string() const {
  std::string out;
  int emitted = 0;
  for (int b = 0; b <= top(); ++b) {
    if (!(generators_ >> b & 1)) continue;
    if (emitted == 0) {
      out = "u" + subscript(b);
    } else {
      if (emitted > 1) out = "(" + out + ")";
      out += "×u" + subscript(b);
    }
    ++emitted;
  }
  return out;
}

std::vector<BasisWord> build_basis(int k) {
  if (k < 0 || k > kMaxLevel) {
    throw RangeError("level k=" + std::to_string(k) + " outside 0.." +
                     std::to_string(kMaxLevel));
  }
  std::vector<BasisWord> words{BasisWord(1)};
  for (int level = 1; level <= k; ++level) {
    const std::uint32_t top = std::uint32_t{1} << level;
    const std::size_t previous = words.size();
    words.push_back(BasisWord(top));
    for (std::size_t i = 0; i < previous; ++i) {
      words.push_back(BasisWord(words[i].generators() | top));
    }
  }
  return words;
}

BasisIndex word_to_index(BasisWord w) { return w.generators(); }

BasisWord index_to_word(BasisIndex index) { return BasisWord(index); }

std::string subscript(std::uint64_t value) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄",
                                       "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(value)) out += digits[c - '0'];
  return out;
}

std::string basis_label(BasisIndex index) { return "e" + subscript(index); }

}  // namespace xprod
