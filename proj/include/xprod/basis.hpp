#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xprod {

/// Largest supported level; S_10 spans R^2047.
inline constexpr int kMaxLevel = 10;

using BasisIndex = std::uint32_t;

/// Number of elements of S_k, 2^(k+1) - 1.
constexpr BasisIndex basis_size(int k) {
  return (BasisIndex{1} << (k + 1)) - 1;
}

/// One element of S_k: a nested product of generators u_0..u_k.
///
/// The word is identified with its generator set.  Its nesting is forced:
/// a single generator u_b, or (w x u_b) with b larger than every generator
/// of w, so ((u0 x u1) x u2) x u3 is the canonical form of {0,1,2,3}.
class BasisWord {
 public:
  /// Bit b of `generators` stands for u_b.  Throws RangeError on an empty
  /// set or a generator above kMaxLevel.
  explicit BasisWord(std::uint32_t generators);
  static BasisWord from_generators(const std::vector<int>& generators);

  std::uint32_t generators() const { return generators_; }
  /// Largest generator; the outermost factor of the nesting.
  int top() const;
  /// Smallest k with this word in S_k.
  int level() const { return top(); }
  bool is_generator() const;
  /// The word with its outermost generator removed.  Throws on generators.
  BasisWord without_top() const;

  /// e.g. "(u₀×u₁)×u₂"
  std::string to_string() const;

  friend bool operator==(BasisWord, BasisWord) = default;

 private:
  std::uint32_t generators_;
};

/// S_k in enumeration order: S_{k-1}, then u_k, then S_{k-1} x u_k.
/// 0 <= k <= kMaxLevel.
std::vector<BasisWord> build_basis(int k);

/// Binary encoding of a word: sum of 2^b over its generators.  e_1 = u_0,
/// e_3 = u_0 x u_1, e_7 = (u_0 x u_1) x u_2.
BasisIndex word_to_index(BasisWord w);
BasisWord index_to_word(BasisIndex index);

/// Renders e_i with subscript digits, e.g. "e₁₀".
std::string basis_label(BasisIndex index);
std::string subscript(std::uint64_t value);

}  // namespace xprod
