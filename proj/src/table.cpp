#include "xprod/table.hpp"

#include <string>

#include "xprod/error.hpp"

namespace xprod {

SignedBasis SignedBasis::make(int sign, BasisIndex index) {
  if (sign != 1 && sign != -1) throw RangeError("sign must be +1 or -1");
  if (index < 1) throw RangeError("basis index must be >= 1");
  return SignedBasis(sign, index);
}

SignedBasis SignedBasis::from_int(std::int64_t value) {
  if (value == 0) return zero();
  if (value > 0) return make(1, static_cast<BasisIndex>(value));
  return make(-1, static_cast<BasisIndex>(-value));
}

SignedBasis SignedBasis::negated() const {
  return is_zero() ? zero() : SignedBasis(-sign_, index_);
}

std::string SignedBasis::to_string() const {
  if (is_zero()) return "0";
  return (sign_ < 0 ? "−" : "") + basis_label(index_);
}

MulTable::MulTable(int k, std::vector<SignedBasis> cells)
    : k_(k), n_(0), cells_(std::move(cells)) {
  if (k < 0 || k > kMaxLevel) {
    throw RangeError("level k=" + std::to_string(k) + " outside 0.." +
                     std::to_string(kMaxLevel));
  }
  n_ = basis_size(k);
  if (cells_.size() != n_ * n_) {
    throw DimensionError("table for k=" + std::to_string(k) + " needs " +
                         std::to_string(n_ * n_) + " cells, got " +
                         std::to_string(cells_.size()));
  }
  for (const auto& c : cells_) {
    if (!c.is_zero() && c.index() > n_) {
      throw RangeError("cell index " + std::to_string(c.index()) + " exceeds n=" +
                       std::to_string(n_));
    }
  }

  Layout layout;
  layout.column.assign(n_ * n_, 0);
  layout.sign.assign(n_ * n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const SignedBasis& c = cells_[i * n_ + j];
      if (c.is_zero()) continue;
      const std::size_t slot = i * n_ + (c.index() - 1);
      if (layout.sign[slot] != 0.0) return;  // two columns feed one output
      layout.sign[slot] = c.sign();
      layout.column[slot] = static_cast<std::int32_t>(j);
    }
  }
  layout_ = std::move(layout);
}

MulTable MulTable::with_cell(std::size_t i, std::size_t j, SignedBasis value) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw RangeError("cell outside table");
  std::vector<SignedBasis> cells = cells_;
  cells[(i - 1) * n_ + (j - 1)] = value;
  return MulTable(k_, std::move(cells));
}

std::vector<std::string> MulTable::violations() const {
  std::vector<std::string> out;
  auto cell_name = [](std::size_t i, std::size_t j) {
    return basis_label(i) + "×" + basis_label(j);
  };
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) {
      const SignedBasis& c = at(i, j);
      if (i == j) {
        if (!c.is_zero()) out.push_back(cell_name(i, j) + " is not 0");
        continue;
      }
      if (!(c == at(j, i).negated())) {
        out.push_back(cell_name(i, j) + " is not −(" + cell_name(j, i) + ")");
      }
      if (c.is_zero() || c.index() != (i ^ j)) {
        out.push_back(cell_name(i, j) + " = " + c.to_string() + ", expected ±" +
                      basis_label(static_cast<BasisIndex>(i ^ j)));
      }
    }
  }
  return out;
}

MulTable build_table(int k) {
  if (k < 1 || k > kMaxLevel) {
    throw RangeError("level k=" + std::to_string(k) + " outside 1.." +
                     std::to_string(kMaxLevel));
  }
  const BasisIndex n = basis_size(k);
  std::vector<SignedBasis> cells;
  cells.reserve(std::size_t{n} * n);
  for (BasisIndex i = 1; i <= n; ++i) {
    for (BasisIndex j = 1; j <= n; ++j) cells.push_back(normalize_product(i, j, k));
  }
  MulTable table(k, std::move(cells));
  if (auto v = table.violations(); !v.empty()) {
    throw Error("generated table for k=" + std::to_string(k) + " is inconsistent: " +
                v.front());
  }
  return table;
}

std::pair<Vector, Vector> counterexample_vectors(int k) {
  if (k < 3 || k > kMaxLevel) {
    throw RangeError("the counterexample uses u_3 and needs 3 <= k <= " +
                     std::to_string(kMaxLevel) + ", got k=" + std::to_string(k));
  }
  const std::size_t n = basis_size(k);
  const auto u_first = word_to_index(BasisWord::from_generators({0, 1}));
  const auto u_second = word_to_index(BasisWord::from_generators({1, 3}));
  const auto v_first = word_to_index(BasisWord::from_generators({1, 2}));
  const auto v_second = word_to_index(BasisWord::from_generators({0, 1, 2, 3}));

  std::vector<Rational> u(n), v(n);
  u[u_first - 1] = 1;
  u[u_second - 1] = 1;
  v[v_first - 1] = 1;
  v[v_second - 1] = -1;
  return {Vector(std::move(u)), Vector(std::move(v))};
}

}  // namespace xprod
