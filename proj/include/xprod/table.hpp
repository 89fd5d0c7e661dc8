#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xprod/basis.hpp"
#include "xprod/rewrite.hpp"
#include "xprod/vector.hpp"

namespace xprod {

/// A table cell: zero, or +-e_index.
class SignedBasis {
 public:
  constexpr SignedBasis() = default;
  static constexpr SignedBasis zero() { return {}; }
  /// sign must be +1 or -1 and index >= 1.
  static SignedBasis make(int sign, BasisIndex index);
  /// Inverse of to_int(): 0 is zero, otherwise sign * index.
  static SignedBasis from_int(std::int64_t value);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  BasisIndex index() const { return index_; }
  SignedBasis negated() const;
  std::int64_t to_int() const { return sign_ * static_cast<std::int64_t>(index_); }
  /// "0", "e₃" or "−e₄"
  std::string to_string() const;

  friend bool operator==(SignedBasis, SignedBasis) = default;

 private:
  constexpr SignedBasis(int sign, BasisIndex index) : sign_(sign), index_(index) {}
  int sign_ = 0;
  BasisIndex index_ = 0;
};

/// Reduces e_i × e_j, with e_i and e_j read as basis words of S_k, to a
/// signed basis element.  Signs come only from the rewrite rules; the index
/// of a nonzero result is i XOR j as a consequence.
/// Throws RangeError unless 1 <= i, j <= 2^(k+1)-1 and 0 <= k <= kMaxLevel.
SignedBasis normalize_product(BasisIndex i, BasisIndex j, int k);

/// Same reduction carried out on explicit product trees, recording every
/// rule application.
RewriteTrace normalize_product_traced(BasisIndex i, BasisIndex j, int k);

/// Reapplies each step of `trace` and checks that it reproduces the next
/// expression and finally the signed basis element `expected`.
bool replay_trace(const RewriteTrace& trace, SignedBasis expected);

/// Multiplication table on R^n, n = 2^(k+1)-1.  Cells are indexed 1..n.
class MulTable {
 public:
  /// Takes arbitrary cells (row-major, n*n).  Only shape and index bounds
  /// are checked; use violations() for the algebraic invariants.
  MulTable(int k, std::vector<SignedBasis> cells);

  int k() const { return k_; }
  std::size_t n() const { return n_; }
  const SignedBasis& at(std::size_t i, std::size_t j) const {
    return cells_[(i - 1) * n_ + (j - 1)];
  }
  const std::vector<SignedBasis>& cells() const { return cells_; }

  /// Copy with cell (i, j) replaced.
  MulTable with_cell(std::size_t i, std::size_t j, SignedBasis value) const;

  /// Human-readable descriptions of every broken invariant: nonzero
  /// diagonal, T[i][j] != -T[j][i], or an off-diagonal index != i XOR j.
  std::vector<std::string> violations() const;
  bool is_valid() const { return violations().empty(); }

  /// Gather layout for the floating kernels; empty if some row hits the same
  /// output coordinate twice.
  struct Layout {
    std::vector<std::int32_t> column;
    std::vector<double> sign;
  };
  const std::optional<Layout>& layout() const { return layout_; }

  friend bool operator==(const MulTable& a, const MulTable& b) {
    return a.k_ == b.k_ && a.cells_ == b.cells_;
  }

 private:
  int k_;
  std::size_t n_;
  std::vector<SignedBasis> cells_;
  std::optional<Layout> layout_;
};

/// Table of normalize_product over all pairs, 1 <= k <= kMaxLevel.  Throws
/// Error if the result breaks a table invariant.
MulTable build_table(int k);

/// The pair u = (u0×u1) + (u1×u3), v = (u1×u2) - (((u0×u1)×u2)×u3) in
/// R^(2^(k+1)-1), i.e. u = e3 + e10 and v = e6 - e15.  Requires k >= 3.
std::pair<Vector, Vector> counterexample_vectors(int k);

// Serialization.  Markdown mirrors the printed layout with labels e₁..e_n;
// CSV has n lines of n signed integers; JSON is {"k", "n", "cells"}.
std::string table_to_markdown(const MulTable& table);
std::string table_to_csv(const MulTable& table);
std::string table_to_json(const MulTable& table);
MulTable table_from_json(std::string_view text);

}  // namespace xprod
