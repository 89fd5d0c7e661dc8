#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xprod/basis.hpp"

namespace xprod {

/// Immutable product tree over generators u_b.
class Term {
 public:
  static Term generator(int b);
  static Term product(Term left, Term right);
  /// Canonical nesting of a basis word.
  static Term word(BasisWord w);

  bool is_generator() const { return !node_->left; }
  int generator_id() const { return node_->generator; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  /// True when the tree is the canonical nesting of some basis word.
  bool is_word() const;
  /// Requires is_word().
  BasisWord as_word() const;

  std::string to_string() const;
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    int generator = -1;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// sign * term, or zero.  Scalar signs are pulled out of products eagerly,
/// which is the bilinear property applied to the factor -1.
struct Expr {
  int sign = 0;
  std::optional<Term> term;

  static Expr zero() { return {}; }
  static Expr of(int sign, Term t) { return {sign, std::move(t)}; }
  bool is_zero() const { return sign == 0; }
  std::string to_string() const;
  friend bool operator==(const Expr&, const Expr&) = default;
};

/// The rewrite rules of the normalizer.  All rules act on a single product
/// node and may flip the overall sign.
enum class Rule {
  kSquareZero,    // x × x -> 0
  kAntisymmetry,  // x × y -> -(y × x)
  kCancellation,  // x × (x × y) -> -y
  kShift,         // w × (v × u) -> -((w × v) × u)
  kLevelSplit,    // (y1 × u) × (y2 × u) -> -(y1 × y2)
};

std::string_view to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view name);

/// Position of a product node: a string of 'L'/'R' steps from the root.
using TermPath = std::string;

/// Applies `rule` at `path`.  Returns nullopt when the subterm there does
/// not match the rule's left-hand side.
std::optional<Expr> apply_rule(const Expr& expr, Rule rule,
                               std::string_view path);

struct RewriteStep {
  Rule rule;
  TermPath path;
  Expr before;
  Expr after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  Expr start;
  Expr result;
};

}  // namespace xprod
