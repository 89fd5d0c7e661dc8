#include "xprod/rewrite.hpp"

#include <array>
#include <bit>
#include <string>

#include "xprod/error.hpp"
#include "xprod/table.hpp"

namespace xprod {

// ---------------------------------------------------------------------------
// Terms

Term Term::generator(int b) {
  auto node = std::make_shared<Node>();
  node->generator = b;
  return Term(std::move(node));
}

Term Term::product(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->left = std::make_shared<const Term>(std::move(left));
  node->right = std::make_shared<const Term>(std::move(right));
  return Term(std::move(node));
}

Term Term::word(BasisWord w) {
  std::optional<Term> t;
  const std::uint32_t g = w.generators();
  for (int b = 0; b <= w.top(); ++b) {
    if (!(g >> b & 1)) continue;
    t = t ? product(std::move(*t), generator(b)) : generator(b);
  }
  return *t;
}

namespace {

// Generator set of a canonical word, or 0 if the tree is not one.
std::uint32_t word_mask(const Term& t) {
  if (t.is_generator()) return std::uint32_t{1} << t.generator_id();
  if (!t.right().is_generator()) return 0;
  const std::uint32_t inner = word_mask(t.left());
  const int b = t.right().generator_id();
  if (inner == 0 || static_cast<int>(std::bit_width(inner)) > b) return 0;
  return inner | (std::uint32_t{1} << b);
}

}  // namespace

bool Term::is_word() const { return word_mask(*this) != 0; }

BasisWord Term::as_word() const {
  const std::uint32_t mask = word_mask(*this);
  if (mask == 0) throw Error("term " + to_string() + " is not a basis word");
  return BasisWord(mask);
}

std::string Term::to_string() const {
  if (is_generator()) return "u" + subscript(generator_id());
  auto side = [](const Term& t) {
    return t.is_generator() ? t.to_string() : "(" + t.to_string() + ")";
  };
  return side(left()) + "×" + side(right());
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_generator() || b.is_generator()) {
    return a.is_generator() && b.is_generator() && a.generator_id() == b.generator_id();
  }
  return a.left() == b.left() && a.right() == b.right();
}

std::string Expr::to_string() const {
  if (is_zero()) return "0";
  if (sign > 0) return term->to_string();
  if (term->is_generator()) return "−" + term->to_string();
  return "−(" + term->to_string() + ")";
}

// ---------------------------------------------------------------------------
// Rules

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 5> kRuleNames{{
    {Rule::kSquareZero, "square-zero"},
    {Rule::kAntisymmetry, "antisymmetry"},
    {Rule::kCancellation, "cancellation"},
    {Rule::kShift, "shift"},
    {Rule::kLevelSplit, "level-split"},
}};

// Rewrites one product node; nullopt when the rule does not match.
std::optional<Expr> rewrite_node(const Term& s, Rule rule) {
  if (s.is_generator()) return std::nullopt;
  const Term& l = s.left();
  const Term& r = s.right();
  switch (rule) {
    case Rule::kSquareZero:
      if (l == r) return Expr::zero();
      return std::nullopt;
    case Rule::kAntisymmetry:
      return Expr::of(-1, Term::product(r, l));
    case Rule::kCancellation:
      // x × (x × y) -> -y
      if (!r.is_generator() && r.left() == l && !(r.right() == l)) {
        return Expr::of(-1, r.right());
      }
      return std::nullopt;
    case Rule::kShift: {
      // w × (v × u) -> -((w × v) × u), w, v, u distinct
      if (r.is_generator()) return std::nullopt;
      const Term& v = r.left();
      const Term& u = r.right();
      if (l == v || l == u || v == u) return std::nullopt;
      return Expr::of(-1, Term::product(Term::product(l, v), u));
    }
    case Rule::kLevelSplit:
      // (y1 × u) × (y2 × u) -> -(y1 × y2), y1 != y2
      if (l.is_generator() || r.is_generator()) return std::nullopt;
      if (!(l.right() == r.right()) || l.left() == r.left()) return std::nullopt;
      return Expr::of(-1, Term::product(l.left(), r.left()));
  }
  return std::nullopt;
}

std::optional<Term> replace_at(const Term& t, std::string_view path,
                               const Term& replacement) {
  if (path.empty()) return replacement;
  if (t.is_generator()) return std::nullopt;
  if (path.front() == 'L') {
    auto left = replace_at(t.left(), path.substr(1), replacement);
    if (!left) return std::nullopt;
    return Term::product(std::move(*left), t.right());
  }
  if (path.front() == 'R') {
    auto right = replace_at(t.right(), path.substr(1), replacement);
    if (!right) return std::nullopt;
    return Term::product(t.left(), std::move(*right));
  }
  return std::nullopt;
}

const Term* subterm_at(const Term& t, std::string_view path) {
  const Term* cur = &t;
  for (char c : path) {
    if (cur->is_generator()) return nullptr;
    if (c == 'L') {
      cur = &cur->left();
    } else if (c == 'R') {
      cur = &cur->right();
    } else {
      return nullptr;
    }
  }
  return cur;
}

}  // namespace

std::string_view to_string(Rule rule) {
  for (auto [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (auto [r, n] : kRuleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::optional<Expr> apply_rule(const Expr& expr, Rule rule, std::string_view path) {
  if (expr.is_zero()) return std::nullopt;
  const Term* s = subterm_at(*expr.term, path);
  if (s == nullptr) return std::nullopt;
  auto rewritten = rewrite_node(*s, rule);
  if (!rewritten) return std::nullopt;
  if (rewritten->is_zero()) return Expr::zero();
  auto term = replace_at(*expr.term, path, *rewritten->term);
  if (!term) return std::nullopt;
  return Expr::of(expr.sign * rewritten->sign, std::move(*term));
}

// ---------------------------------------------------------------------------
// Normalization
//
// Reducing y_a × y_b with both operands basis words.  Let u be the largest
// generator present in either.  Each operand is y (no u), u itself, or y × u
// with y one level down.  The pair of shapes picks the rule:
//
//   y  × u        already a basis word
//   u  × y        antisymmetry
//   y  × (y × u)  cancellation, giving -u
//   y1 × (y2 × u) shift to -((y1 × y2) × u), then reduce y1 × y2
//   (y × u) × y'  antisymmetry, then as above
//   (y1 × u) × (y2 × u)   level-split to -(y1 × y2), then reduce
//   u  × (y × u)  antisymmetry on the right factor, then cancellation
//   (y × u) × u   antisymmetry, then as above
//
// Every recursive reduction is on strictly lower generators.

namespace {

enum class Shape { kLow, kTop, kLowTimesTop };

Shape shape_of(std::uint32_t word, std::uint32_t top) {
  if (word == top) return Shape::kTop;
  return (word & top) ? Shape::kLowTimesTop : Shape::kLow;
}

struct SignedMask {
  int sign = 0;
  std::uint32_t mask = 0;
};

SignedMask reduce_masks(std::uint32_t a, std::uint32_t b) {
  if (a == b) return {};
  const std::uint32_t top = std::bit_floor(a | b);
  const Shape sa = shape_of(a, top);
  const Shape sb = shape_of(b, top);
  switch (sa) {
    case Shape::kLow:
      if (sb == Shape::kTop) return {1, a | top};
      {
        const std::uint32_t y2 = b & ~top;
        if (y2 == a) return {-1, top};
        const SignedMask inner = reduce_masks(a, y2);
        return {-inner.sign, inner.mask | top};
      }
    case Shape::kTop:
      if (sb == Shape::kLow) return {-1, b | top};
      return {1, b & ~top};
    case Shape::kLowTimesTop:
      if (sb == Shape::kLowTimesTop) {
        const SignedMask inner = reduce_masks(a & ~top, b & ~top);
        return {-inner.sign, inner.mask};
      }
      {
        const SignedMask swapped = reduce_masks(b, a);
        return {-swapped.sign, swapped.mask};
      }
  }
  return {};
}

class TracedReducer {
 public:
  explicit TracedReducer(Expr start) : current_(std::move(start)) {}

  void reduce(const TermPath& path) {
    if (current_.is_zero()) return;
    const Term* node = subterm_at(*current_.term, path);
    const std::uint32_t a = word_mask(node->left());
    const std::uint32_t b = word_mask(node->right());
    if (a == b) return step(Rule::kSquareZero, path);
    const std::uint32_t top = std::bit_floor(a | b);
    const Shape sa = shape_of(a, top);
    const Shape sb = shape_of(b, top);

    switch (sa) {
      case Shape::kLow:
        if (sb == Shape::kTop) return;
        if ((b & ~top) == a) return step(Rule::kCancellation, path);
        step(Rule::kShift, path);
        return reduce(path + "L");
      case Shape::kTop:
        if (sb == Shape::kLow) return step(Rule::kAntisymmetry, path);
        step(Rule::kAntisymmetry, path + "R");
        return step(Rule::kCancellation, path);
      case Shape::kLowTimesTop:
        if (sb == Shape::kLowTimesTop) {
          step(Rule::kLevelSplit, path);
        } else {
          step(Rule::kAntisymmetry, path);
        }
        return reduce(path);
    }
  }

  RewriteTrace finish(Expr start) {
    return RewriteTrace{std::move(steps_), std::move(start), current_};
  }

 private:
  void step(Rule rule, const TermPath& path) {
    auto next = apply_rule(current_, rule, path);
    if (!next) {
      throw Error("rule " + std::string(to_string(rule)) + " does not apply to " +
                  current_.to_string() + " at '" + path + "'");
    }
    steps_.push_back({rule, path, current_, *next});
    current_ = std::move(*next);
  }

  Expr current_;
  std::vector<RewriteStep> steps_;
};

void require_indices(BasisIndex i, BasisIndex j, int k) {
  if (k < 0 || k > kMaxLevel) {
    throw RangeError("level k=" + std::to_string(k) + " outside 0.." +
                     std::to_string(kMaxLevel));
  }
  const BasisIndex n = basis_size(k);
  if (i < 1 || i > n || j < 1 || j > n) {
    throw RangeError("basis index outside 1.." + std::to_string(n) + " for k=" +
                     std::to_string(k));
  }
}

SignedBasis to_signed_basis(const Expr& e) {
  if (e.is_zero()) return SignedBasis::zero();
  return SignedBasis::make(e.sign, word_to_index(e.term->as_word()));
}

}  // namespace

SignedBasis normalize_product(BasisIndex i, BasisIndex j, int k) {
  require_indices(i, j, k);
  const SignedMask r = reduce_masks(i, j);
  if (r.sign == 0) return SignedBasis::zero();
  return SignedBasis::make(r.sign, r.mask);
}

RewriteTrace normalize_product_traced(BasisIndex i, BasisIndex j, int k) {
  require_indices(i, j, k);
  Expr start = Expr::of(1, Term::product(Term::word(index_to_word(i)),
                                         Term::word(index_to_word(j))));
  TracedReducer reducer(start);
  reducer.reduce("");
  RewriteTrace trace = reducer.finish(std::move(start));
  if (!trace.result.is_zero() && !trace.result.term->is_word()) {
    throw Error("reduction of e" + std::to_string(i) + "×e" + std::to_string(j) +
                " stopped at " + trace.result.to_string());
  }
  return trace;
}

bool replay_trace(const RewriteTrace& trace, SignedBasis expected) {
  if (trace.start.is_zero() || trace.start.sign != 1) return false;
  const Term& start = *trace.start.term;
  if (start.is_generator() || !start.left().is_word() || !start.right().is_word()) {
    return false;
  }
  Expr current = trace.start;
  for (const auto& s : trace.steps) {
    if (!(s.before == current)) return false;
    auto next = apply_rule(current, s.rule, s.path);
    if (!next || !(*next == s.after)) return false;
    current = std::move(*next);
  }
  if (!(current == trace.result)) return false;
  if (!current.is_zero() && !current.term->is_word()) return false;
  return to_signed_basis(current) == expected;
}

}  // namespace xprod
