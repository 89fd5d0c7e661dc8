#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "xprod/table.hpp"
#include "xprod/vector.hpp"

namespace xprod {

/// A named bilinear product on exact vectors of a fixed dimension.
class ProductUnderTest {
 public:
  using Evaluator = std::function<Vector(const Vector&, const Vector&)>;

  ProductUnderTest(std::string name, std::size_t dim, Evaluator evaluator,
                   std::shared_ptr<const MulTable> table = nullptr);

  static ProductUnderTest cross3();
  static ProductUnderTest cross7();
  static ProductUnderTest padded(std::size_t dim);
  /// det_product on two rows; binary only in R^3.
  static ProductUnderTest det3();
  static ProductUnderTest table(std::shared_ptr<const MulTable> table);
  static ProductUnderTest table(int k);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  /// Present for table products.
  const MulTable* mul_table() const { return table_.get(); }

  /// A pair known to break the Pythagorean property, tried before any
  /// sampling: the counterexample pair for tables with k >= 3, and
  /// u = e4, v = e1 for the padded product in R^n, n >= 4.
  const std::optional<std::pair<Vector, Vector>>& known_counterexample() const {
    return known_counterexample_;
  }
  ProductUnderTest with_counterexample(Vector u, Vector v) &&;

  /// Throws DimensionError / ModeError unless both operands are exact and
  /// of dimension dim().
  Vector operator()(const Vector& u, const Vector& v) const;

 private:
  std::string name_;
  std::size_t dim_;
  Evaluator evaluator_;
  std::shared_ptr<const MulTable> table_;
  std::optional<std::pair<Vector, Vector>> known_counterexample_;
};

enum class Axiom {
  kPerpendicular,     // u·(u×v) = 0 and v·(u×v) = 0
  kPythagorean,       // (u×v)·(u×v) + (u·v)² = (u·u)(v·v)
  kBilinear,          // (au+bũ)×(cv+dṽ) = ac(u×v)+ad(u×ṽ)+bc(ũ×v)+bd(ũ×ṽ)
  kScalarTriple,      // w·(u×v) = -u·(w×v)
  kAnticommutative,   // u×v = -v×u
  kDoubleCross,       // v×(v×u) = (v·u)v - (v·v)u
  kTripleExpansion,   // w×(v×u) = -((w×v)×u) + (u·v)w + (w·v)u - 2(w·u)v
  kUnitCancellation,  // u×(u×v) = -v, orthonormal u, v
  kUnitShift,         // w×(v×u) = -((w×v)×u), orthonormal u, v, w
  kOrthonormalClosure,  // e_i·e_j = δ_ij and e_i×e_j = ±e_m for i != j
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::kPerpendicular,   Axiom::kPythagorean,     Axiom::kBilinear,
    Axiom::kScalarTriple,    Axiom::kAnticommutative, Axiom::kDoubleCross,
    Axiom::kTripleExpansion, Axiom::kUnitCancellation, Axiom::kUnitShift};

inline constexpr Axiom kIdentities[] = {
    Axiom::kScalarTriple,    Axiom::kAnticommutative,  Axiom::kDoubleCross,
    Axiom::kTripleExpansion, Axiom::kUnitCancellation, Axiom::kUnitShift};

std::string_view to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

enum class Verdict { kHoldsOnAllSamples, kRefuted };
std::string_view to_string(Verdict verdict);

/// Either side of a checked equation.
using Quantity = std::variant<Rational, Vector>;
std::string to_string(const Quantity& q);

/// The inputs on which an axiom failed, plus both sides of the equation as
/// evaluated on them.  `vectors` holds u, v and, where used, w, ũ, ṽ;
/// `scalars` holds a, b, c, d for the bilinear check.
struct Witness {
  std::vector<std::pair<std::string, Vector>> vectors;
  std::vector<std::pair<std::string, Rational>> scalars;
  /// Which equation was violated when an axiom has more than one
  /// (e.g. "v·(u×v)").
  std::string equation;
  Quantity lhs;
  Quantity rhs;

  const Vector* vector(std::string_view name) const;
  const Rational* scalar(std::string_view name) const;
};

struct AxiomReport {
  std::string product;
  std::size_t dim = 0;
  Axiom axiom = Axiom::kPerpendicular;
  Verdict verdict = Verdict::kHoldsOnAllSamples;
  std::optional<Witness> witness;
  /// Random samples requested.
  std::size_t samples = 0;
  /// Cases evaluated in total: injected witnesses, basis tuples and random
  /// samples, up to the first refutation.
  std::size_t cases_checked = 0;
  std::uint64_t seed = 0;

  bool refuted() const { return verdict == Verdict::kRefuted; }
};

/// Random rationals for sampling: numerators in [-9, 9], denominators in
/// {1, 2, 3}.  Every sample index gets its own generator derived from
/// (seed, stream, index), so samples can be drawn in any order.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
  Rational rational();
  Vector vector(std::size_t dim);
  /// Uniform in [0, bound).
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 rng_;
};

// Every check evaluates exactly.  Deterministic basis tuples are tried
// before random samples: all (e_i, e_j) pairs when n <= 127, and all
// triples of basis vectors when n <= 15.
AxiomReport check_perpendicular(const ProductUnderTest& p, std::size_t samples,
                                std::uint64_t seed);
/// The product's known counterexample, if any, is tried first.
AxiomReport check_pythagorean(const ProductUnderTest& p, std::size_t samples,
                              std::uint64_t seed);
AxiomReport check_bilinear(const ProductUnderTest& p, std::size_t samples,
                           std::uint64_t seed);
/// One report per entry of kIdentities.  The two orthonormal identities
/// sample triples of distinct standard basis vectors only.
std::vector<AxiomReport> check_identities(const ProductUnderTest& p,
                                          std::size_t samples,
                                          std::uint64_t seed);
AxiomReport check_axiom(const ProductUnderTest& p, Axiom axiom,
                        std::size_t samples, std::uint64_t seed);

/// Re-evaluates the witness of a refuted report from scratch and returns
/// true when it violates the axiom with the recorded lhs and rhs.
bool replay_witness(const ProductUnderTest& p, const AxiomReport& report);

/// Closure of the table (every off-diagonal cell is a signed basis element)
/// and orthonormality of its standard-basis realization.
AxiomReport orthonormal_closure_check(const MulTable& table);

struct DimensionVerdict {
  int k = 0;
  std::size_t n = 0;
  bool pythagorean_refuted = false;
  std::optional<Witness> witness;
  AxiomReport report;
};

inline constexpr std::size_t kDefaultSamples = 1000;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// Builds the table for each 1 <= k <= max_k and checks the Pythagorean
/// property on it.  1 <= max_k <= 6.
std::vector<DimensionVerdict> classify_dimensions(
    int max_k, std::size_t samples = kDefaultSamples,
    std::uint64_t seed = kDefaultSeed);

/// Dimensions admitting a cross product given the verdicts: 0 and 1 (zero
/// map) plus every n whose Pythagorean check held.
std::vector<std::size_t> surviving_dimensions(
    const std::vector<DimensionVerdict>& verdicts);

/// Known outcome of `axiom` on a product family, if one is established.
/// `family` is one of cross3, cross7, det, padded, table; `level` is k for
/// tables.
std::optional<Verdict> expected_verdict(std::string_view family,
                                        std::size_t dim, int level,
                                        Axiom axiom);

std::string report_to_json(const AxiomReport& report);
std::string reports_to_json(const std::vector<AxiomReport>& reports);

}  // namespace xprod
