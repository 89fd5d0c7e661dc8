#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace xprod {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

enum class ScalarMode { kExact, kFloat };

std::string_view to_string(ScalarMode mode);

/// Absolute tolerance used when comparing floating results.  Never used by
/// axiom decisions, which are always exact.
inline constexpr double kFloatTolerance = 1e-9;

/// Formats as "p" or "p/q".
std::string format_rational(const Rational& q);

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// Accepts "p", "p/q" and finite decimals such as "-0.25".  Decimals are
/// converted exactly.
Rational parse_rational(std::string_view text);

/// Accepts decimal literals and "p/q".
double parse_double(std::string_view text);

/// A real number in one of the two scalar modes.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational q);
  explicit Scalar(double x) : value_(x) {}

  static Scalar zero(ScalarMode mode);
  static Scalar parse(std::string_view text, ScalarMode mode);

  ScalarMode mode() const {
    return std::holds_alternative<Rational>(value_) ? ScalarMode::kExact
                                                    : ScalarMode::kFloat;
  }
  bool is_zero() const;

  /// Throws ModeError unless exact.
  const Rational& exact() const;
  /// Throws ModeError unless floating.
  double floating() const;

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  /// Exact equality in exact mode, kFloatTolerance in floating mode.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> value_;
};

}  // namespace xprod
