#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xprod/scalar.hpp"

namespace xprod {

/// Dense coordinate vector.  All coordinates share one scalar mode, and
/// arithmetic between vectors of different modes throws ModeError.
///
/// Coordinates are 0-indexed in storage; unit() and everything printed for
/// users use 1-indexed basis labels e_1..e_n.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Rational> coords);
  explicit Vector(std::vector<double> coords);

  static Vector zeros(std::size_t dim, ScalarMode mode = ScalarMode::kExact);
  /// The standard unit vector e_index, 1 <= index <= dim.
  static Vector unit(std::size_t dim, std::size_t index,
                     ScalarMode mode = ScalarMode::kExact);

  /// Parses "1,-2/3,0".  The shorthand "e3" denotes a unit vector and then
  /// requires `dim`; otherwise `dim` (when nonzero) is checked.
  static Vector parse(std::string_view text, ScalarMode mode,
                      std::size_t dim = 0);

  std::size_t dim() const;
  ScalarMode mode() const {
    return std::holds_alternative<std::vector<Rational>>(coords_)
               ? ScalarMode::kExact
               : ScalarMode::kFloat;
  }

  Scalar operator[](std::size_t i) const;
  std::span<const Rational> exact() const;
  std::span<const double> floating() const;

  bool is_zero() const;
  /// Comma-separated literal form accepted by parse().
  std::string to_string() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a);
  friend Vector operator*(const Scalar& s, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  std::variant<std::vector<Rational>, std::vector<double>> coords_;
};

/// Standard inner product sum u_i v_i.
Scalar dot(const Vector& u, const Vector& v);

/// Throws DimensionError / ModeError unless u and v agree.
void require_compatible(const Vector& u, const Vector& v);

}  // namespace xprod
