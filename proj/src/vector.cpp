#include "xprod/vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xprod/error.hpp"
#include "xprod/kernels.hpp"

namespace xprod {

namespace {

template <typename T, typename Op>
std::vector<T> zip(std::span<const T> a, std::span<const T> b, Op op) {
  std::vector<T> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(op(a[i], b[i]));
  return out;
}

template <typename Op>
Vector zip_vectors(const Vector& a, const Vector& b, Op op) {
  require_compatible(a, b);
  if (a.mode() == ScalarMode::kExact) {
    return Vector(zip<Rational>(a.exact(), b.exact(),
                                [&](const Rational& x, const Rational& y) {
                                  return Rational(op(x, y));
                                }));
  }
  return Vector(zip<double>(a.floating(), b.floating(), op));
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

Vector::Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& q : std::get<std::vector<Rational>>(coords_)) q.canonicalize();
}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {}

Vector Vector::zeros(std::size_t dim, ScalarMode mode) {
  if (mode == ScalarMode::kExact) return Vector(std::vector<Rational>(dim));
  return Vector(std::vector<double>(dim, 0.0));
}

Vector Vector::unit(std::size_t dim, std::size_t index, ScalarMode mode) {
  if (index < 1 || index > dim) {
    throw RangeError("basis index " + std::to_string(index) + " outside 1.." +
                     std::to_string(dim));
  }
  if (mode == ScalarMode::kExact) {
    std::vector<Rational> c(dim);
    c[index - 1] = 1;
    return Vector(std::move(c));
  }
  std::vector<double> c(dim, 0.0);
  c[index - 1] = 1.0;
  return Vector(std::move(c));
}

Vector Vector::parse(std::string_view text, ScalarMode mode, std::size_t dim) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty vector literal");

  if (text.front() == 'e' && text.find(',') == std::string_view::npos) {
    if (dim == 0) throw ParseError("'" + std::string(text) + "' needs a dimension");
    Rational idx = parse_rational(text.substr(1));
    if (idx.get_den() != 1 || idx < 1 || idx > static_cast<unsigned long>(dim)) {
      throw ParseError("bad basis vector '" + std::string(text) + "' in R^" +
                       std::to_string(dim));
    }
    return unit(dim, idx.get_num().get_ui(), mode);
  }

  Vector v;
  auto parts = split_commas(text);
  if (mode == ScalarMode::kExact) {
    std::vector<Rational> c;
    for (auto p : parts) c.push_back(parse_rational(p));
    v = Vector(std::move(c));
  } else {
    std::vector<double> c;
    for (auto p : parts) c.push_back(parse_double(p));
    v = Vector(std::move(c));
  }
  if (dim != 0 && v.dim() != dim) {
    throw DimensionError("expected " + std::to_string(dim) + " coordinates, got " +
                         std::to_string(v.dim()));
  }
  return v;
}

std::size_t Vector::dim() const {
  return std::visit([](const auto& c) { return c.size(); }, coords_);
}

Scalar Vector::operator[](std::size_t i) const {
  if (mode() == ScalarMode::kExact) return Scalar(exact()[i]);
  return Scalar(floating()[i]);
}

std::span<const Rational> Vector::exact() const {
  if (auto* c = std::get_if<std::vector<Rational>>(&coords_)) return *c;
  throw ModeError("vector is not exact");
}

std::span<const double> Vector::floating() const {
  if (auto* c = std::get_if<std::vector<double>>(&coords_)) return *c;
  throw ModeError("vector is not floating");
}

bool Vector::is_zero() const {
  return std::visit(
      [](const auto& c) {
        for (const auto& x : c) {
          if (x != 0) return false;
        }
        return true;
      },
      coords_);
}

std::string Vector::to_string() const {
  std::string out;
  std::visit(
      [&](const auto& c) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i) out += ',';
          if constexpr (std::is_same_v<std::decay_t<decltype(c[i])>, Rational>) {
            out += format_rational(c[i]);
          } else {
            out += format_double(c[i]);
          }
        }
      },
      coords_);
  return out;
}

void require_compatible(const Vector& u, const Vector& v) {
  if (u.mode() != v.mode()) throw ModeError("mixed exact and floating vectors");
  if (u.dim() != v.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()));
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  return zip_vectors(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Vector operator-(const Vector& a, const Vector& b) {
  return zip_vectors(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Vector operator-(const Vector& a) {
  if (a.mode() == ScalarMode::kExact) return Scalar(Rational(-1)) * a;
  return Scalar(-1.0) * a;
}

Vector operator*(const Scalar& s, const Vector& v) {
  if (s.mode() != v.mode()) throw ModeError("mixed exact and floating operands");
  if (v.mode() == ScalarMode::kExact) {
    std::vector<Rational> c;
    c.reserve(v.dim());
    for (const auto& x : v.exact()) c.push_back(s.exact() * x);
    return Vector(std::move(c));
  }
  std::vector<double> c;
  c.reserve(v.dim());
  for (double x : v.floating()) c.push_back(s.floating() * x);
  return Vector(std::move(c));
}

bool operator==(const Vector& a, const Vector& b) {
  require_compatible(a, b);
  if (a.mode() == ScalarMode::kExact) {
    auto x = a.exact(), y = b.exact();
    return std::equal(x.begin(), x.end(), y.begin());
  }
  auto x = a.floating(), y = b.floating();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > kFloatTolerance) return false;
  }
  return true;
}

Scalar dot(const Vector& u, const Vector& v) {
  require_compatible(u, v);
  if (u.mode() == ScalarMode::kFloat) {
    return Scalar(kernels::dot(u.floating(), v.floating()));
  }
  Rational sum = 0;
  auto x = u.exact(), y = v.exact();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && y[i] != 0) sum += x[i] * y[i];
  }
  return Scalar(std::move(sum));
}

}  // namespace xprod
