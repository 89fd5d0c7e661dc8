#include "xprod/scalar.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "xprod/error.hpp"

namespace xprod {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw ParseError("not a number: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

std::string_view to_string(ScalarMode mode) {
  return mode == ScalarMode::kExact ? "exact" : "float";
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), s);
    std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
      throw ParseError("denominator must be positive: '" + std::string(s) + "'");
    }
    mpz_class den = parse_integer(den_text, s);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("not a number: '" + std::string(s) + "'");
    }
    mpz_class whole = int_part.empty() ? mpz_class(0) : parse_integer(int_part, s);
    mpz_class frac = frac_part.empty() ? mpz_class(0) : parse_integer(frac_part, s);
    if (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+')) {
      throw ParseError("not a number: '" + std::string(s) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Rational q(whole * scale + frac, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(s, s));
}

double parse_double(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    double num = parse_double(s.substr(0, slash));
    double den = parse_double(s.substr(slash + 1));
    if (den == 0.0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    return num / den;
  }
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size() ||
      !std::isfinite(value)) {
    throw ParseError("not a number: '" + std::string(s) + "'");
  }
  return value;
}

Scalar::Scalar(Rational q) : value_(std::move(q)) {
  std::get<Rational>(value_).canonicalize();
}

Scalar Scalar::zero(ScalarMode mode) {
  return mode == ScalarMode::kExact ? Scalar(Rational(0)) : Scalar(0.0);
}

Scalar Scalar::parse(std::string_view text, ScalarMode mode) {
  return mode == ScalarMode::kExact ? Scalar(parse_rational(text))
                                    : Scalar(parse_double(text));
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x == 0; }, value_);
}

const Rational& Scalar::exact() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  throw ModeError("scalar is not exact");
}

double Scalar::floating() const {
  if (auto* x = std::get_if<double>(&value_)) return *x;
  throw ModeError("scalar is not floating");
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<Rational>(&value_)) return format_rational(*q);
  return format_double(std::get<double>(value_));
}

namespace {

template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.mode() != b.mode()) throw ModeError("mixed exact and floating scalars");
  if (a.mode() == ScalarMode::kExact) return Scalar(Rational(op(a.exact(), b.exact())));
  return Scalar(op(a.floating(), b.floating()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator-(const Scalar& a) {
  if (a.mode() == ScalarMode::kExact) return Scalar(Rational(-a.exact()));
  return Scalar(-a.floating());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw ModeError("mixed exact and floating scalars");
  if (a.mode() == ScalarMode::kExact) return a.exact() == b.exact();
  return std::abs(a.floating() - b.floating()) <= kFloatTolerance;
}

}  // namespace xprod
