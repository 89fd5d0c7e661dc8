#include "xprod/products.hpp"

#include <array>
#include <string>
#include <unordered_map>

#include "xprod/error.hpp"
#include "xprod/kernels.hpp"

namespace xprod {

namespace {

void require_dim(const Vector& u, const Vector& v, std::size_t dim,
                 const char* what) {
  require_compatible(u, v);
  if (u.dim() != dim) {
    throw DimensionError(std::string(what) + " needs dimension " +
                         std::to_string(dim) + ", got " + std::to_string(u.dim()));
  }
}

// Dispatches a coordinate formula on the vectors' scalar mode.
template <typename Formula>
Vector apply_formula(const Vector& u, const Vector& v, Formula f) {
  if (u.mode() == ScalarMode::kExact) {
    return Vector(f(u.exact(), v.exact(), Rational()));
  }
  return Vector(f(u.floating(), v.floating(), 0.0));
}

template <typename T>
std::vector<T> cross3_coords(std::span<const T> x, std::span<const T> y) {
  return {T(x[1] * y[2] - x[2] * y[1]), T(x[2] * y[0] - x[0] * y[2]),
          T(x[0] * y[1] - x[1] * y[0])};
}

// Shifted so that x(1)..x(7) read like the written formula.
template <typename T>
std::vector<T> cross7_coords(std::span<const T> xs, std::span<const T> ys) {
  auto x = [&](int i) -> const T& { return xs[i - 1]; };
  auto y = [&](int i) -> const T& { return ys[i - 1]; };
  return {
      T(-x(3) * y(2) + x(2) * y(3) - x(5) * y(4) + x(4) * y(5) - x(6) * y(7) + x(7) * y(6)),
      T(-x(1) * y(3) + x(3) * y(1) - x(6) * y(4) + x(4) * y(6) - x(7) * y(5) + x(5) * y(7)),
      T(-x(2) * y(1) + x(1) * y(2) - x(7) * y(4) + x(4) * y(7) - x(5) * y(6) + x(6) * y(5)),
      T(-x(1) * y(5) + x(5) * y(1) - x(2) * y(6) + x(6) * y(2) - x(3) * y(7) + x(7) * y(3)),
      T(-x(4) * y(1) + x(1) * y(4) - x(2) * y(7) + x(7) * y(2) - x(6) * y(3) + x(3) * y(6)),
      T(-x(7) * y(1) + x(1) * y(7) - x(4) * y(2) + x(2) * y(4) - x(3) * y(5) + x(5) * y(3)),
      T(-x(5) * y(2) + x(2) * y(5) - x(4) * y(3) + x(3) * y(4) - x(1) * y(6) + x(6) * y(1)),
  };
}

}  // namespace

Vector cross3(const Vector& u, const Vector& v) {
  require_dim(u, v, 3, "cross3");
  return apply_formula(u, v, [](auto x, auto y, auto tag) {
    return cross3_coords<decltype(tag)>(x, y);
  });
}

Vector cross7(const Vector& u, const Vector& v) {
  require_dim(u, v, 7, "cross7");
  return apply_formula(u, v, [](auto x, auto y, auto tag) {
    return cross7_coords<decltype(tag)>(x, y);
  });
}

Vector padded_cross(const Vector& u, const Vector& v) {
  require_compatible(u, v);
  const std::size_t n = u.dim();
  if (n < 3) {
    throw DimensionError("padded product needs dimension >= 3, got " +
                         std::to_string(n));
  }
  return apply_formula(u, v, [n](auto x, auto y, auto tag) {
    using T = decltype(tag);
    auto head = cross3_coords<T>(x.first(3), y.first(3));
    head.resize(n, T(0));
    return head;
  });
}

Vector table_product(const MulTable& table, const Vector& u, const Vector& v) {
  require_dim(u, v, table.n(), "table product");
  const std::size_t n = table.n();

  if (u.mode() == ScalarMode::kFloat) {
    std::vector<double> out(n);
    if (const auto& layout = table.layout()) {
      kernels::GatherLayout g{n, layout->column, layout->sign};
      kernels::table_product(g, u.floating(), v.floating(), out);
      return Vector(std::move(out));
    }
    auto x = u.floating(), y = v.floating();
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const SignedBasis& c = table.at(i, j);
        if (!c.is_zero()) out[c.index() - 1] += c.sign() * x[i - 1] * y[j - 1];
      }
    }
    return Vector(std::move(out));
  }

  auto x = u.exact(), y = v.exact();
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j] != 0) support.push_back(j);
  }
  std::vector<Rational> out(n);
  Rational term;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j : support) {
      const SignedBasis& c = table.at(i + 1, j + 1);
      if (c.is_zero()) continue;
      term = x[i] * y[j];
      if (c.sign() > 0) {
        out[c.index() - 1] += term;
      } else {
        out[c.index() - 1] -= term;
      }
    }
  }
  return Vector(std::move(out));
}

namespace {

template <typename T>
class MinorEvaluator {
 public:
  explicit MinorEvaluator(std::vector<std::span<const T>> rows) : rows_(std::move(rows)) {}

  // Determinant of the last popcount(cols) rows restricted to columns `cols`,
  // expanded along its first row.
  const T& det(std::uint32_t cols) {
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    const int size = __builtin_popcount(cols);
    T value(0);
    if (size == 0) {
      value = T(1);
    } else {
      const auto& row = rows_[rows_.size() - size];
      int position = 0;
      for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1, ++position) {
        const int c = __builtin_ctz(rest);
        if (row[c] == 0) continue;
        T term = row[c] * det(cols & ~(std::uint32_t{1} << c));
        if (position % 2 == 0) {
          value += term;
        } else {
          value -= term;
        }
      }
    }
    return memo_.emplace(cols, std::move(value)).first->second;
  }

 private:
  std::vector<std::span<const T>> rows_;
  std::unordered_map<std::uint32_t, T> memo_;
};

template <typename T, typename Get>
std::vector<T> det_coords(std::span<const Vector> rows, std::size_t n, Get get) {
  std::vector<std::span<const T>> spans;
  for (const auto& r : rows) spans.push_back(get(r));
  MinorEvaluator<T> minors(std::move(spans));
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::vector<T> out;
  for (std::size_t m = 0; m < n; ++m) {
    const T& minor = minors.det(all & ~(std::uint32_t{1} << m));
    out.push_back(m % 2 == 0 ? T(minor) : T(-minor));
  }
  return out;
}

}  // namespace

Vector det_product(std::span<const Vector> rows) {
  if (rows.empty()) throw DimensionError("determinant product needs at least one row");
  const std::size_t n = rows.front().dim();
  if (n < 2 || n > kMaxDetDim) {
    throw DimensionError("determinant product supports 2 <= n <= " +
                         std::to_string(kMaxDetDim) + ", got " + std::to_string(n));
  }
  if (rows.size() != n - 1) {
    throw DimensionError("determinant product in R^" + std::to_string(n) + " needs " +
                         std::to_string(n - 1) + " rows, got " +
                         std::to_string(rows.size()));
  }
  for (const auto& r : rows) require_compatible(rows.front(), r);

  if (rows.front().mode() == ScalarMode::kExact) {
    return Vector(det_coords<Rational>(rows, n, [](const Vector& r) { return r.exact(); }));
  }
  return Vector(det_coords<double>(rows, n, [](const Vector& r) { return r.floating(); }));
}

}  // namespace xprod
