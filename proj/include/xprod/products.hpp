#pragma once

#include <span>

#include "xprod/table.hpp"
#include "xprod/vector.hpp"

namespace xprod {

/// Right-hand-rule cross product on R^3.
Vector cross3(const Vector& u, const Vector& v);

/// The seven-dimensional product written out as its 42-term coordinate
/// formula.  Agrees with table_product(build_table(2), u, v).
Vector cross7(const Vector& u, const Vector& v);

/// Bilinear extension of a basis table:
/// (u x v)_m = sum over cells T[i][j] = s e_m of s u_i v_j.
Vector table_product(const MulTable& table, const Vector& u, const Vector& v);

/// Zero-padded extension of cross3 to R^n, n >= 3: the 3D product of the
/// first three coordinates, zeros elsewhere.
Vector padded_cross(const Vector& u, const Vector& v);

/// Largest n accepted by det_product.
inline constexpr std::size_t kMaxDetDim = 12;

/// The (n-1)-ary product given by the formal determinant whose first row is
/// e_1..e_n and whose remaining rows are `rows`.  Coordinate m is
/// (-1)^(1+m) times the minor with column m removed.  Minors are evaluated
/// by cofactor expansion, memoized over column subsets.
Vector det_product(std::span<const Vector> rows);

}  // namespace xprod
