#pragma once

// Double-precision inner loops used by floating-mode evaluation.  Each
// kernel has a portable scalar reference and, on x86-64, an AVX2/FMA
// variant chosen once at runtime.  Exact-mode arithmetic never goes
// through here.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace xprod::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

/// Best ISA the running CPU supports.  Setting XPROD_FORCE_SCALAR in the
/// environment pins the scalar path.
Isa detect_isa();
/// The ISA used by the dispatching entry points (detected once).
Isa active_isa();
bool isa_available(Isa isa);

/// Row-gather form of a multiplication table: for output coordinate m and
/// row i, the single column j with T[i][j] = sign e_m.  sign == 0 means no
/// such column.  Entries are stored row-major at [i * n + m].
struct GatherLayout {
  std::size_t n = 0;
  std::span<const std::int32_t> column;
  std::span<const double> sign;
};

double dot(std::span<const double> a, std::span<const double> b);
/// out[m] = sum_i u[i] * sign[i][m] * v[column[i][m]]
void table_product(const GatherLayout& layout, std::span<const double> u,
                   std::span<const double> v, std::span<double> out);

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
void table_product(const GatherLayout& layout, std::span<const double> u,
                   std::span<const double> v, std::span<double> out);
}  // namespace scalar

namespace avx2 {
// Only callable when isa_available(Isa::kAvx2).
double dot(std::span<const double> a, std::span<const double> b);
void table_product(const GatherLayout& layout, std::span<const double> u,
                   std::span<const double> v, std::span<double> out);
}  // namespace avx2

}  // namespace xprod::kernels
