#include "xprod/kernels.hpp"

#include <cstdlib>

namespace xprod::kernels {

std::string_view to_string(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) {
  if (isa == Isa::kScalar) return true;
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect_isa() {
  if (std::getenv("XPROD_FORCE_SCALAR") != nullptr) return Isa::kScalar;
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

Isa active_isa() {
  static const Isa isa = detect_isa();
  return isa;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (active_isa() == Isa::kAvx2) return avx2::dot(a, b);
  return scalar::dot(a, b);
}

void table_product(const GatherLayout& layout, std::span<const double> u,
                   std::span<const double> v, std::span<double> out) {
  if (active_isa() == Isa::kAvx2) return avx2::table_product(layout, u, v, out);
  scalar::table_product(layout, u, v, out);
}

namespace scalar {

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

void table_product(const GatherLayout& layout, std::span<const double> u,
                   std::span<const double> v, std::span<double> out) {
  const std::size_t n = layout.n;
  for (std::size_t m = 0; m < n; ++m) out[m] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0.0) continue;
    const std::int32_t* col = layout.column.data() + i * n;
    const double* sgn = layout.sign.data() + i * n;
    for (std::size_t m = 0; m < n; ++m) out[m] += u[i] * sgn[m] * v[col[m]];
  }
}

}  // namespace scalar

}  // namespace xprod::kernels
