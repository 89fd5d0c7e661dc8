#include "xprod/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define XPROD_HAVE_AVX2_KERNELS 1
#define XPROD_TARGET_AVX2 __attribute__((target("avx2,fma")))
#endif

namespace xprod::kernels::avx2 {

#ifdef XPROD_HAVE_AVX2_KERNELS

namespace {

XPROD_TARGET_AVX2 double dot_impl(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  __m256d acc = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

XPROD_TARGET_AVX2 void table_product_impl(const std::int32_t* column,
                                          const double* sign, std::size_t n,
                                          const double* u, const double* v,
                                          double* out) {
  for (std::size_t m = 0; m < n; ++m) out[m] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0.0) continue;
    const std::int32_t* col = column + i * n;
    const double* sgn = sign + i * n;
    const __m256d ui = _mm256_set1_pd(u[i]);
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4) {
      __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + m));
      __m256d vals = _mm256_i32gather_pd(v, idx, 8);
      __m256d coeff = _mm256_mul_pd(ui, _mm256_loadu_pd(sgn + m));
      _mm256_storeu_pd(out + m, _mm256_fmadd_pd(coeff, vals, _mm256_loadu_pd(out + m)));
    }
    for (; m < n; ++m) out[m] += u[i] * sgn[m] * v[col[m]];
  }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  return dot_impl(a.data(), b.data(), a.size());
}

void table_product(const GatherLayout& layout, std::span<const double> u,
                   std::span<const double> v, std::span<double> out) {
  table_product_impl(layout.column.data(), layout.sign.data(), layout.n, u.data(),
                     v.data(), out.data());
}

#else

double dot(std::span<const double> a, std::span<const double> b) {
  return scalar::dot(a, b);
}

void table_product(const GatherLayout& layout, std::span<const double> u,
                   std::span<const double> v, std::span<double> out) {
  scalar::table_product(layout, u, v, out);
}

#endif

}  // namespace xprod::kernels::avx2
