// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; nothing here may be called unless the CPU reports AVX2+FMA
// (see kernels_dispatch.cpp).

#include <immintrin.h>

#include "nil/kernels.hpp"

namespace nil::kernels {
namespace {

// ------------------------------------------------------------------- float

inline float hsum8(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  lo = _mm_hadd_ps(lo, lo);
  lo = _mm_hadd_ps(lo, lo);
  return _mm_cvtss_f32(lo);
}

float dot_f(const float* a, const float* b, std::size_t n) {
  __m256 acc0 = _mm256_setzero_ps();
  __m256 acc1 = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
    acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), acc1);
  }
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
  }
  float s = hsum8(_mm256_add_ps(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_f(float* y, const float* x, float alpha, std::size_t n) {
  __m256 va = _mm256_set1_ps(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(y + i, _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

// Four output columns at a time: one A row against four B rows.
void gemm_nt_body_f(float* c, const float* a, const float* b, const float* bias,
                    std::size_t n, std::size_t r, std::size_t k, bool accumulate) {
  for (std::size_t i = 0; i < n; ++i) {
    const float* ai = a + i * k;
    float* ci = c + i * r;
    std::size_t j = 0;
    for (; j + 4 <= r; j += 4) {
      const float* b0 = b + j * k;
      const float* b1 = b0 + k;
      const float* b2 = b1 + k;
      const float* b3 = b2 + k;
      __m256 s0 = _mm256_setzero_ps(), s1 = _mm256_setzero_ps();
      __m256 s2 = _mm256_setzero_ps(), s3 = _mm256_setzero_ps();
      std::size_t p = 0;
      for (; p + 8 <= k; p += 8) {
        __m256 av = _mm256_loadu_ps(ai + p);
        s0 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b0 + p), s0);
        s1 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b1 + p), s1);
        s2 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b2 + p), s2);
        s3 = _mm256_fmadd_ps(av, _mm256_loadu_ps(b3 + p), s3);
      }
      float v0 = hsum8(s0), v1 = hsum8(s1), v2 = hsum8(s2), v3 = hsum8(s3);
      for (; p < k; ++p) {
        float av = ai[p];
        v0 += av * b0[p];
        v1 += av * b1[p];
        v2 += av * b2[p];
        v3 += av * b3[p];
      }
      if (accumulate) {
        ci[j] += v0; ci[j + 1] += v1; ci[j + 2] += v2; ci[j + 3] += v3;
      } else if (bias) {
        ci[j] = bias[j] + v0; ci[j + 1] = bias[j + 1] + v1;
        ci[j + 2] = bias[j + 2] + v2; ci[j + 3] = bias[j + 3] + v3;
      } else {
        ci[j] = v0; ci[j + 1] = v1; ci[j + 2] = v2; ci[j + 3] = v3;
      }
    }
    for (; j < r; ++j) {
      float v = dot_f(ai, b + j * k, k);
      if (accumulate) ci[j] += v;
      else ci[j] = bias ? bias[j] + v : v;
    }
  }
}

void gemm_nt_f(float* c, const float* a, const float* b, const float* bias,
               std::size_t n, std::size_t r, std::size_t k) {
  gemm_nt_body_f(c, a, b, bias, n, r, k, false);
}

void gemm_nt_acc_f(float* c, const float* a, const float* b, std::size_t n,
                   std::size_t r, std::size_t k) {
  gemm_nt_body_f(c, a, b, nullptr, n, r, k, true);
}

// Row of C stays hot in L1 while the k loop streams B; A values broadcast.
void gemm_nn_acc_f(float* c, const float* a, const float* b, std::size_t n,
                   std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    float* ci = c + i * m;
    const float* ai = a + i * k;
    std::size_t kk = 0;
    for (; kk + 4 <= k; kk += 4) {
      __m256 a0 = _mm256_set1_ps(ai[kk]);
      __m256 a1 = _mm256_set1_ps(ai[kk + 1]);
      __m256 a2 = _mm256_set1_ps(ai[kk + 2]);
      __m256 a3 = _mm256_set1_ps(ai[kk + 3]);
      const float* b0 = b + kk * m;
      const float* b1 = b0 + m;
      const float* b2 = b1 + m;
      const float* b3 = b2 + m;
      std::size_t j = 0;
      for (; j + 8 <= m; j += 8) {
        __m256 cv = _mm256_loadu_ps(ci + j);
        cv = _mm256_fmadd_ps(a0, _mm256_loadu_ps(b0 + j), cv);
        cv = _mm256_fmadd_ps(a1, _mm256_loadu_ps(b1 + j), cv);
        cv = _mm256_fmadd_ps(a2, _mm256_loadu_ps(b2 + j), cv);
        cv = _mm256_fmadd_ps(a3, _mm256_loadu_ps(b3 + j), cv);
        _mm256_storeu_ps(ci + j, cv);
      }
      for (; j < m; ++j) {
        ci[j] += ai[kk] * b0[j] + ai[kk + 1] * b1[j] + ai[kk + 2] * b2[j] +
                 ai[kk + 3] * b3[j];
      }
    }
    for (; kk < k; ++kk) axpy_f(ci, b + kk * m, ai[kk], m);
  }
}

void gemm_tn_acc_f(float* c, const float* a, const float* b, std::size_t n,
                   std::size_t r, std::size_t m) {
  for (std::size_t i = 0; i < r; ++i) {
    float* ci = c + i * m;
    std::size_t kk = 0;
    for (; kk + 4 <= n; kk += 4) {
      __m256 a0 = _mm256_set1_ps(a[kk * r + i]);
      __m256 a1 = _mm256_set1_ps(a[(kk + 1) * r + i]);
      __m256 a2 = _mm256_set1_ps(a[(kk + 2) * r + i]);
      __m256 a3 = _mm256_set1_ps(a[(kk + 3) * r + i]);
      const float* b0 = b + kk * m;
      const float* b1 = b0 + m;
      const float* b2 = b1 + m;
      const float* b3 = b2 + m;
      std::size_t j = 0;
      for (; j + 8 <= m; j += 8) {
        __m256 cv = _mm256_loadu_ps(ci + j);
        cv = _mm256_fmadd_ps(a0, _mm256_loadu_ps(b0 + j), cv);
        cv = _mm256_fmadd_ps(a1, _mm256_loadu_ps(b1 + j), cv);
        cv = _mm256_fmadd_ps(a2, _mm256_loadu_ps(b2 + j), cv);
        cv = _mm256_fmadd_ps(a3, _mm256_loadu_ps(b3 + j), cv);
        _mm256_storeu_ps(ci + j, cv);
      }
      for (; j < m; ++j) {
        ci[j] += a[kk * r + i] * b0[j] + a[(kk + 1) * r + i] * b1[j] +
                 a[(kk + 2) * r + i] * b2[j] + a[(kk + 3) * r + i] * b3[j];
      }
    }
    for (; kk < n; ++kk) axpy_f(ci, b + kk * m, a[kk * r + i], m);
  }
}

// ------------------------------------------------------------------ double

inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  lo = _mm_hadd_pd(lo, lo);
  return _mm_cvtsd_f64(lo);
}

double dot_d(const double* a, const double* b, std::size_t n) {
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
  double s = hsum4(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_d(double* y, const double* x, double alpha, std::size_t n) {
  __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void gemm_nt_body_d(double* c, const double* a, const double* b,
                    const double* bias, std::size_t n, std::size_t r,
                    std::size_t k, bool accumulate) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * r;
    std::size_t j = 0;
    for (; j + 4 <= r; j += 4) {
      const double* b0 = b + j * k;
      const double* b1 = b0 + k;
      const double* b2 = b1 + k;
      const double* b3 = b2 + k;
      __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
      __m256d s2 = _mm256_setzero_pd(), s3 = _mm256_setzero_pd();
      std::size_t p = 0;
      for (; p + 4 <= k; p += 4) {
        __m256d av = _mm256_loadu_pd(ai + p);
        s0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b0 + p), s0);
        s1 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b1 + p), s1);
        s2 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b2 + p), s2);
        s3 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b3 + p), s3);
      }
      double v0 = hsum4(s0), v1 = hsum4(s1), v2 = hsum4(s2), v3 = hsum4(s3);
      for (; p < k; ++p) {
        double av = ai[p];
        v0 += av * b0[p];
        v1 += av * b1[p];
        v2 += av * b2[p];
        v3 += av * b3[p];
      }
      if (accumulate) {
        ci[j] += v0; ci[j + 1] += v1; ci[j + 2] += v2; ci[j + 3] += v3;
      } else if (bias) {
        ci[j] = bias[j] + v0; ci[j + 1] = bias[j + 1] + v1;
        ci[j + 2] = bias[j + 2] + v2; ci[j + 3] = bias[j + 3] + v3;
      } else {
        ci[j] = v0; ci[j + 1] = v1; ci[j + 2] = v2; ci[j + 3] = v3;
      }
    }
    for (; j < r; ++j) {
      double v = dot_d(ai, b + j * k, k);
      if (accumulate) ci[j] += v;
      else ci[j] = bias ? bias[j] + v : v;
    }
  }
}

void gemm_nt_d(double* c, const double* a, const double* b, const double* bias,
               std::size_t n, std::size_t r, std::size_t k) {
  gemm_nt_body_d(c, a, b, bias, n, r, k, false);
}

void gemm_nt_acc_d(double* c, const double* a, const double* b, std::size_t n,
                   std::size_t r, std::size_t k) {
  gemm_nt_body_d(c, a, b, nullptr, n, r, k, true);
}

void gemm_nn_acc_d(double* c, const double* a, const double* b, std::size_t n,
                   std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    double* ci = c + i * m;
    const double* ai = a + i * k;
    for (std::size_t kk = 0; kk < k; ++kk) axpy_d(ci, b + kk * m, ai[kk], m);
  }
}

void gemm_tn_acc_d(double* c, const double* a, const double* b, std::size_t n,
                   std::size_t r, std::size_t m) {
  for (std::size_t i = 0; i < r; ++i) {
    double* ci = c + i * m;
    for (std::size_t kk = 0; kk < n; ++kk) axpy_d(ci, b + kk * m, a[kk * r + i], m);
  }
}

}  // namespace

template <>
const Ops<float>* avx2_ops<float>() {
  static const Ops<float> o = {dot_f, axpy_f, gemm_nt_f, gemm_nt_acc_f,
                               gemm_nn_acc_f, gemm_tn_acc_f};
  return &o;
}

template <>
const Ops<double>* avx2_ops<double>() {
  static const Ops<double> o = {dot_d, axpy_d, gemm_nt_d, gemm_nt_acc_d,
                                gemm_nn_acc_d, gemm_tn_acc_d};
  return &o;
}

}  // namespace nil::kernels
