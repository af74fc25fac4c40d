#include "nil/kernels.hpp"

namespace nil::kernels {
namespace {

template <typename T>
T dot_scalar(const T* a, const T* b, std::size_t n) {
  T acc0 = 0, acc1 = 0, acc2 = 0, acc3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += a[i] * b[i];
    acc1 += a[i + 1] * b[i + 1];
    acc2 += a[i + 2] * b[i + 2];
    acc3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) acc0 += a[i] * b[i];
  return (acc0 + acc1) + (acc2 + acc3);
}

template <typename T>
void axpy_scalar(T* y, const T* x, T alpha, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

template <typename T>
void gemm_nt_scalar(T* c, const T* a, const T* b, const T* bias, std::size_t n,
                    std::size_t r, std::size_t k) {
  for (std::size_t i = 0; i < n; ++i) {
    const T* ai = a + i * k;
    T* ci = c + i * r;
    for (std::size_t j = 0; j < r; ++j) {
      T v = dot_scalar(ai, b + j * k, k);
      ci[j] = bias ? bias[j] + v : v;
    }
  }
}

template <typename T>
void gemm_nt_acc_scalar(T* c, const T* a, const T* b, std::size_t n,
                        std::size_t r, std::size_t k) {
  for (std::size_t i = 0; i < n; ++i) {
    const T* ai = a + i * k;
    T* ci = c + i * r;
    for (std::size_t j = 0; j < r; ++j) ci[j] += dot_scalar(ai, b + j * k, k);
  }
}

template <typename T>
void gemm_nn_acc_scalar(T* c, const T* a, const T* b, std::size_t n,
                        std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    T* ci = c + i * m;
    const T* ai = a + i * k;
    for (std::size_t kk = 0; kk < k; ++kk) {
      axpy_scalar(ci, b + kk * m, ai[kk], m);
    }
  }
}

template <typename T>
void gemm_tn_acc_scalar(T* c, const T* a, const T* b, std::size_t n,
                        std::size_t r, std::size_t m) {
  for (std::size_t i = 0; i < r; ++i) {
    T* ci = c + i * m;
    for (std::size_t kk = 0; kk < n; ++kk) {
      axpy_scalar(ci, b + kk * m, a[kk * r + i], m);
    }
  }
}

template <typename T>
Ops<T> make_scalar() {
  Ops<T> o;
  o.dot = dot_scalar<T>;
  o.axpy = axpy_scalar<T>;
  o.gemm_nt = gemm_nt_scalar<T>;
  o.gemm_nt_acc = gemm_nt_acc_scalar<T>;
  o.gemm_nn_acc = gemm_nn_acc_scalar<T>;
  o.gemm_tn_acc = gemm_tn_acc_scalar<T>;
  return o;
}

}  // namespace

template <>
const Ops<float>& scalar_ops<float>() {
  static const Ops<float> o = make_scalar<float>();
  return o;
}

template <>
const Ops<double>& scalar_ops<double>() {
  static const Ops<double> o = make_scalar<double>();
  return o;
}

}  // namespace nil::kernels
