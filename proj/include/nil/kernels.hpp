#pragma once

#include <cstddef>

namespace nil::kernels {

// Dense kernels behind the agent forward/backward passes. All matrices are
// row-major. A scalar reference implementation always exists; an AVX2+FMA
// variant is selected at runtime on CPUs that support it. The environment
// variable NILSIM_KERNELS=scalar|avx2 forces a backend (avx2 falls back to
// scalar with a warning if unsupported).
template <typename T>
struct Ops {
  // sum_i a[i]*b[i]
  T (*dot)(const T* a, const T* b, std::size_t n);

  // y += alpha * x
  void (*axpy)(T* y, const T* x, T alpha, std::size_t n);

  // C(n x r) = A(n x k) * B(r x k)^T [+ bias[r] broadcast per row]
  void (*gemm_nt)(T* c, const T* a, const T* b, const T* bias, std::size_t n,
                  std::size_t r, std::size_t k);

  // C(n x r) += A(n x k) * B(r x k)^T
  void (*gemm_nt_acc)(T* c, const T* a, const T* b, std::size_t n,
                      std::size_t r, std::size_t k);

  // C(n x m) += A(n x k) * B(k x m)
  void (*gemm_nn_acc)(T* c, const T* a, const T* b, std::size_t n,
                      std::size_t k, std::size_t m);

  // C(r x m) += A(n x r)^T * B(n x m)
  void (*gemm_tn_acc)(T* c, const T* a, const T* b, std::size_t n,
                      std::size_t r, std::size_t m);
};

template <typename T>
const Ops<T>& ops();  // runtime-dispatched backend

template <typename T>
const Ops<T>& scalar_ops();  // reference backend

template <typename T>
const Ops<T>* avx2_ops();  // nullptr when the build/CPU has no AVX2

// "scalar" or "avx2"
const char* backend_name();

}  // namespace nil::kernels
