#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "nil/kernels.hpp"

namespace nil::kernels {
namespace {

enum class Backend { scalar, avx2 };

bool cpu_has_avx2() {
#if defined(NIL_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend select_backend() {
  const char* env = std::getenv("NILSIM_KERNELS");
  bool have = cpu_has_avx2();
  if (env) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (have) return Backend::avx2;
      std::fprintf(stderr, "nilsim: NILSIM_KERNELS=avx2 requested but unsupported; using scalar\n");
      return Backend::scalar;
    }
  }
  return have ? Backend::avx2 : Backend::scalar;
}

Backend active() {
  static const Backend b = select_backend();
  return b;
}

}  // namespace

#if !defined(NIL_HAVE_AVX2_TU)
template <>
const Ops<float>* avx2_ops<float>() { return nullptr; }
template <>
const Ops<double>* avx2_ops<double>() { return nullptr; }
#endif

template <>
const Ops<float>& ops<float>() {
  static const Ops<float>& o =
      active() == Backend::avx2 && avx2_ops<float>() ? *avx2_ops<float>() : scalar_ops<float>();
  return o;
}

template <>
const Ops<double>& ops<double>() {
  static const Ops<double>& o =
      active() == Backend::avx2 && avx2_ops<double>() ? *avx2_ops<double>() : scalar_ops<double>();
  return o;
}

const char* backend_name() {
  return active() == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace nil::kernels
