#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace nil {

// Deterministic random source. Every distribution is implemented on top of
// the raw 64-bit stream, so sampled values depend only on the seed and the
// call sequence, never on the standard library's distribution objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n), rejection-sampled to avoid modulo bias
  std::uint64_t uniform_int(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  int uniform_index(int n) { return static_cast<int>(uniform_int(static_cast<std::uint64_t>(n))); }

  // Fisher-Yates
  template <typename It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      std::swap(first[i - 1], first[uniform_int(i)]);
    }
  }

  // k distinct indices drawn uniformly without replacement from [0, n)
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) {
      int j = i + uniform_index(n - i);
      std::swap(pool[i], pool[j]);
      out[i] = pool[i];
    }
    return out;
  }

  // index sampled from a normalized probability vector
  template <typename T>
  int categorical(const T* p, int n) {
    double u = uniform();
    double acc = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      acc += static_cast<double>(p[i]);
      if (u < acc) return i;
    }
    return n - 1;
  }

  // Independent child stream; splitmix64 over (seed, stream id) so streams
  // derived from the same master seed are decorrelated.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nil
