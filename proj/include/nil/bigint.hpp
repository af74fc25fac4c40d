#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nil {

// Minimal arbitrary-precision unsigned integer: just what the language
// counting formulas need (products of machine-word factors, subtraction,
// comparison, decimal printing). Limbs are base 1e9, least significant
// first.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t v);

  static BigUint pow(std::uint64_t base, std::uint64_t exp);
  // n * (n-1) * ... * (n-k+1); zero when k > n
  static BigUint falling_factorial(std::uint64_t n, std::uint64_t k);

  BigUint& operator*=(std::uint64_t m);
  BigUint& operator*=(const BigUint& other);
  // requires *this >= other
  BigUint& operator-=(const BigUint& other);

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  int compare(const BigUint& other) const;  // -1, 0, 1

  bool operator==(const BigUint& other) const { return compare(other) == 0; }
  bool operator<(const BigUint& other) const { return compare(other) < 0; }

  std::string to_string() const;
  // exact value if it fits in a u64
  bool fits_u64(std::uint64_t* out) const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

}  // namespace nil
