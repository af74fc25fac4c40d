#include "nil/bigint.hpp"

#include <stdexcept>

namespace nil {

namespace {
constexpr std::uint64_t kBase = 1000000000ULL;
}

BigUint::BigUint(std::uint64_t v) {
  do {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  } while (v != 0);
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exp) {
  BigUint out(1);
  for (std::uint64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

BigUint BigUint::falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigUint(0);
  BigUint out(1);
  for (std::uint64_t i = 0; i < k; ++i) out *= (n - i);
  return out;
}

BigUint& BigUint::operator*=(std::uint64_t m) {
  if (m == 0) {
    limbs_.assign(1, 0);
    return *this;
  }
  unsigned __int128 carry = 0;
  for (auto& limb : limbs_) {
    unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& other) {
  std::vector<std::uint64_t> acc(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      std::uint64_t cur = acc[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] + carry;
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
    std::size_t k = i + other.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = acc[k] + carry;
      acc[k] = cur % kBase;
      carry = cur / kBase;
      ++k;
    }
  }
  limbs_.assign(acc.begin(), acc.end());
  trim();
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& other) {
  if (compare(other) < 0) throw std::invalid_argument("BigUint underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < other.limbs_.size() ? static_cast<std::int64_t>(other.limbs_[i]) : 0);
    if (cur < 0) {
      cur += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  trim();
  return *this;
}

int BigUint::compare(const BigUint& other) const {
  if (limbs_.size() != other.limbs_.size()) {
    return limbs_.size() < other.limbs_.size() ? -1 : 1;
  }
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::string BigUint::to_string() const {
  std::string out = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

bool BigUint::fits_u64(std::uint64_t* out) const {
  unsigned __int128 v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    v = v * kBase + limbs_[i];
    if (v > UINT64_MAX) return false;
  }
  if (out) *out = static_cast<std::uint64_t>(v);
  return true;
}

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace nil
