#ifndef SYZLAB_FIELD_HPP
#define SYZLAB_FIELD_HPP

#include <cstdint>
#include <string>

#include "syzlab/error.hpp"

namespace syzlab {

using Coeff = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p. Elements are stored as integers in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;
  static constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p == 0)
      throw InputError("characteristic 0 is not supported; use a prime field");
    if (p > kMaxPrime || !is_prime(p))
      throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }

  Coeff inv(Coeff a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Coeff>(t);
  }

  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  // Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace syzlab

#endif  // SYZLAB_FIELD_HPP
