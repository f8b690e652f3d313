#ifndef SYZLAB_MONOMIAL_HPP
#define SYZLAB_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "syzlab/error.hpp"

namespace syzlab {

inline constexpr int kMaxVars = 12;

/// Exponent vector with inline storage. The total degree and a divisibility
/// mask (bit i set iff exponent i > 0) are cached.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(check_nvars(nvars))) {}

  static Monomial from_exponents(std::span<const int> exps) {
    Monomial m(static_cast<int>(exps.size()));
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw InputError("negative exponent");
      m.exp_[i] = exps[i];
      deg += exps[i];
    }
    m.deg_ = checked_degree(deg);
    m.rebuild_mask();
    return m;
  }

  static Monomial variable(int nvars, int index, int power = 1) {
    Monomial m(nvars);
    if (index < 0 || index >= nvars) throw InputError("variable index out of range");
    m.exp_[index] = power;
    m.deg_ = power;
    m.rebuild_mask();
    return m;
  }

  int nvars() const { return nvars_; }
  int degree() const { return deg_; }
  int operator[](int i) const { return exp_[i]; }
  std::uint32_t mask() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  std::vector<int> exponents() const { return {exp_.begin(), exp_.begin() + nvars_}; }

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || deg_ > other.deg_) return false;
    for (int i = 0; i < nvars_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    same_size(other);
    Monomial r(nvars_);
    std::int64_t deg = 0;
    for (int i = 0; i < nvars_; ++i) {
      std::int64_t e = static_cast<std::int64_t>(exp_[i]) + other.exp_[i];
      if (e > std::numeric_limits<std::int32_t>::max()) throw std::overflow_error("exponent overflow");
      r.exp_[i] = static_cast<std::int32_t>(e);
      deg += e;
    }
    r.deg_ = checked_degree(deg);
    r.mask_ = mask_ | other.mask_;
    return r;
  }

  /// this / divisor; the caller guarantees divisibility.
  Monomial quotient(const Monomial& divisor) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) r.exp_[i] = exp_[i] - divisor.exp_[i];
    r.deg_ = deg_ - divisor.deg_;
    r.rebuild_mask();
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.same_size(b);
    Monomial r(a.nvars_);
    std::int64_t deg = 0;
    for (int i = 0; i < a.nvars_; ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      deg += r.exp_[i];
    }
    r.deg_ = checked_degree(deg);
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) { return (a.mask_ & b.mask_) == 0; }

  /// Degree reverse lexicographic comparison: higher total degree is larger;
  /// on ties, the monomial with the smaller exponent in the last variable
  /// where they differ is larger.
  friend std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    for (int i = a.nvars_ - 1; i >= 0; --i)
      if (a.exp_[i] != b.exp_[i]) return b.exp_[i] <=> a.exp_[i];
    return std::strong_ordering::equal;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.deg_ == b.deg_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < nvars_; ++i) h = (h ^ static_cast<std::uint32_t>(exp_[i])) * 1099511628211ull;
    return h;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (deg_ == 0) return "1";
    std::string s;
    for (int i = 0; i < nvars_; ++i) {
      if (exp_[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += names.at(i);
      if (exp_[i] > 1) s += '^' + std::to_string(exp_[i]);
    }
    return s;
  }

 private:
  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars)
      throw InputError("number of variables must be between 0 and " + std::to_string(kMaxVars));
    return n;
  }
  static std::int32_t checked_degree(std::int64_t d) {
    if (d > std::numeric_limits<std::int32_t>::max()) throw std::overflow_error("degree overflow");
    return static_cast<std::int32_t>(d);
  }
  void same_size(const Monomial& o) const {
    if (o.nvars_ != nvars_) throw InputError("monomials over different numbers of variables");
  }
  void rebuild_mask() {
    mask_ = 0;
    for (int i = 0; i < nvars_; ++i)
      if (exp_[i] > 0) mask_ |= (1u << i);
  }

  std::array<std::int32_t, kMaxVars> exp_{};
  std::int32_t deg_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Checked comparison on raw exponent vectors.
inline std::strong_ordering monomial_compare(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InputError("monomial_compare: length mismatch");
  return degrevlex(Monomial::from_exponents(a), Monomial::from_exponents(b));
}

/// All monomials of the given degree in nvars variables, in descending degrevlex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Enumerate compositions of degree into nvars parts.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) > 0; });
  return out;
}

}  // namespace syzlab

#endif  // SYZLAB_MONOMIAL_HPP
