#ifndef SYZLAB_HILBERT_HPP
#define SYZLAB_HILBERT_HPP

#include <map>
#include <string>
#include <vector>

#include "syzlab/resolve.hpp"

namespace syzlab {

/// Integer Laurent polynomial in t, stored densely from t^low.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int low, std::vector<long long> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

  static LaurentPolynomial monomial(int exp, long long c = 1) { return LaurentPolynomial(exp, {c}); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  long long operator[](int e) const {
    if (c_.empty() || e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
  }
  const std::vector<long long>& coefficients() const { return c_; }

  long long at_one() const {
    long long s = 0;
    for (long long v : c_) s += v;
    return s;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<long long> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a[e] + b[e];
    return LaurentPolynomial(lo, std::move(c));
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + b * LaurentPolynomial::monomial(0, -1);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return LaurentPolynomial(a.low_ + b.low_, std::move(c));
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Quotient by (1 - t); requires value 0 at t = 1.
  LaurentPolynomial divide_one_minus_t() const {
    if (at_one() != 0) throw CrossCheckFailure("numerator not divisible by (1 - t)");
    std::vector<long long> q;
    long long run = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      run += c_[i];
      q.push_back(run);
    }
    return LaurentPolynomial(low_, std::move(q));
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int e = low_; e <= high(); ++e) {
      long long v = (*this)[e];
      if (v == 0) continue;
      long long a = v < 0 ? -v : v;
      if (s.empty()) {
        if (v < 0) s += "-";
      } else {
        s += v < 0 ? " - " : " + ";
      }
      if (e == 0) {
        s += std::to_string(a);
        continue;
      }
      if (a != 1) s += std::to_string(a) + "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  void trim() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  int low_ = 0;
  std::vector<long long> c_;
};

namespace detail {

inline void minimalize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) < 0; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

/// Numerator K(t) with HS(S/J) = K(t) / (1 - t)^n for a monomial ideal J.
inline LaurentPolynomial monomial_numerator(std::vector<Monomial> gens) {
  minimalize_monomials(gens);
  if (gens.empty()) return LaurentPolynomial::monomial(0);
  for (const auto& g : gens)
    if (g.is_one()) return {};
  const int nv = gens.front().nvars();
  std::vector<int> count(static_cast<std::size_t>(nv), 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    int support = 0;
    for (int i = 0; i < nv; ++i) support += g[i] > 0 ? 1 : 0;
    if (support > 1) {
      all_pure = false;
      for (int i = 0; i < nv; ++i)
        if (g[i] > 0) ++count[static_cast<std::size_t>(i)];
    }
  }
  if (all_pure) {
    LaurentPolynomial k = LaurentPolynomial::monomial(0);
    for (const auto& g : gens) k = k * (LaurentPolynomial::monomial(0) - LaurentPolynomial::monomial(g.degree()));
    return k;
  }
  int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = 1 << 30;
  for (const auto& g : gens)
    if (g[v] > 0) e = std::min(e, g[v]);
  Monomial pivot = Monomial::variable(nv, v, e);
  // HS(S/J) = HS(S/(J + p)) + t^deg(p) HS(S/(J : p))
  std::vector<Monomial> sum = gens, colon;
  sum.push_back(pivot);
  for (const auto& g : gens) {
    auto ex = g.exponents();
    ex[static_cast<std::size_t>(v)] = std::max(0, ex[static_cast<std::size_t>(v)] - e);
    colon.push_back(Monomial::from_exponents(ex));
  }
  return monomial_numerator(std::move(sum)) + LaurentPolynomial::monomial(e) * monomial_numerator(std::move(colon));
}

}  // namespace detail

struct HilbertData {
  LaurentPolynomial numerator;  // series = numerator / (1 - t)^dim
  int dim = -1;                 // Krull dimension; -1 for the zero module
  long long multiplicity = 0;
  int first_degree = 0;
  std::vector<long long> function;  // H(first_degree), H(first_degree + 1), ...

  bool is_zero() const { return numerator.is_zero(); }

  /// H(d), from the series for any degree.
  long long value(int d) const {
    if (numerator.is_zero()) return 0;
    if (dim == 0) return numerator[d];
    long long s = 0;
    for (int k = numerator.low(); k <= numerator.high() && k <= d; ++k) {
      long long c = numerator[k];
      if (c == 0) continue;
      // C(d - k + dim - 1, dim - 1)
      long long top = d - k + dim - 1, b = 1;
      for (int i = 1; i <= dim - 1; ++i) b = b * (top - (dim - 1) + i) / i;
      s += c * b;
    }
    return s;
  }

  /// Sum of H(d) over all d when finite.
  long long length() const {
    if (dim > 0) throw InputError("module has infinite length");
    return numerator.at_one();
  }
};

/// Packages a numerator over (1 - t)^n into reduced form with H tabulated up to max_degree.
inline HilbertData hilbert_from_numerator(LaurentPolynomial k, int n, int max_degree) {
  HilbertData h;
  if (k.is_zero()) return h;
  int dim = n;
  while (dim > 0 && k.at_one() == 0) {
    k = k.divide_one_minus_t();
    --dim;
  }
  h.numerator = k;
  h.dim = dim;
  h.multiplicity = k.at_one();
  h.first_degree = k.low();
  for (int d = h.first_degree; d <= std::max(max_degree, h.first_degree); ++d) h.function.push_back(h.value(d));
  return h;
}

/// Lead-term monomial ideal of each cover component of M = F / (relations + I F).
inline std::vector<std::vector<Monomial>> lead_term_ideals(const PresentedModule& m) {
  const GradedRing& ring = *m.ring;
  GroebnerEngine engine(ring.field(), ring.nvars(), m.cover.shifts);
  for (const auto& r : m.relations) engine.add_generator(r);
  for (auto& q : ring.ideal_multiples(m.cover.shifts.size())) engine.add_generator(std::move(q));
  engine.complete();
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(m.generators()));
  for (const auto& e : engine.elements()) leads[static_cast<std::size_t>(e.lead().comp)].push_back(e.lead().mono);
  return leads;
}

/// Hilbert series of M from the lead-term module of its relations.
inline HilbertData hilbert(const PresentedModule& m, int max_degree = -1) {
  m.validate();
  auto leads = lead_term_ideals(m);
  const int n = m.ring->nvars();
  LaurentPolynomial k;
  for (int i = 0; i < m.generators(); ++i) {
    auto& li = leads[static_cast<std::size_t>(i)];
    LaurentPolynomial part = li.empty() ? LaurentPolynomial::monomial(0) : detail::monomial_numerator(li);
    k = k + LaurentPolynomial::monomial(m.cover.shifts[static_cast<std::size_t>(i)]) * part;
  }
  if (max_degree < 0) {
    int hi = k.is_zero() ? 0 : k.high();
    max_degree = hi + 4;
  }
  return hilbert_from_numerator(k, n, max_degree);
}

inline HilbertData hilbert(const GradedRing& r, int max_degree = -1) {
  RingPtr ring = r.shared_from_this();
  return hilbert(free_module(ring, 1), max_degree);
}

/// Hilbert series read off a finite resolution over a polynomial ring:
/// sum of (-1)^i beta_{i,j} t^j over (1 - t)^n.
inline HilbertData hilbert_from_resolution(const Resolution& res, int max_degree) {
  if (!res.ring->is_polynomial_ring()) throw InputError("resolution-based Hilbert series needs a polynomial ring");
  if (!res.finite) throw InputError("resolution is not finite");
  LaurentPolynomial k;
  for (const auto& [key, beta] : res.betti.entries)
    k = k + LaurentPolynomial::monomial(key.second, (key.first % 2 == 0 ? 1 : -1) * beta);
  return hilbert_from_numerator(k, res.ring->nvars(), max_degree);
}

}  // namespace syzlab

#endif  // SYZLAB_HILBERT_HPP
