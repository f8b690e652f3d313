#ifndef SYZLAB_VECTOR_HPP
#define SYZLAB_VECTOR_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "syzlab/polynomial.hpp"

namespace syzlab {

/// A graded free module: rank = shifts.size(); basis element i has degree shifts[i].
struct GradedFreeModule {
  std::vector<int> shifts;

  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> s) : shifts(std::move(s)) {}
  static GradedFreeModule uniform(int rank, int shift = 0) {
    return GradedFreeModule(std::vector<int>(static_cast<std::size_t>(rank), shift));
  }

  int rank() const { return static_cast<int>(shifts.size()); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

struct VecTerm {
  int comp = 0;
  Monomial mono;
  Coeff coeff = 0;
};

/// Position-over-term order: a smaller component index is larger; within a
/// component, degrevlex.
inline std::strong_ordering pot_compare(int comp_a, const Monomial& a, int comp_b, const Monomial& b) {
  if (comp_a != comp_b) return comp_b <=> comp_a;
  return degrevlex(a, b);
}

/// Element of a free module over the ambient polynomial ring, stored as a
/// sparse list of terms sorted descending in position-over-term order.
class Vector {
 public:
  Vector() = default;

  std::vector<VecTerm>& terms() { return terms_; }
  const std::vector<VecTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const VecTerm& lead() const { return terms_.front(); }

  /// Degree of the lead term including the component shift.
  int degree(std::span<const int> shifts) const { return lead().mono.degree() + shifts[lead().comp]; }

  bool is_homogeneous(std::span<const int> shifts) const {
    if (terms_.empty()) return true;
    int d = degree(shifts);
    for (const auto& t : terms_)
      if (t.mono.degree() + shifts[t.comp] != d) return false;
    return true;
  }

  friend bool operator==(const Vector& a, const Vector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& s = a.terms_[i];
      const auto& t = b.terms_[i];
      if (s.comp != t.comp || s.coeff != t.coeff || !(s.mono == t.mono)) return false;
    }
    return true;
  }

  static Vector basis(int nvars, int comp, Coeff c = 1) {
    Vector v;
    if (c != 0) v.terms_.push_back({comp, Monomial(nvars), c});
    return v;
  }

  static Vector from_polynomial(const Polynomial& p, int comp) {
    Vector v;
    v.terms_.reserve(p.size());
    for (const auto& t : p.terms()) v.terms_.push_back({comp, t.mono, t.coeff});
    return v;
  }

  static Vector from_polynomials(std::span<const Polynomial> entries) {
    Vector v;
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (const auto& t : entries[i].terms()) v.terms_.push_back({static_cast<int>(i), t.mono, t.coeff});
    return v;
  }

  /// Builds from unsorted terms, combining duplicates.
  static Vector from_terms(const PrimeField& f, std::vector<VecTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const VecTerm& a, const VecTerm& b) {
      return pot_compare(a.comp, a.mono, b.comp, b.mono) > 0;
    });
    Vector v;
    for (auto& t : terms) {
      if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().mono == t.mono) {
        v.terms_.back().coeff = f.add(v.terms_.back().coeff, t.coeff);
        if (v.terms_.back().coeff == 0) v.terms_.pop_back();
      } else if (t.coeff != 0) {
        v.terms_.push_back(t);
      }
    }
    return v;
  }

  /// Entry in the given component as a polynomial.
  Polynomial component(const PrimeField& f, int nvars, int comp) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
      if (t.comp == comp) ts.push_back({t.mono, t.coeff});
    Polynomial p = Polynomial::from_terms(f, nvars, std::move(ts));
    return p;
  }

  std::vector<Polynomial> to_polynomials(const PrimeField& f, int nvars, int rank) const {
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(rank));
    for (const auto& t : terms_) buckets.at(static_cast<std::size_t>(t.comp)).push_back({t.mono, t.coeff});
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(rank));
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(f, nvars, std::move(b)));
    return out;
  }

  int max_component() const {
    int m = -1;
    for (const auto& t : terms_) m = std::max(m, t.comp);
    return m;
  }

 private:
  std::vector<VecTerm> terms_;
};

namespace vec {

inline Vector scale(const PrimeField& f, const Vector& v, Coeff c) {
  Vector r;
  if (c == 0) return r;
  r.terms() = v.terms();
  for (auto& t : r.terms()) t.coeff = f.mul(t.coeff, c);
  return r;
}

inline Vector times_term(const PrimeField& f, const Vector& v, const Monomial& m, Coeff c) {
  Vector r;
  if (c == 0) return r;
  r.terms().reserve(v.size());
  for (const auto& t : v.terms()) r.terms().push_back({t.comp, t.mono * m, f.mul(t.coeff, c)});
  return r;
}

/// a + c * m * b, merged in one pass.
inline Vector add_multiple(const PrimeField& f, const Vector& a, Coeff c, const Monomial& m, const Vector& b) {
  if (c == 0 || b.is_zero()) return a;
  Vector r;
  auto& out = r.terms();
  out.reserve(a.size() + b.size());
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t i = 0, j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size()) {
      out.push_back(at[i++]);
      continue;
    }
    Monomial bm = bt[j].mono * m;
    if (i == at.size()) {
      out.push_back({bt[j].comp, bm, f.mul(bt[j].coeff, c)});
      ++j;
      continue;
    }
    auto cmp = pot_compare(at[i].comp, at[i].mono, bt[j].comp, bm);
    if (cmp > 0) {
      out.push_back(at[i++]);
    } else if (cmp < 0) {
      out.push_back({bt[j].comp, bm, f.mul(bt[j].coeff, c)});
      ++j;
    } else {
      Coeff s = f.add(at[i].coeff, f.mul(bt[j].coeff, c));
      if (s != 0) out.push_back({at[i].comp, at[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

inline Vector add(const PrimeField& f, const Vector& a, const Vector& b) {
  if (b.is_zero()) return a;
  return add_multiple(f, a, 1, Monomial(b.lead().mono.nvars()), b);
}

inline Vector sub(const PrimeField& f, const Vector& a, const Vector& b) {
  if (b.is_zero()) return a;
  return add_multiple(f, a, f.neg(1), Monomial(b.lead().mono.nvars()), b);
}

inline Vector times_poly(const PrimeField& f, const Polynomial& p, const Vector& v) {
  Vector r;
  for (const auto& t : p.terms()) r = add_multiple(f, r, t.coeff, t.mono, v);
  return r;
}

inline Vector make_monic(const PrimeField& f, const Vector& v) {
  if (v.is_zero() || v.lead().coeff == 1) return v;
  return scale(f, v, f.inv(v.lead().coeff));
}

/// Renumbers components: new component = map[old]; entries mapped to -1 are dropped.
inline Vector remap(const PrimeField& f, const Vector& v, std::span<const int> map) {
  std::vector<VecTerm> ts;
  ts.reserve(v.size());
  for (const auto& t : v.terms()) {
    int c = map[static_cast<std::size_t>(t.comp)];
    if (c >= 0) ts.push_back({c, t.mono, t.coeff});
  }
  return Vector::from_terms(f, std::move(ts));
}

/// Adds `offset` to every component index (order is preserved).
inline Vector shift_components(const Vector& v, int offset) {
  Vector r = v;
  for (auto& t : r.terms()) t.comp += offset;
  return r;
}

/// Splits at component `cut`: returns the part with comp >= cut, renumbered from 0.
inline Vector tail_part(const Vector& v, int cut) {
  Vector r;
  for (const auto& t : v.terms())
    if (t.comp >= cut) r.terms().push_back({t.comp - cut, t.mono, t.coeff});
  return r;
}

inline Vector head_part(const Vector& v, int cut) {
  Vector r;
  for (const auto& t : v.terms())
    if (t.comp < cut) r.terms().push_back(t);
  return r;
}

/// Concatenation (a, b) in A (+) B where A has rank `rank_a`.
inline Vector concat(const Vector& a, const Vector& b, int rank_a) {
  Vector r = a;
  for (const auto& t : b.terms()) r.terms().push_back({t.comp + rank_a, t.mono, t.coeff});
  return r;
}

}  // namespace vec

/// A homogeneous matrix, stored by columns: column j is an element of the
/// target free module and has degree source.shifts[j].
struct Matrix {
  GradedFreeModule target;
  GradedFreeModule source;
  std::vector<Vector> columns;

  int rows() const { return target.rank(); }
  int cols() const { return static_cast<int>(columns.size()); }

  Polynomial entry(const PrimeField& f, int nvars, int row, int col) const {
    return columns.at(static_cast<std::size_t>(col)).component(f, nvars, row);
  }
};

}  // namespace syzlab

#endif  // SYZLAB_VECTOR_HPP
