#ifndef SYZLAB_GROEBNER_HPP
#define SYZLAB_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "syzlab/vector.hpp"

namespace syzlab {

/// Incremental Buchberger engine for homogeneous submodules of a graded free
/// module over the ambient polynomial ring, position-over-term order.
///
/// Generators and S-pairs are processed in increasing degree (normal
/// strategy), so after complete_to(d) the current elements form a Gröbner
/// basis of the submodule truncated at degree d. That is what makes the
/// engine usable for degree-by-degree minimal-generator selection.
class GroebnerEngine {
 public:
  GroebnerEngine(PrimeField field, int nvars, std::vector<int> shifts)
      : field_(field), nvars_(nvars), shifts_(std::move(shifts)), by_comp_(shifts_.size()) {}

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<int>& shifts() const { return shifts_; }

  /// Queues a homogeneous generator; zero vectors are ignored.
  void add_generator(Vector v) {
    if (v.is_zero()) return;
    check_element(v);
    int d = v.degree(shifts_);
    if (completed_ && d <= *completed_) completed_ = d - 1;
    pending_gens_.push_back(std::move(v));
    queue_[d].push_back(Item{-1, static_cast<int>(pending_gens_.size()) - 1});
  }

  bool has_pending() const { return !queue_.empty(); }
  int next_degree() const { return queue_.begin()->first; }

  /// Processes every queued generator and S-pair of degree <= degree.
  void complete_to(int degree) {
    while (!queue_.empty() && queue_.begin()->first <= degree) {
      int d = queue_.begin()->first;
      std::vector<Item> items = std::move(queue_.begin()->second);
      queue_.erase(queue_.begin());
      process_degree(d, items);
    }
    if (!completed_ || *completed_ < degree) completed_ = degree;
  }

  void complete() {
    while (!queue_.empty()) complete_to(queue_.begin()->first);
  }

  const std::vector<Vector>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int element_degree(std::size_t i) const { return elements_[i].degree(shifts_); }

  /// Full normal form (lead and tail) with respect to the current elements.
  Vector reduce(const Vector& f) const { return reduce_excluding(f, -1); }

  bool reduces_to_zero(const Vector& f) const { return reduce(f).is_zero(); }

  /// Adds an element to the reducer set without forming S-pairs, so reduce()
  /// becomes plain division by the given elements.
  void add_reducer(Vector v) {
    if (v.is_zero()) return;
    check_element(v);
    insert(std::move(v), false);
  }

  /// The reduced Gröbner basis; call after complete(). Sorted ascending.
  std::vector<Vector> reduced_basis() const {
    std::vector<int> keep;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const auto& li = elements_[i].lead();
      bool redundant = false;
      for (std::size_t j = 0; j < elements_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& lj = elements_[j].lead();
        if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
        if (!(lj.mono == li.mono) || j < i) redundant = true;
      }
      if (!redundant) keep.push_back(static_cast<int>(i));
    }
    GroebnerEngine minimal(field_, nvars_, shifts_);
    for (int i : keep) minimal.insert(elements_[i], false);
    std::vector<Vector> out;
    out.reserve(keep.size());
    for (std::size_t k = 0; k < minimal.elements_.size(); ++k)
      out.push_back(minimal.reduce_excluding(minimal.elements_[k], static_cast<int>(k)));
    std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) {
      const auto& x = a.lead();
      const auto& y = b.lead();
      return pot_compare(x.comp, x.mono, y.comp, y.mono) < 0;
    });
    return out;
  }

  /// Number of S-pair reductions performed; exposed for tests and stats.
  std::size_t pair_reductions() const { return pair_reductions_; }

 private:
  struct Item {
    int i;  // -1 marks a generator; otherwise a pair (i, j)
    int j;
  };

  void check_element(const Vector& v) const {
    for (const auto& t : v.terms()) {
      if (t.comp < 0 || t.comp >= static_cast<int>(shifts_.size()))
        throw InputError("module element has a component outside the free module");
      if (t.mono.nvars() != nvars_) throw InputError("module element over a different number of variables");
    }
    if (!v.is_homogeneous(shifts_)) throw InputError("module element is not homogeneous");
  }

  static std::uint64_t key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  }

  int find_reducer(int comp, const Monomial& m, int exclude) const {
    for (int k : by_comp_[static_cast<std::size_t>(comp)]) {
      if (k == exclude) continue;
      if (elements_[k].lead().mono.divides(m)) return k;
    }
    return -1;
  }

  Vector reduce_excluding(const Vector& f, int exclude) const {
    std::vector<VecTerm> out;
    Vector cur = f;
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const VecTerm t = cur.terms()[pos];
      int k = find_reducer(t.comp, t.mono, exclude);
      if (k < 0) {
        out.push_back(t);
        ++pos;
        continue;
      }
      const Vector& g = elements_[k];
      Monomial q = t.mono.quotient(g.lead().mono);
      Vector tail;
      tail.terms().assign(cur.terms().begin() + static_cast<std::ptrdiff_t>(pos), cur.terms().end());
      cur = vec::add_multiple(field_, tail, field_.neg(t.coeff), q, g);
      pos = 0;
    }
    Vector r;
    r.terms() = std::move(out);
    return r;
  }

  void insert(Vector v, bool pairs = true) {
    v = vec::make_monic(field_, v);
    int idx = static_cast<int>(elements_.size());
    const VecTerm& lead = v.lead();
    for (int k : by_comp_[static_cast<std::size_t>(lead.comp)]) {
      if (!pairs) break;
      const Monomial& lk = elements_[k].lead().mono;
      if (shifts_.size() == 1 && Monomial::coprime(lk, lead.mono)) continue;  // product criterion (ideals only)
      Monomial l = Monomial::lcm(lk, lead.mono);
      int d = l.degree() + shifts_[static_cast<std::size_t>(lead.comp)];
      queue_[d].push_back(Item{k, idx});
      pending_pairs_.insert(key(k, idx));
    }
    by_comp_[static_cast<std::size_t>(lead.comp)].push_back(idx);
    elements_.push_back(std::move(v));
  }

  bool chain_criterion(int i, int j, const Monomial& l, int comp) const {
    for (int k : by_comp_[static_cast<std::size_t>(comp)]) {
      if (k == i || k == j) continue;
      if (!elements_[k].lead().mono.divides(l)) continue;
      if (pending_pairs_.count(key(i, k)) || pending_pairs_.count(key(j, k))) continue;
      return true;
    }
    return false;
  }

  void process_degree(int /*d*/, std::vector<Item>& items) {
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if ((a.i < 0) != (b.i < 0)) return a.i >= 0;  // pairs before generators
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    for (const Item& it : items) {
      if (it.i < 0) {
        Vector r = reduce(pending_gens_[static_cast<std::size_t>(it.j)]);
        pending_gens_[static_cast<std::size_t>(it.j)] = Vector();
        if (!r.is_zero()) insert(std::move(r));
        continue;
      }
      const Vector& gi = elements_[it.i];
      const Vector& gj = elements_[it.j];
      int comp = gi.lead().comp;
      Monomial l = Monomial::lcm(gi.lead().mono, gj.lead().mono);
      if (chain_criterion(it.i, it.j, l, comp)) {
        pending_pairs_.erase(key(it.i, it.j));
        continue;
      }
      Vector s = vec::add_multiple(field_, vec::times_term(field_, gi, l.quotient(gi.lead().mono), 1),
                                   field_.neg(1), l.quotient(gj.lead().mono), gj);
      pending_pairs_.erase(key(it.i, it.j));
      ++pair_reductions_;
      Vector r = reduce(s);
      if (!r.is_zero()) insert(std::move(r));
    }
  }

  PrimeField field_;
  int nvars_;
  std::vector<int> shifts_;
  std::vector<Vector> elements_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<Vector> pending_gens_;
  std::map<int, std::vector<Item>> queue_;
  std::unordered_set<std::uint64_t> pending_pairs_;
  std::optional<int> completed_;
  std::size_t pair_reductions_ = 0;
};

/// Reduced Gröbner basis of a homogeneous polynomial ideal.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, PrimeField field, int nvars) {
  GroebnerEngine engine(field, nvars, {0});
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw InputError("generator over a different number of variables");
    if (!g.is_homogeneous()) throw InputError("generator is not homogeneous");
    engine.add_generator(Vector::from_polynomial(g, 0));
  }
  engine.complete();
  std::vector<Polynomial> out;
  for (const auto& v : engine.reduced_basis()) out.push_back(v.component(field, nvars, 0));
  return out;
}

/// Reduced Gröbner basis of a homogeneous submodule.
inline std::vector<Vector> buchberger(const std::vector<Vector>& gens, PrimeField field, int nvars,
                                      const std::vector<int>& shifts) {
  GroebnerEngine engine(field, nvars, shifts);
  for (const auto& g : gens) engine.add_generator(g);
  engine.complete();
  return engine.reduced_basis();
}

/// Normal form of a polynomial with respect to a Gröbner basis of an ideal.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  GroebnerEngine engine(f.field(), f.nvars(), {0});
  for (const auto& g : basis) engine.add_reducer(Vector::from_polynomial(g, 0));
  return engine.reduce(Vector::from_polynomial(f, 0)).component(f.field(), f.nvars(), 0);
}

/// Normal form of a module element with respect to a Gröbner basis.
inline Vector reduce(const Vector& f, const std::vector<Vector>& basis, PrimeField field, int nvars,
                     const std::vector<int>& shifts) {
  if (f.max_component() >= static_cast<int>(shifts.size()))
    throw InputError("reduce: element and basis live in free modules of different rank");
  GroebnerEngine engine(field, nvars, shifts);
  for (const auto& g : basis) engine.add_reducer(g);
  return engine.reduce(f);
}

/// Normal form of each component of `v` modulo an ideal given by a Gröbner basis
/// (the ideal acts on every component).
inline Vector reduce_mod_ideal(const PrimeField& field, const Vector& v, const std::vector<Polynomial>& ideal_gb) {
  if (ideal_gb.empty() || v.is_zero()) return v;
  std::vector<VecTerm> out;
  Vector cur = v;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const VecTerm t = cur.terms()[pos];
    const Polynomial* red = nullptr;
    for (const auto& g : ideal_gb)
      if (g.lead().mono.divides(t.mono)) {
        red = &g;
        break;
      }
    if (red == nullptr) {
      out.push_back(t);
      ++pos;
      continue;
    }
    Monomial q = t.mono.quotient(red->lead().mono);
    Coeff c = field.neg(field.div(t.coeff, red->lead().coeff));
    Vector tail;
    tail.terms().assign(cur.terms().begin() + static_cast<std::ptrdiff_t>(pos), cur.terms().end());
    cur = vec::add_multiple(field, tail, c, q, Vector::from_polynomial(*red, t.comp));
    pos = 0;
  }
  Vector r;
  r.terms() = std::move(out);
  return r;
}

}  // namespace syzlab

#endif  // SYZLAB_GROEBNER_HPP
