#ifndef SYZLAB_MODULE_HPP
#define SYZLAB_MODULE_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "syzlab/ring.hpp"

namespace syzlab {

/// coker(relations: F1 -> cover) over a GradedRing. The relation columns are
/// homogeneous with respect to the cover shifts. A module with no relation
/// columns is free.
struct PresentedModule {
  RingPtr ring;
  GradedFreeModule cover;
  std::vector<Vector> relations;

  int generators() const { return cover.rank(); }
  const std::vector<int>& shifts() const { return cover.shifts; }

  Matrix relation_matrix() const {
    Matrix m;
    m.target = cover;
    for (const auto& r : relations) {
      m.source.shifts.push_back(r.degree(cover.shifts));
      m.columns.push_back(r);
    }
    return m;
  }

  void validate() const {
    if (!ring) throw InputError("module without a ring");
    for (const auto& r : relations) {
      if (r.is_zero()) continue;
      if (r.max_component() >= cover.rank()) throw InputError("relation has more entries than the cover rank");
      for (const auto& t : r.terms())
        if (t.mono.nvars() != ring->nvars()) throw InputError("relation over a different number of variables");
      if (!r.is_homogeneous(cover.shifts)) throw InputError("relation is not homogeneous for the cover shifts");
    }
  }
};

inline PresentedModule free_module(RingPtr ring, std::vector<int> shifts) {
  return PresentedModule{std::move(ring), GradedFreeModule(std::move(shifts)), {}};
}

inline PresentedModule free_module(RingPtr ring, int rank, int shift = 0) {
  return free_module(std::move(ring), std::vector<int>(static_cast<std::size_t>(rank), shift));
}

/// R/J generated in degree `shift`.
inline PresentedModule cyclic_module(RingPtr ring, const std::vector<Polynomial>& ideal, int shift = 0) {
  PresentedModule m{ring, GradedFreeModule({shift}), {}};
  for (const auto& g : ideal) {
    Polynomial r = ring->normal_form(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw InputError("ideal generator is not homogeneous");
    m.relations.push_back(Vector::from_polynomial(r, 0));
  }
  return m;
}

/// The residue field k = R/m.
inline PresentedModule residue_field(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return cyclic_module(std::move(ring), vars);
}

inline PresentedModule direct_sum(const std::vector<PresentedModule>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  PresentedModule out{parts.front().ring, {}, {}};
  int offset = 0;
  for (const auto& p : parts) {
    if (p.ring != out.ring) throw InputError("direct sum of modules over different rings");
    for (int s : p.cover.shifts) out.cover.shifts.push_back(s);
    for (const auto& r : p.relations) out.relations.push_back(vec::shift_components(r, offset));
    offset += p.cover.rank();
  }
  return out;
}

/// Adds delta to every generator degree.
inline PresentedModule shifted(const PresentedModule& m, int delta) {
  PresentedModule out = m;
  for (auto& s : out.cover.shifts) s += delta;
  return out;
}

inline std::vector<int> degrees_of(const std::vector<Vector>& vs, const std::vector<int>& shifts) {
  std::vector<int> d;
  d.reserve(vs.size());
  for (const auto& v : vs) d.push_back(v.degree(shifts));
  return d;
}

/// Indices of a minimal generating subset of span(candidates) modulo
/// span(relations) + I F, chosen greedily by degree then input order.
inline std::vector<std::size_t> select_minimal_generators(const GradedRing& ring, const std::vector<int>& shifts,
                                                          const std::vector<Vector>& candidates,
                                                          const std::vector<Vector>& relations) {
  GroebnerEngine engine(ring.field(), ring.nvars(), shifts);
  for (const auto& r : relations) engine.add_generator(r);
  for (auto& q : ring.ideal_multiples(shifts.size())) engine.add_generator(std::move(q));
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!candidates[i].is_zero()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].degree(shifts) < candidates[b].degree(shifts);
  });
  std::vector<std::size_t> selected;
  for (std::size_t idx : order) {
    int d = candidates[idx].degree(shifts);
    engine.complete_to(d);
    Vector r = engine.reduce(candidates[idx]);
    if (r.is_zero()) continue;
    selected.push_back(idx);
    engine.add_generator(std::move(r));
    engine.complete_to(d);
  }
  return selected;
}

/// Replaces each element by its remainder on division by the others and I F.
/// The span is unchanged, and minimality keeps every remainder nonzero.
inline void interreduce(const GradedRing& ring, const std::vector<int>& shifts, std::vector<Vector>& gens) {
  if (gens.size() < 2) return;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    GroebnerEngine div(ring.field(), ring.nvars(), shifts);
    for (auto& q : ring.ideal_multiples(shifts.size())) div.add_reducer(std::move(q));
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i && gens[j].degree(shifts) <= gens[i].degree(shifts)) div.add_reducer(gens[j]);
    Vector r = div.reduce(gens[i]);
    if (!r.is_zero()) gens[i] = vec::make_monic(ring.field(), r);
  }
}

/// Minimal homogeneous generators of the kernel of the map
///   R(source_shifts) -> R(target_shifts) / span(target_relations),  e_j |-> columns[j],
/// returned as elements of the source module, reduced modulo I and sorted by degree.
///
/// The kernel is read off a Gröbner basis of the graph module
/// {(columns[j], e_j)} + target relations + I*(everything) in target (+) source,
/// with position-over-term order placing all target components first.
inline std::vector<Vector> kernel(const GradedRing& ring, const std::vector<int>& source_shifts,
                                  const std::vector<int>& target_shifts, const std::vector<Vector>& columns,
                                  const std::vector<Vector>& target_relations) {
  if (columns.size() != source_shifts.size()) throw InputError("kernel: one column per source basis element required");
  const int t = static_cast<int>(target_shifts.size());
  const int m = static_cast<int>(source_shifts.size());
  for (int j = 0; j < m; ++j) {
    const auto& c = columns[static_cast<std::size_t>(j)];
    if (!c.is_zero() && c.degree(target_shifts) != source_shifts[static_cast<std::size_t>(j)])
      throw InputError("kernel: column degree does not match the source shift");
    if (c.max_component() >= t) throw InputError("kernel: column has more entries than the target rank");
  }
  std::vector<int> aug = target_shifts;
  aug.insert(aug.end(), source_shifts.begin(), source_shifts.end());
  const int nv = ring.nvars();
  GroebnerEngine graph(ring.field(), nv, aug);
  for (int j = 0; j < m; ++j)
    graph.add_generator(vec::concat(columns[static_cast<std::size_t>(j)], Vector::basis(nv, j), t));
  for (const auto& q : target_relations) graph.add_generator(q);
  for (auto& q : ring.ideal_multiples(aug.size())) graph.add_generator(std::move(q));

  GroebnerEngine chosen(ring.field(), nv, source_shifts);
  for (auto& q : ring.ideal_multiples(source_shifts.size())) chosen.add_generator(std::move(q));

  std::vector<Vector> out;
  std::size_t seen = 0;
  while (graph.has_pending()) {
    int d = graph.next_degree();
    graph.complete_to(d);
    std::vector<Vector> candidates;
    for (std::size_t k = seen; k < graph.size(); ++k) {
      const Vector& e = graph.elements()[k];
      if (e.lead().comp >= t) candidates.push_back(vec::tail_part(e, t));
    }
    seen = graph.size();
    if (candidates.empty()) continue;
    chosen.complete_to(d);
    for (auto& c : candidates) {
      Vector r = chosen.reduce(c);
      if (r.is_zero()) continue;
      out.push_back(ring.normal_form(c));
      chosen.add_generator(std::move(r));
      chosen.complete_to(d);
    }
  }
  interreduce(ring, source_shifts, out);
  return out;
}

/// Generators of the kernel of a homogeneous matrix over the ring.
inline Matrix syzygies(const GradedRing& ring, const Matrix& mat) {
  Matrix out;
  out.target = mat.source;
  out.columns = kernel(ring, mat.source.shifts, mat.target.shifts, mat.columns, {});
  out.source.shifts = degrees_of(out.columns, mat.source.shifts);
  return out;
}

/// (span(gens) + Q) / Q for a submodule Q = span(relations) of a free module,
/// presented on a minimal subset of `gens`.
struct Subquotient {
  PresentedModule module;
  std::vector<Vector> generators;   // ambient elements matching the cover basis
  std::vector<std::size_t> chosen;  // indices into the input list
  std::vector<int> ambient_shifts;
  std::vector<Vector> relations;
};

inline Subquotient subquotient(RingPtr ring, const std::vector<int>& ambient_shifts, const std::vector<Vector>& gens,
                               const std::vector<Vector>& relations) {
  Subquotient sq;
  sq.ambient_shifts = ambient_shifts;
  sq.relations = relations;
  sq.chosen = select_minimal_generators(*ring, ambient_shifts, gens, relations);
  std::vector<int> cover;
  for (std::size_t i : sq.chosen) {
    sq.generators.push_back(ring->normal_form(gens[i]));
    cover.push_back(gens[i].degree(ambient_shifts));
  }
  sq.module.ring = ring;
  sq.module.cover = GradedFreeModule(cover);
  sq.module.relations = kernel(*ring, cover, ambient_shifts, sq.generators, relations);
  return sq;
}

/// The ideal generated by `gens` as a module (a submodule of R).
inline Subquotient ideal_submodule(RingPtr ring, const std::vector<Polynomial>& gens) {
  std::vector<Vector> vs;
  for (const auto& g : gens) vs.push_back(Vector::from_polynomial(ring->normal_form(g), 0));
  return subquotient(ring, {0}, vs, {});
}

inline PresentedModule ideal_module(RingPtr ring, const std::vector<Polynomial>& gens) {
  return ideal_submodule(std::move(ring), gens).module;
}

/// Reduced Gröbner basis in S of the preimage of the ideal of R generated by gens.
inline std::vector<Polynomial> ideal_preimage_gb(const GradedRing& ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = ring.groebner_basis();
  for (const auto& g : gens)
    if (!g.is_zero()) all.push_back(g);
  return buchberger(all, ring.field(), ring.nvars());
}

/// (I : J) over R = S/I_R, returned as the reduced Gröbner basis of its preimage in S.
inline std::vector<Polynomial> ideal_colon(const GradedRing& ring, const std::vector<Polynomial>& i_gens,
                                           const std::vector<Polynomial>& j_gens) {
  std::vector<Polynomial> js;
  for (const auto& g : j_gens) {
    Polynomial r = ring.normal_form(g);
    if (!r.is_zero()) js.push_back(r);
  }
  if (js.empty()) return {ring.one()};
  std::vector<int> target;
  Vector column;
  std::vector<Vector> rels;
  for (std::size_t j = 0; j < js.size(); ++j) {
    target.push_back(-js[j].degree());
    column = vec::add(ring.field(), column, Vector::from_polynomial(js[j], static_cast<int>(j)));
    for (const auto& h : i_gens)
      if (!h.is_zero()) rels.push_back(Vector::from_polynomial(h, static_cast<int>(j)));
  }
  auto ker = kernel(ring, {0}, target, {column}, rels);
  std::vector<Polynomial> gens;
  for (const auto& k : ker) gens.push_back(k.component(ring.field(), ring.nvars(), 0));
  return ideal_preimage_gb(ring, gens);
}

/// ann_R(M) = {f : f M = 0}, as the reduced Gröbner basis of its preimage in S.
inline std::vector<Polynomial> module_annihilator(const PresentedModule& m) {
  const GradedRing& ring = *m.ring;
  const int r = m.generators();
  if (r == 0) return {ring.one()};
  std::vector<int> target;
  std::vector<Vector> rels;
  Vector column;
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k) target.push_back(m.cover.shifts[k] - m.cover.shifts[i]);
    column.terms().push_back({i * r + i, Monomial(ring.nvars()), 1});
    for (const auto& rel : m.relations) rels.push_back(vec::shift_components(rel, i * r));
  }
  auto ker = kernel(ring, {0}, target, {column}, rels);
  std::vector<Polynomial> gens;
  for (const auto& k : ker) gens.push_back(k.component(ring.field(), ring.nvars(), 0));
  return ideal_preimage_gb(ring, gens);
}

/// True iff every element of `sub` lies in the ideal with Gröbner basis `gb` (both in S).
inline bool ideal_contains(const std::vector<Polynomial>& gb, const std::vector<Polynomial>& sub) {
  for (const auto& f : sub)
    if (!reduce(f, gb).is_zero()) return false;
  return true;
}

/// True iff the ideal of R with preimage GB `gb` is the zero ideal of R.
inline bool ideal_is_zero_in(const GradedRing& ring, const std::vector<Polynomial>& gb) {
  for (const auto& f : gb)
    if (!ring.normal_form(f).is_zero()) return false;
  return true;
}

}  // namespace syzlab

#endif  // SYZLAB_MODULE_HPP
