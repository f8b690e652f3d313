#ifndef SYZLAB_INVARIANTS_HPP
#define SYZLAB_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "syzlab/hilbert.hpp"

namespace syzlab {

/// M as a module over the ambient polynomial ring: the same cover with I F
/// added to the relations.
inline PresentedModule over_ambient(const PresentedModule& m) {
  PresentedModule out;
  out.ring = m.ring->ambient();
  out.cover = m.cover;
  out.relations = m.relations;
  for (int i = 0; i < m.generators(); ++i)
    for (const auto& g : m.ring->ideal_generators()) out.relations.push_back(Vector::from_polynomial(g, i));
  return out;
}

/// Minimal resolution of M over the ambient ring; finite by the syzygy theorem.
inline Resolution ambient_resolution(const PresentedModule& m) {
  Resolution res = minimal_free_resolution(over_ambient(m), m.ring->nvars() + 1);
  if (!res.finite) throw CrossCheckFailure("resolution over the polynomial ring did not terminate");
  return res;
}

/// pd over S; -1 for the zero module.
inline int projective_dimension(const Resolution& res) {
  int pd = -1;
  for (int i = 0; i <= res.computed_to(); ++i)
    if (res.rank(i) > 0) pd = i;
  return pd;
}

/// depth M = n - pd_S(M).
inline int depth(const PresentedModule& m) {
  Resolution res = ambient_resolution(m);
  int pd = projective_dimension(res);
  if (pd < 0) throw InputError("depth of the zero module is undefined");
  return m.ring->nvars() - pd;
}

struct RingClassification {
  int dim = 0;
  int depth = 0;
  int embdim = 0;
  long long multiplicity = 0;
  bool regular = false;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  std::optional<long long> type;  // CM rings only
  bool minimal_multiplicity = false;
  bool abhyankar_holds = false;
  HilbertData hilbert;
  BettiTable ambient_betti;  // resolution of R over S
};

inline RingClassification classify(const GradedRing& r) {
  RingClassification c;
  RingPtr ring = r.shared_from_this();
  c.hilbert = hilbert(r);
  c.dim = c.hilbert.dim;
  c.multiplicity = c.hilbert.multiplicity;
  Resolution res = ambient_resolution(free_module(ring, 1));
  int pd = projective_dimension(res);
  c.depth = r.nvars() - pd;
  c.ambient_betti = res.betti;
  c.embdim = r.embedding_dimension();
  c.regular = c.embdim == c.dim;
  c.cohen_macaulay = c.depth == c.dim;
  if (c.cohen_macaulay) c.type = res.betti.total(pd);
  c.gorenstein = c.cohen_macaulay && c.type == 1;
  long long bound = static_cast<long long>(c.embdim) - c.dim + 1;
  c.minimal_multiplicity = c.multiplicity == bound;
  c.abhyankar_holds = !c.cohen_macaulay || c.multiplicity >= bound;
  if (c.regular && !c.gorenstein) throw CrossCheckFailure("regular ring classified as non-Gorenstein");
  return c;
}

/// omega_R = Ext^c_S(R, S(-n)) for a CM ring, c = codim, presented over R as
/// the cokernel of the transposed last differential.
inline PresentedModule canonical_module(const RingPtr& ring) {
  Resolution res = ambient_resolution(free_module(ring, 1));
  const int n = ring->nvars();
  const int pd = projective_dimension(res);
  if (n - pd != hilbert(*ring).dim)
    throw HypothesisRefused("the ring is not Cohen-Macaulay, so it has no canonical module here");
  const auto& fc = res.module(pd);
  PresentedModule omega;
  omega.ring = ring;
  for (int a : fc.shifts) omega.cover.shifts.push_back(n - a);
  if (pd > 0) {
    const Matrix& d = res.differential(pd);
    const PrimeField& f = ring->field();
    std::vector<std::vector<VecTerm>> cols(static_cast<std::size_t>(d.rows()));
    for (int j = 0; j < d.cols(); ++j)
      for (const auto& t : d.columns[static_cast<std::size_t>(j)].terms())
        cols[static_cast<std::size_t>(t.comp)].push_back({j, t.mono, t.coeff});
    for (auto& c : cols) {
      Vector v = ring->normal_form(Vector::from_terms(f, std::move(c)));
      if (!v.is_zero()) omega.relations.push_back(std::move(v));
    }
  }
  return omega;
}

inline PresentedModule canonical_module(const GradedRing& r) { return canonical_module(r.shared_from_this()); }

}  // namespace syzlab

#endif  // SYZLAB_INVARIANTS_HPP
