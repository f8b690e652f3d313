#ifndef SYZLAB_HOMOLOGY_HPP
#define SYZLAB_HOMOLOGY_HPP

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzlab/invariants.hpp"

namespace syzlab {

/// A graded free module together with a submodule Q of relations; it stands
/// for F / (Q + I F).
struct AmbientQuotient {
  std::vector<int> shifts;
  std::vector<Vector> relations;
};

namespace detail {

/// Hom(F, N) with F free of shifts a and N = G0 / Q: component i*s + k sends
/// f_i to g_k and has shift b_k - a_i.
inline AmbientQuotient hom_ambient(const std::vector<int>& a, const PresentedModule& n) {
  AmbientQuotient h;
  const int s = n.generators();
  for (int ai : a)
    for (int bk : n.cover.shifts) h.shifts.push_back(bk - ai);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& r : n.relations) h.relations.push_back(vec::shift_components(r, static_cast<int>(i) * s));
  return h;
}

/// F (x) N: component l*s + k is f_l (x) g_k with shift a_l + b_k.
inline AmbientQuotient tensor_ambient(const std::vector<int>& a, const PresentedModule& n) {
  AmbientQuotient t;
  const int s = n.generators();
  for (int al : a)
    for (int bk : n.cover.shifts) t.shifts.push_back(al + bk);
  for (std::size_t l = 0; l < a.size(); ++l)
    for (const auto& r : n.relations) t.relations.push_back(vec::shift_components(r, static_cast<int>(l) * s));
  return t;
}

/// Columns of Hom(d, G0): Hom(F_{i-1}, G0) -> Hom(F_i, G0) for d : F_i -> F_{i-1}.
inline std::vector<Vector> hom_map_columns(const PrimeField& f, const Matrix& d, int s) {
  std::vector<std::vector<VecTerm>> img(static_cast<std::size_t>(d.rows() * s));
  for (int q = 0; q < d.cols(); ++q)
    for (const auto& t : d.columns[static_cast<std::size_t>(q)].terms())
      for (int k = 0; k < s; ++k) img[static_cast<std::size_t>(t.comp * s + k)].push_back({q * s + k, t.mono, t.coeff});
  std::vector<Vector> out;
  out.reserve(img.size());
  for (auto& terms : img) out.push_back(Vector::from_terms(f, std::move(terms)));
  return out;
}

/// Columns of d (x) G0: F_i (x) G0 -> F_{i-1} (x) G0.
inline std::vector<Vector> tensor_map_columns(const PrimeField& f, const Matrix& d, int s) {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(d.cols() * s));
  for (int q = 0; q < d.cols(); ++q)
    for (int k = 0; k < s; ++k) {
      std::vector<VecTerm> terms;
      for (const auto& t : d.columns[static_cast<std::size_t>(q)].terms()) terms.push_back({t.comp * s + k, t.mono, t.coeff});
      out.push_back(Vector::from_terms(f, std::move(terms)));
    }
  return out;
}

inline std::vector<Vector> basis_vectors(int nvars, int rank) {
  std::vector<Vector> out;
  for (int i = 0; i < rank; ++i) out.push_back(Vector::basis(nvars, i));
  return out;
}

inline LaurentPolynomial quotient_numerator(const GradedRing& ring, const std::vector<int>& shifts,
                                            const std::vector<Vector>& rels) {
  PresentedModule m{ring.shared_from_this(), GradedFreeModule(shifts), rels};
  auto leads = lead_term_ideals(m);
  LaurentPolynomial k;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    LaurentPolynomial part = leads[i].empty() ? LaurentPolynomial::monomial(0) : monomial_numerator(leads[i]);
    k = k + LaurentPolynomial::monomial(shifts[i]) * part;
  }
  return k;
}

}  // namespace detail

/// (Z + B) / B inside a free module F, where B already contains the relations
/// of the ambient quotient; I F is always understood.
struct HomologyPiece {
  std::vector<int> shifts;
  std::vector<Vector> cycles;      // Z
  std::vector<Vector> boundaries;  // B
  HilbertData hilbert;

  bool vanishes() const { return hilbert.is_zero(); }

  Subquotient present(const RingPtr& ring) const { return subquotient(ring, shifts, cycles, boundaries); }
};

/// Hilbert series of (Z + B)/B as HS(F/B) - HS(F/(Z + B)); zero iff Z lies in B.
inline HomologyPiece homology_piece(const GradedRing& ring, std::vector<int> shifts, std::vector<Vector> cycles,
                                    std::vector<Vector> boundaries, int degree_cap) {
  HomologyPiece h;
  h.shifts = std::move(shifts);
  h.cycles = std::move(cycles);
  h.boundaries = std::move(boundaries);
  std::vector<Vector> both = h.boundaries;
  both.insert(both.end(), h.cycles.begin(), h.cycles.end());
  LaurentPolynomial k = detail::quotient_numerator(ring, h.shifts, h.boundaries) -
                        detail::quotient_numerator(ring, h.shifts, both);
  h.hilbert = hilbert_from_numerator(k, ring.nvars(), degree_cap);
  return h;
}

struct HomologyEntry {
  int index = 0;
  bool vanishes = true;
  int krull_dim = -1;
  std::optional<long long> length;  // empty when the module has positive dimension
  int first_degree = 0;
  std::vector<long long> hilbert;  // H(first_degree) .. H(degree_cap)
  std::string numerator;
};

struct ExtTorReport {
  enum class Kind { ext, tor };
  Kind kind = Kind::ext;
  int lo = 0;
  int hi = 0;
  int degree_cap = 0;
  std::vector<HomologyEntry> entries;

  const HomologyEntry& at(int i) const { return entries.at(static_cast<std::size_t>(i - lo)); }

  /// Maximal runs [a, b] of vanishing indices.
  std::vector<std::pair<int, int>> zero_runs() const {
    std::vector<std::pair<int, int>> runs;
    for (const auto& e : entries) {
      if (!e.vanishes) continue;
      if (!runs.empty() && runs.back().second == e.index - 1)
        runs.back().second = e.index;
      else
        runs.push_back({e.index, e.index});
    }
    return runs;
  }

  int longest_zero_run() const {
    int best = 0;
    for (auto [a, b] : zero_runs()) best = std::max(best, b - a + 1);
    return best;
  }

  /// First run of at least `length` consecutive zeros, if any.
  std::optional<std::pair<int, int>> window(int length) const {
    for (auto [a, b] : zero_runs())
      if (b - a + 1 >= length) return std::make_pair(a, a + length - 1);
    return std::nullopt;
  }
};

inline HomologyEntry make_entry(int index, const HilbertData& h, int degree_cap) {
  HomologyEntry e;
  e.index = index;
  e.vanishes = h.is_zero();
  e.krull_dim = h.dim;
  e.numerator = h.numerator.to_string();
  if (!e.vanishes) {
    if (h.dim == 0) e.length = h.length();
    e.first_degree = h.first_degree;
    for (int d = h.first_degree; d <= degree_cap; ++d) e.hilbert.push_back(h.value(d));
  } else {
    e.length = 0;
  }
  return e;
}

/// Reporting cap: SYZLAB_DEGREE_CAP if set, else the largest shift of F_hi plus 4.
inline int default_degree_cap(const Resolution& res, int hi) {
  if (const char* env = std::getenv("SYZLAB_DEGREE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError("SYZLAB_DEGREE_CAP is not an integer");
    }
  }
  // Shifts grow along a minimal resolution, so this is the top shift of F_hi
  // (or of the last nonzero module of a finite resolution).
  int m = 0;
  for (int i = 0; i <= std::min(hi, res.computed_to()); ++i)
    for (int s : res.module(i).shifts) m = std::max(m, s);
  return m + 4;
}

namespace detail {

inline void check_range(const PresentedModule& m, const PresentedModule& n, int lo, int hi) {
  if (m.ring != n.ring) throw InputError("modules live over different rings");
  if (lo < 0 || hi < lo) throw InputError("invalid index range");
}

inline void check_resolution(const Resolution& res, int needed) {
  if (res.computed_to() < needed && !res.finite)
    throw InputError("index range exceeds the computed resolution (need step " + std::to_string(needed) + ")");
}

inline const Matrix* differential_or_null(const Resolution& res, int i) {
  if (i < 1 || i > res.computed_to()) return nullptr;
  return &res.differential(i);
}

}  // namespace detail

/// Ext^i(M, N) as the homology of Hom(F, N) at i, where F is `res`, a minimal
/// resolution of M computed at least to hi + 1.
inline HomologyPiece ext_piece(const Resolution& res, const PresentedModule& n, int i, int degree_cap) {
  const GradedRing& ring = *n.ring;
  const PrimeField& f = ring.field();
  const int s = n.generators();
  detail::check_resolution(res, i + 1);
  if (res.rank(i) == 0 || s == 0) return homology_piece(ring, {}, {}, {}, degree_cap);
  AmbientQuotient here = detail::hom_ambient(res.module(i).shifts, n);
  std::vector<Vector> cycles;
  if (res.rank(i + 1) == 0) {
    cycles = detail::basis_vectors(ring.nvars(), static_cast<int>(here.shifts.size()));
  } else {
    AmbientQuotient next = detail::hom_ambient(res.module(i + 1).shifts, n);
    cycles = kernel(ring, here.shifts, next.shifts, detail::hom_map_columns(f, res.differential(i + 1), s),
                    next.relations);
  }
  std::vector<Vector> boundaries = here.relations;
  if (i >= 1) {
    auto cols = detail::hom_map_columns(f, res.differential(i), s);
    boundaries.insert(boundaries.end(), cols.begin(), cols.end());
  }
  return homology_piece(ring, here.shifts, std::move(cycles), std::move(boundaries), degree_cap);
}

/// Tor_i(M, N) as the homology of F (x) N at i.
inline HomologyPiece tor_piece(const Resolution& res, const PresentedModule& n, int i, int degree_cap) {
  const GradedRing& ring = *n.ring;
  const PrimeField& f = ring.field();
  const int s = n.generators();
  detail::check_resolution(res, i + 1);
  if (res.rank(i) == 0 || s == 0) return homology_piece(ring, {}, {}, {}, degree_cap);
  AmbientQuotient here = detail::tensor_ambient(res.module(i).shifts, n);
  std::vector<Vector> cycles;
  if (i == 0) {
    cycles = detail::basis_vectors(ring.nvars(), static_cast<int>(here.shifts.size()));
  } else {
    AmbientQuotient prev = detail::tensor_ambient(res.module(i - 1).shifts, n);
    cycles = kernel(ring, here.shifts, prev.shifts, detail::tensor_map_columns(f, res.differential(i), s),
                    prev.relations);
  }
  std::vector<Vector> boundaries = here.relations;
  if (res.rank(i + 1) > 0) {
    auto cols = detail::tensor_map_columns(f, res.differential(i + 1), s);
    boundaries.insert(boundaries.end(), cols.begin(), cols.end());
  }
  return homology_piece(ring, here.shifts, std::move(cycles), std::move(boundaries), degree_cap);
}

inline ExtTorReport ext(const Resolution& res, const PresentedModule& n, int lo, int hi,
                        std::optional<int> degree_cap = std::nullopt) {
  if (res.ring != n.ring) throw InputError("modules live over different rings");
  if (lo < 0 || hi < lo) throw InputError("invalid index range");
  detail::check_resolution(res, hi + 1);
  ExtTorReport rep;
  rep.kind = ExtTorReport::Kind::ext;
  rep.lo = lo;
  rep.hi = hi;
  rep.degree_cap = degree_cap ? *degree_cap : default_degree_cap(res, hi);
  PresentedModule nmin = minimal_presentation(n).module;
  for (int i = lo; i <= hi; ++i) rep.entries.push_back(make_entry(i, ext_piece(res, nmin, i, rep.degree_cap).hilbert, rep.degree_cap));
  return rep;
}

inline ExtTorReport ext(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                        std::optional<int> degree_cap = std::nullopt) {
  detail::check_range(m, n, lo, hi);
  return ext(minimal_free_resolution(m, hi + 1), n, lo, hi, degree_cap);
}

inline ExtTorReport tor(const Resolution& res, const PresentedModule& n, int lo, int hi,
                        std::optional<int> degree_cap = std::nullopt) {
  if (res.ring != n.ring) throw InputError("modules live over different rings");
  if (lo < 0 || hi < lo) throw InputError("invalid index range");
  detail::check_resolution(res, hi + 1);
  ExtTorReport rep;
  rep.kind = ExtTorReport::Kind::tor;
  rep.lo = lo;
  rep.hi = hi;
  rep.degree_cap = degree_cap ? *degree_cap : default_degree_cap(res, hi);
  PresentedModule nmin = minimal_presentation(n).module;
  for (int i = lo; i <= hi; ++i) rep.entries.push_back(make_entry(i, tor_piece(res, nmin, i, rep.degree_cap).hilbert, rep.degree_cap));
  return rep;
}

inline ExtTorReport tor(const PresentedModule& m, const PresentedModule& n, int lo, int hi,
                        std::optional<int> degree_cap = std::nullopt) {
  detail::check_range(m, n, lo, hi);
  return tor(minimal_free_resolution(m, hi + 1), n, lo, hi, degree_cap);
}

/// Hom(M, N) as a subquotient of Hom(F0, G0), where F1 -> F0 and G1 -> G0 are
/// minimal presentations. Component i*s + k sends generator i of M to
/// generator k of N.
struct HomModule {
  Subquotient hom;
  PresentedModule source;  // minimal presentation of M used for the layout
  PresentedModule target;  // minimal presentation of N used for the layout
  std::optional<Vector> identity;  // set for End(M)

  const PresentedModule& module() const { return hom.module; }
};

inline HomModule hom_module(const PresentedModule& m, const PresentedModule& n) {
  if (m.ring != n.ring) throw InputError("modules live over different rings");
  const GradedRing& ring = *m.ring;
  HomModule out;
  out.source = minimal_presentation(m).module;
  out.target = minimal_presentation(n).module;
  const int s = out.target.generators();
  AmbientQuotient here = detail::hom_ambient(out.source.cover.shifts, out.target);
  std::vector<Vector> cycles;
  if (out.source.relations.empty()) {
    cycles = detail::basis_vectors(ring.nvars(), static_cast<int>(here.shifts.size()));
  } else {
    Matrix a = out.source.relation_matrix();
    AmbientQuotient next = detail::hom_ambient(a.source.shifts, out.target);
    cycles = kernel(ring, here.shifts, next.shifts, detail::hom_map_columns(ring.field(), a, s), next.relations);
  }
  out.hom = subquotient(m.ring, here.shifts, cycles, here.relations);
  return out;
}

/// End(M) with the identity recorded.
inline HomModule endomorphisms(const PresentedModule& m) {
  HomModule out = hom_module(m, m);
  const int r = out.source.generators();
  Vector id;
  for (int p = 0; p < r; ++p) id.terms().push_back({p * r + p, Monomial(m.ring->nvars()), 1});
  id = Vector::from_terms(m.ring->field(), id.terms());
  out.identity = id;
  return out;
}

/// True iff End(M) is generated by the identity, i.e. R -> End(M) is onto.
inline bool identity_generates(const HomModule& e) {
  const GradedRing& ring = *e.source.ring;
  if (!e.identity) throw InputError("identity is only defined for End(M)");
  std::vector<Vector> span = e.hom.relations;
  span.push_back(*e.identity);
  GroebnerEngine engine(ring.field(), ring.nvars(), e.hom.ambient_shifts);
  for (const auto& v : span) engine.add_generator(v);
  for (auto& q : ring.ideal_multiples(e.hom.ambient_shifts.size())) engine.add_generator(std::move(q));
  engine.complete();
  for (const auto& g : e.hom.generators)
    if (!engine.reduces_to_zero(g)) return false;
  return true;
}

struct SocleData {
  long long dimension = 0;
  std::vector<Vector> generators;  // elements of the cover of the minimal presentation
  PresentedModule module_presentation;  // the presentation the generators refer to
  std::vector<int> degrees;
};

/// (0 :_M m), a k-vector space.
inline SocleData socle(const PresentedModule& m) {
  const GradedRing& ring = *m.ring;
  SocleData out;
  out.module_presentation = minimal_presentation(m).module;
  const PresentedModule& mm = out.module_presentation;
  const int r = mm.generators();
  const int n = ring.nvars();
  if (r == 0) return out;
  if (n == 0) {
    out.generators = detail::basis_vectors(0, r);
  } else {
    // e_i -> sum_j x_j e_(j, i) in a target with shifts a_i - 1 (the shift makes it degree 0).
    std::vector<int> target;
    std::vector<Vector> rels;
    for (int j = 0; j < n; ++j) {
      for (int a : mm.cover.shifts) target.push_back(a - 1);
      for (const auto& rel : mm.relations) rels.push_back(vec::shift_components(rel, j * r));
    }
    std::vector<Vector> cols;
    for (int i = 0; i < r; ++i) {
      std::vector<VecTerm> terms;
      for (int j = 0; j < n; ++j) terms.push_back({j * r + i, Monomial::variable(n, j), 1});
      cols.push_back(Vector::from_terms(ring.field(), std::move(terms)));
    }
    out.generators = kernel(ring, mm.cover.shifts, target, cols, rels);
  }
  auto chosen = select_minimal_generators(ring, mm.cover.shifts, out.generators, mm.relations);
  std::vector<Vector> kept;
  for (std::size_t i : chosen) {
    kept.push_back(out.generators[i]);
    out.degrees.push_back(out.generators[i].degree(mm.cover.shifts));
  }
  out.generators = std::move(kept);
  out.dimension = static_cast<long long>(out.generators.size());
  return out;
}

struct DualData {
  HomModule dual;     // M* = Hom(M, R)
  HomModule bidual;   // M** = Hom(M*, R)
  bool injective = false;
  bool surjective = false;
  bool hilbert_equal = false;  // H_M = H_{M**} up to the cap
  bool iso() const { return injective && surjective && hilbert_equal; }
};

/// M*, M** and whether the natural map M -> M** is an isomorphism.
inline DualData dual_and_biduality(const PresentedModule& m, int degree_cap = 12) {
  const GradedRing& ring = *m.ring;
  const PrimeField& f = ring.field();
  const int nv = ring.nvars();
  PresentedModule r = free_module(m.ring, 1);
  DualData out;
  out.dual = hom_module(m, r);
  out.bidual = hom_module(out.dual.module(), r);
  const PresentedModule& src = out.dual.source;  // layout of the generators of M*
  const auto& z = out.dual.hom.generators;       // z_j in Hom(F0, R)
  const PresentedModule& dual_min = out.bidual.source;  // minimal presentation of M*

  // dual_min is the cover of M* on the z_j: minimal_presentation of a presented
  // module with minimal generators keeps them in order.
  if (dual_min.generators() != static_cast<int>(z.size()))
    throw CrossCheckFailure("dual module changed generator count under minimal presentation");

  // Phi(e_i) = sum_j z_j[i] e_j* in Hom(M*-cover, R).
  std::vector<Vector> phi;
  std::vector<int> g_star = out.bidual.hom.ambient_shifts;
  for (int i = 0; i < src.generators(); ++i) {
    std::vector<VecTerm> terms;
    for (std::size_t j = 0; j < z.size(); ++j)
      for (const auto& t : z[j].terms())
        if (t.comp == i) terms.push_back({static_cast<int>(j), t.mono, t.coeff});
    phi.push_back(Vector::from_terms(f, std::move(terms)));
  }

  auto ker = kernel(ring, src.cover.shifts, g_star, phi, {});
  out.injective = select_minimal_generators(ring, src.cover.shifts, ker, src.relations).empty();

  GroebnerEngine engine(f, nv, g_star);
  for (const auto& v : phi) engine.add_generator(v);
  for (auto& q : ring.ideal_multiples(g_star.size())) engine.add_generator(std::move(q));
  engine.complete();
  out.surjective = true;
  for (const auto& g : out.bidual.hom.generators)
    if (!engine.reduces_to_zero(g)) out.surjective = false;

  auto hm = hilbert(m, degree_cap);
  auto hb = hilbert(out.bidual.module(), degree_cap);
  out.hilbert_equal = true;
  int low = std::min(hm.is_zero() ? 0 : hm.first_degree, hb.is_zero() ? 0 : hb.first_degree);
  for (int d = low; d <= degree_cap; ++d)
    if (hm.value(d) != hb.value(d)) out.hilbert_equal = false;
  return out;
}

}  // namespace syzlab

#endif  // SYZLAB_HOMOLOGY_HPP
