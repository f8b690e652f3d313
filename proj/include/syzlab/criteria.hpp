#ifndef SYZLAB_CRITERIA_HPP
#define SYZLAB_CRITERIA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzlab/homology.hpp"

namespace syzlab {

// ---------------------------------------------------------------- summands

struct FreeSummandWitness {
  Vector homomorphism;  // phi in Hom(F0, R): component i is phi(e_i)
  int generator = 0;    // phi(e_generator) is the nonzero constant below
  Coeff constant = 0;
};

struct TraceData {
  std::vector<Polynomial> generators;  // images phi(e_i), nonzero in R
  std::vector<Polynomial> ideal_gb;    // GB of the preimage of the trace in S
  bool free_summand = false;
  std::optional<FreeSummandWitness> witness;
  PresentedModule presentation;  // minimal presentation the witness refers to
};

/// Trace ideal: the ideal generated by phi(m) over all phi in Hom(M, R).
/// Graded, so it is the unit ideal exactly when some generator value is a
/// nonzero constant; phi / c is then a split surjection onto R.
inline TraceData trace_ideal(const PresentedModule& m) {
  const GradedRing& ring = *m.ring;
  TraceData out;
  HomModule dual = hom_module(m, free_module(m.ring, 1));
  out.presentation = dual.source;
  const auto& z = dual.hom.generators;
  for (const auto& phi : z)
    for (int i = 0; i < dual.source.generators(); ++i) {
      Polynomial v = ring.normal_form(phi.component(ring.field(), ring.nvars(), i));
      if (v.is_zero()) continue;
      if (!out.witness && v.degree() == 0) out.witness = FreeSummandWitness{phi, i, v.lead().coeff};
      out.generators.push_back(std::move(v));
    }
  out.free_summand = out.witness.has_value();
  out.ideal_gb = ideal_preimage_gb(ring, out.generators);
  return out;
}

/// The zero module is reported as having no free summand.
inline bool has_free_summand(const PresentedModule& m) { return trace_ideal(m).free_summand; }

// ---------------------------------------------------------- semidualizing

struct BoundedVerdict {
  bool yes = false;
  int bound = 0;
  std::string failed;  // empty when yes
  std::optional<int> failed_index;
  std::string detail;
};

/// R -> End(M) an isomorphism and Ext^i(M, M) = 0 for 1 <= i <= bound.
inline BoundedVerdict is_semidualizing_up_to(const PresentedModule& m, int bound) {
  if (bound < 1) throw InputError("bound must be at least 1");
  BoundedVerdict v;
  v.bound = bound;
  const GradedRing& ring = *m.ring;
  auto ann = module_annihilator(m);
  if (!ideal_is_zero_in(ring, ann)) {
    v.failed = "annihilator";
    for (const auto& g : ann)
      if (!ring.normal_form(g).is_zero()) {
        v.detail = "ann(M) contains " + ring.format(ring.normal_form(g));
        break;
      }
    return v;
  }
  HomModule e = endomorphisms(m);
  if (!identity_generates(e)) {
    v.failed = "endomorphisms";
    v.detail = "End(M) needs " + std::to_string(e.module().generators()) + " generators and is not R * id";
    return v;
  }
  auto rep = ext(m, m, 1, bound);
  for (const auto& entry : rep.entries)
    if (!entry.vanishes) {
      v.failed = "ext";
      v.failed_index = entry.index;
      v.detail = "Ext^" + std::to_string(entry.index) + "(M,M) has Hilbert numerator " + entry.numerator;
      return v;
    }
  v.yes = true;
  return v;
}

// ------------------------------------------------------- syzygy images of k

struct SyzygyPart {
  int n = 0;
  int multiplicity = 1;
};

struct ImageCertificate {
  bool certified = false;
  bool nonzero = false;
  bool mcm = false;
  int depth = -1;
  int ring_dim = 0;
  std::vector<SyzygyPart> parts;
  int quotient_relations = 0;
  std::string reason;  // why certification was refused
};

struct SyzygyImage {
  PresentedModule module;
  ImageCertificate certificate;
};

/// (sum of Omega_n(k)^{j_n}) / span(quotient), certified MCM when depth = dim R.
/// `quotient` lives in the cover of the direct sum, in the order given.
inline SyzygyImage syzygy_image(const RingPtr& ring, std::vector<SyzygyPart> parts,
                                const std::vector<Vector>& quotient = {}) {
  if (parts.empty()) throw InputError("syzygy image needs at least one summand");
  int top = 0;
  for (const auto& p : parts) {
    if (p.n < 0 || p.multiplicity < 1) throw InputError("syzygy parts need n >= 0 and multiplicity >= 1");
    top = std::max(top, p.n);
  }
  Resolution res = minimal_free_resolution(residue_field(ring), top + 1);
  std::vector<PresentedModule> summands;
  for (const auto& p : parts)
    for (int j = 0; j < p.multiplicity; ++j) summands.push_back(syzygy_module(res, p.n));
  SyzygyImage out;
  out.module = direct_sum(summands);
  for (const auto& q : quotient) {
    if (q.max_component() >= out.module.generators()) throw InputError("quotient element outside the direct sum");
    if (!q.is_homogeneous(out.module.cover.shifts)) throw InputError("quotient element is not homogeneous");
    out.module.relations.push_back(q);
  }
  out.module = minimal_presentation(out.module).module;
  auto& c = out.certificate;
  c.parts = std::move(parts);
  c.quotient_relations = static_cast<int>(quotient.size());
  c.ring_dim = hilbert(*ring).dim;
  c.nonzero = !hilbert(out.module).is_zero();
  if (!c.nonzero) {
    c.reason = "the image is the zero module";
    return out;
  }
  c.depth = depth(out.module);
  c.mcm = c.depth == c.ring_dim;
  if (!c.mcm) {
    c.reason = "the image is not maximal Cohen-Macaulay (depth " + std::to_string(c.depth) + " < dim " +
               std::to_string(c.ring_dim) + ")";
    return out;
  }
  c.certified = true;
  return out;
}

// ------------------------------------------------------------- verdicts

struct CriterionVerdict {
  std::string criterion;
  std::vector<std::string> inputs;
  int window_length = 0;  // d + 1
  std::optional<std::pair<int, int>> window;
  std::string window_source;  // "ext" or "tor"
  std::string outcome;        // "window-found", "inconclusive-by-theorem", "found", "not-found"
  bool verdict = false;       // the property concluded: regular or Gorenstein
  bool cross_check = false;   // the classifier's answer
  bool agreement = false;
  std::optional<int> found_at;
  std::vector<std::pair<int, bool>> scan;  // (n, free summand) for syzygy scans
  std::vector<ExtTorReport> reports;
};

namespace detail {

inline RingClassification require_minimal_multiplicity(const GradedRing& ring) {
  RingClassification c = classify(ring);
  if (!c.cohen_macaulay) throw HypothesisRefused("the ring is not Cohen-Macaulay");
  if (!c.minimal_multiplicity)
    throw HypothesisRefused("the ring does not have minimal multiplicity (e = " + std::to_string(c.multiplicity) +
                            ", mu(m) - dim + 1 = " + std::to_string(c.embdim - c.dim + 1) + ")");
  return c;
}

inline void require_certified(const SyzygyImage& m, const std::string& name) {
  if (!m.certificate.certified)
    throw HypothesisRefused(name + " is not a certified MCM image of syzygies of k: " + m.certificate.reason);
}

inline void require_bound(int bound, int d) {
  if (bound < d + 1) throw InputError("bound must be at least dim R + 1 = " + std::to_string(d + 1));
}

inline void take_window(CriterionVerdict& v, const ExtTorReport& rep, const std::string& source) {
  if (v.window) return;
  if (auto w = rep.window(v.window_length)) {
    v.window = w;
    v.window_source = source;
  }
}

inline void conclude(CriterionVerdict& v) {
  v.verdict = v.window.has_value();
  v.outcome = v.verdict ? "window-found" : "inconclusive-by-theorem";
  v.agreement = v.verdict == v.cross_check;
}

}  // namespace detail

/// Ext/Tor(M, N) vanishing on d + 1 consecutive indices in [1, bound] decides regularity.
inline CriterionVerdict regularity_criterion(const SyzygyImage& m, const SyzygyImage& n, int bound) {
  if (m.module.ring != n.module.ring) throw InputError("modules live over different rings");
  const GradedRing& ring = *m.module.ring;
  auto cls = detail::require_minimal_multiplicity(ring);
  detail::require_certified(m, "M");
  detail::require_certified(n, "N");
  detail::require_bound(bound, cls.dim);
  CriterionVerdict v;
  v.criterion = "regularity";
  v.window_length = cls.dim + 1;
  Resolution res = minimal_free_resolution(m.module, bound + 1);
  v.reports.push_back(ext(res, n.module, 1, bound));
  v.reports.push_back(tor(res, n.module, 1, bound));
  detail::take_window(v, v.reports[0], "ext");
  detail::take_window(v, v.reports[1], "tor");
  v.cross_check = cls.regular;
  detail::conclude(v);
  return v;
}

/// Ext^i(L, R) vanishing on d + 1 consecutive indices decides Gorensteinness.
inline CriterionVerdict gorenstein_criterion_ext_L_R(const SyzygyImage& l, int bound) {
  const GradedRing& ring = *l.module.ring;
  auto cls = detail::require_minimal_multiplicity(ring);
  detail::require_certified(l, "L");
  detail::require_bound(bound, cls.dim);
  CriterionVerdict v;
  v.criterion = "gorenstein-ext";
  v.window_length = cls.dim + 1;
  v.reports.push_back(ext(l.module, free_module(l.module.ring, 1), 1, bound));
  detail::take_window(v, v.reports[0], "ext");
  v.cross_check = cls.gorenstein;
  detail::conclude(v);
  return v;
}

/// Ext^i(omega, L) or Tor_i(omega, L) vanishing on d + 1 consecutive indices decides Gorensteinness.
inline CriterionVerdict gorenstein_criterion_omega(const SyzygyImage& l, int bound) {
  const GradedRing& ring = *l.module.ring;
  auto cls = detail::require_minimal_multiplicity(ring);
  detail::require_certified(l, "L");
  detail::require_bound(bound, cls.dim);
  CriterionVerdict v;
  v.criterion = "gorenstein-omega";
  v.window_length = cls.dim + 1;
  Resolution res = minimal_free_resolution(canonical_module(l.module.ring), bound + 1);
  v.reports.push_back(ext(res, l.module, 1, bound));
  v.reports.push_back(tor(res, l.module, 1, bound));
  detail::take_window(v, v.reports[0], "ext");
  detail::take_window(v, v.reports[1], "tor");
  v.cross_check = cls.gorenstein;
  detail::conclude(v);
  return v;
}

/// Scans Omega_n(omega), 0 <= n <= n_max, for a free summand; one exists iff R is Gorenstein, and then at n = 0.
inline CriterionVerdict gorenstein_scan_syzygies_of_omega(const RingPtr& ring, int n_max) {
  if (n_max < 0) throw InputError("n_max must be non-negative");
  auto cls = classify(*ring);
  if (!cls.cohen_macaulay) throw HypothesisRefused("the ring is not Cohen-Macaulay");
  CriterionVerdict v;
  v.criterion = "gorenstein-omega-scan";
  Resolution res = minimal_free_resolution(canonical_module(ring), n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    bool free = has_free_summand(syzygy_module(res, n));
    v.scan.push_back({n, free});
    if (free && !v.found_at) v.found_at = n;
  }
  v.verdict = v.found_at.has_value();
  v.outcome = v.verdict ? "found" : "not-found";
  v.cross_check = cls.gorenstein;
  v.agreement = v.verdict == v.cross_check && (!v.found_at || *v.found_at == 0);
  return v;
}

struct GdimVerdict {
  BoundedVerdict result;
  bool biduality = false;
  bool corollary_applies = false;  // certified image of syzygies of k over a minimal-multiplicity ring
  bool gorenstein = false;
  bool agreement = true;  // when the corollary applies, yes must imply Gorenstein
};

/// Biduality plus Ext^i(L, R) = Ext^i(L*, R) = 0 for 1 <= i <= bound.
inline GdimVerdict gdim_zero_up_to(const PresentedModule& l, int bound,
                                   const std::optional<ImageCertificate>& cert = std::nullopt) {
  if (bound < 1) throw InputError("bound must be at least 1");
  GdimVerdict g;
  g.result.bound = bound;
  PresentedModule r = free_module(l.ring, 1);
  DualData dd = dual_and_biduality(l);
  g.biduality = dd.iso();
  auto fill = [&]() {
    if (!g.biduality) {
      g.result.failed = "biduality";
      g.result.detail = std::string("natural map M -> M** is not ") +
                        (!dd.injective ? "injective" : !dd.surjective ? "surjective" : "degree-preserving");
      return;
    }
    auto e1 = ext(l, r, 1, bound);
    for (const auto& e : e1.entries)
      if (!e.vanishes) {
        g.result.failed = "ext-L";
        g.result.failed_index = e.index;
        return;
      }
    auto e2 = ext(dd.dual.module(), r, 1, bound);
    for (const auto& e : e2.entries)
      if (!e.vanishes) {
        g.result.failed = "ext-dual";
        g.result.failed_index = e.index;
        return;
      }
    g.result.yes = true;
  };
  fill();
  auto cls = classify(*l.ring);
  g.gorenstein = cls.gorenstein;
  g.corollary_applies = cert && cert->certified && cls.cohen_macaulay && cls.minimal_multiplicity;
  if (g.corollary_applies && g.result.yes) g.agreement = g.gorenstein;
  return g;
}

// ------------------------------------------------------- syzygy audits

struct AuditRow {
  int n = 0;
  bool zero = false;
  bool free_summand = false;
  bool in_window = false;
  std::optional<BoundedVerdict> semidualizing;  // checked inside the window only
  bool violation = false;
};

struct AuditReport {
  int dim = 0;
  bool mcm = false;
  int window_start = 0;
  std::vector<AuditRow> rows;
  int violations = 0;
};

/// Omega_n(M) for n in the window (n >= d + 1, or n >= 1 for MCM M) has no
/// free summand and is not semidualizing. Rows outside the window are informational.
inline AuditReport no_summand_audit(const PresentedModule& m, int n_max, int semidual_bound = 2) {
  if (n_max < 0) throw InputError("n_max must be non-negative");
  auto cls = classify(*m.ring);
  if (!cls.cohen_macaulay) throw HypothesisRefused("the ring is not Cohen-Macaulay");
  AuditReport rep;
  rep.dim = cls.dim;
  rep.mcm = !hilbert(m).is_zero() && depth(m) == cls.dim;
  rep.window_start = rep.mcm ? 1 : cls.dim + 1;
  Resolution res = minimal_free_resolution(m, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    AuditRow row;
    row.n = n;
    PresentedModule omega = syzygy_module(res, n);
    row.zero = hilbert(omega).is_zero();
    row.in_window = n >= rep.window_start;
    if (!row.zero) {
      row.free_summand = has_free_summand(omega);
      if (row.in_window) {
        row.semidualizing = is_semidualizing_up_to(omega, semidual_bound);
        row.violation = row.free_summand || row.semidualizing->yes;
      }
    }
    if (row.violation) ++rep.violations;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

struct SocleLemmaRow {
  int n = 0;
  bool contained = true;
  std::string witness;  // a socle element outside ann(Omega_n(M))
};

/// Soc(R) is contained in ann(Omega_n(M)) for 1 <= n <= n_max.
inline std::vector<SocleLemmaRow> socle_lemma_check(const PresentedModule& m, int n_max) {
  const GradedRing& ring = *m.ring;
  SocleData soc = socle(free_module(m.ring, 1));
  std::vector<Polynomial> elems;
  for (const auto& v : soc.generators) elems.push_back(v.component(ring.field(), ring.nvars(), 0));
  Resolution res = minimal_free_resolution(m, n_max + 1);
  std::vector<SocleLemmaRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    SocleLemmaRow row;
    row.n = n;
    auto ann = module_annihilator(syzygy_module(res, n));
    for (const auto& s : elems)
      if (!reduce(s, ann).is_zero()) {
        row.contained = false;
        row.witness = ring.format(s);
        break;
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ------------------------------------------------ reductions modulo a linear form

struct TakahashiRow {
  int n = 0;
  int mu_lhs = 0;     // mu(Omega_n^R(k) / l Omega_n^R(k))
  int beta_n = 0;     // beta_n^{Rbar}(k)
  int beta_n1 = 0;    // beta_{n-1}^{Rbar}(k)
  BettiTable lhs;     // of Omega_n^R(k) (x) Rbar over Rbar
  BettiTable rhs;     // of Omega_n^{Rbar}(k) (+) Omega_{n-1}^{Rbar}(k)(-1)
  bool hilbert_equal = false;
  bool ok = false;
};

struct TakahashiReport {
  std::string linear_form;
  std::vector<std::string> quotient_ideal;
  std::vector<TakahashiRow> rows;
  bool all_ok = true;
};

/// Omega_n^R(k) (x) R/(l) against Omega_n^{Rbar}(k) (+) Omega_{n-1}^{Rbar}(k)(-1),
/// compared by graded Betti tables (to `length`) and Hilbert series.
inline TakahashiReport takahashi_check(const RingPtr& ring, const Polynomial& l, int n_max, int length = 2) {
  if (n_max < 1) throw InputError("n_max must be at least 1");
  TakahashiReport rep;
  rep.linear_form = ring->format(l);
  auto k = residue_field(ring);
  auto base = quotient_by_linear_regular(k, l);
  for (const auto& g : base.ring->ideal_generators()) rep.quotient_ideal.push_back(base.ring->format(g));
  Resolution res = minimal_free_resolution(k, n_max + 1);
  Resolution res_bar = minimal_free_resolution(base.module, n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    TakahashiRow row;
    row.n = n;
    row.beta_n = res_bar.rank(n);
    row.beta_n1 = res_bar.rank(n - 1);
    auto bar = quotient_by_linear_regular(syzygy_module(res, n), l);
    // Same ring for both sides: re-home the reduced module onto base.ring.
    PresentedModule lhs_mod{base.ring, bar.module.cover, bar.module.relations};
    lhs_mod = minimal_presentation(lhs_mod).module;
    row.mu_lhs = lhs_mod.generators();
    PresentedModule rhs_mod = direct_sum({syzygy_module(res_bar, n), shifted(syzygy_module(res_bar, n - 1), 1)});
    row.lhs = minimal_free_resolution(lhs_mod, length).betti;
    row.rhs = minimal_free_resolution(rhs_mod, length).betti;
    row.hilbert_equal = hilbert(lhs_mod).numerator == hilbert(rhs_mod).numerator;
    row.ok = row.lhs == row.rhs && row.hilbert_equal && row.mu_lhs == row.beta_n + row.beta_n1;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

struct SyzygyModXRow {
  int n = 0;
  BettiTable lhs;  // Omega_n^R(M) (x) Rbar
  BettiTable rhs;  // Omega_n^{Rbar}(M (x) Rbar)
  bool ok = false;
};

/// Omega_n^R(M) (x) R/(l) against Omega_n^{R/(l)}(M / l M) for l regular on R and M.
inline std::vector<SyzygyModXRow> syzygy_mod_x_check(const PresentedModule& m, const Polynomial& l, int n_max,
                                                     int length = 2) {
  auto mbar = quotient_by_linear_regular(m, l, true);
  Resolution res = minimal_free_resolution(m, n_max + 1);
  Resolution res_bar = minimal_free_resolution(mbar.module, n_max + 1);
  std::vector<SyzygyModXRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    SyzygyModXRow row;
    row.n = n;
    auto bar = quotient_by_linear_regular(syzygy_module(res, n), l);
    PresentedModule lhs_mod{mbar.ring, bar.module.cover, bar.module.relations};
    row.lhs = minimal_free_resolution(lhs_mod, length).betti;
    row.rhs = minimal_free_resolution(syzygy_module(res_bar, n), length).betti;
    row.ok = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace syzlab

#endif  // SYZLAB_CRITERIA_HPP
