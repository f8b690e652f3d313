#ifndef SYZLAB_RESOLVE_HPP
#define SYZLAB_RESOLVE_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "syzlab/module.hpp"

namespace syzlab {

struct MinimalPresentation {
  PresentedModule module;
  std::vector<int> kept;           // original generator index of each new generator
  std::vector<Vector> old_to_new;  // each original generator written in the new cover
};

/// Prunes unit entries and redundant relations: the cover rank becomes mu(M)
/// and every relation entry lies in m.
inline MinimalPresentation minimal_presentation(const PresentedModule& m) {
  m.validate();
  const GradedRing& ring = *m.ring;
  const PrimeField& f = ring.field();
  const int nv = ring.nvars();
  const int r = m.generators();

  std::vector<Vector> rels;
  for (const auto& rel : m.relations) {
    Vector v = ring.normal_form(rel);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  std::vector<Vector> expr;
  for (int i = 0; i < r; ++i) expr.push_back(Vector::basis(nv, i));
  std::vector<bool> alive(static_cast<std::size_t>(r), true);

  auto eliminate = [&](Vector& target, int comp, const Vector& pivot, Coeff c) {
    Polynomial p = target.component(f, nv, comp);
    if (p.is_zero()) return;
    target = ring.normal_form(vec::sub(f, target, vec::times_poly(f, p.scaled(f.inv(c)), pivot)));
  };

  for (;;) {
    int pj = -1, pi = -1;
    Coeff pc = 0;
    for (std::size_t j = 0; j < rels.size() && pj < 0; ++j)
      for (const auto& t : rels[j].terms())
        if (t.mono.is_one()) {
          pj = static_cast<int>(j);
          pi = t.comp;
          pc = t.coeff;
          break;
        }
    if (pj < 0) break;
    Vector pivot = rels[static_cast<std::size_t>(pj)];
    rels.erase(rels.begin() + pj);
    for (auto& rel : rels) eliminate(rel, pi, pivot, pc);
    for (auto& e : expr) eliminate(e, pi, pivot, pc);
    alive[static_cast<std::size_t>(pi)] = false;
    std::vector<Vector> nonzero;
    for (auto& rel : rels)
      if (!rel.is_zero()) nonzero.push_back(std::move(rel));
    rels = std::move(nonzero);
  }

  MinimalPresentation out;
  std::vector<int> renumber(static_cast<std::size_t>(r), -1);
  std::vector<int> shifts;
  for (int i = 0; i < r; ++i)
    if (alive[static_cast<std::size_t>(i)]) {
      renumber[static_cast<std::size_t>(i)] = static_cast<int>(out.kept.size());
      out.kept.push_back(i);
      shifts.push_back(m.cover.shifts[static_cast<std::size_t>(i)]);
    }
  for (auto& rel : rels) rel = vec::remap(f, rel, renumber);
  for (const auto& e : expr) out.old_to_new.push_back(vec::remap(f, e, renumber));
  out.module.ring = m.ring;
  out.module.cover = GradedFreeModule(shifts);
  for (std::size_t idx : select_minimal_generators(ring, shifts, rels, {})) out.module.relations.push_back(rels[idx]);
  return out;
}

/// Graded Betti numbers beta_{i,j}.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  long long total(int i) const {
    long long s = 0;
    for (const auto& [key, v] : entries)
      if (key.first == i) s += v;
    return s;
  }

  int max_index() const {
    int m = -1;
    for (const auto& [key, v] : entries) m = std::max(m, key.first);
    return m;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

  /// Macaulay-style table: row r lists beta_{i, i+r}.
  std::string to_text(int upto = -1) const {
    if (upto < 0) upto = max_index();
    if (entries.empty()) return "(zero)\n";
    int rmin = 1 << 30, rmax = -(1 << 30);
    for (const auto& [key, v] : entries) {
      rmin = std::min(rmin, key.second - key.first);
      rmax = std::max(rmax, key.second - key.first);
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{""};
    for (int i = 0; i <= upto; ++i) head.push_back(std::to_string(i));
    cells.push_back(head);
    std::vector<std::string> tot{"total:"};
    for (int i = 0; i <= upto; ++i) tot.push_back(std::to_string(total(i)));
    cells.push_back(tot);
    for (int row = rmin; row <= rmax; ++row) {
      std::vector<std::string> line{std::to_string(row) + ":"};
      for (int i = 0; i <= upto; ++i) {
        long long v = at(i, i + row);
        line.push_back(v == 0 ? "." : std::to_string(v));
      }
      cells.push_back(line);
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& line : cells)
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream os;
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        os << std::string(width[c] - line[c].size(), ' ') << line[c];
        if (c + 1 < line.size()) os << ' ';
      }
      os << '\n';
    }
    return os.str();
  }
};

/// F_0 <- F_1 <- ... <- F_N; differentials[i] maps modules[i] to modules[i-1]
/// (differentials[0] is an empty placeholder).
struct FreeComplex {
  std::vector<GradedFreeModule> modules;
  std::vector<Matrix> differentials;
  bool minimal = true;

  int length() const { return static_cast<int>(modules.size()) - 1; }
};

struct Resolution {
  RingPtr ring;
  FreeComplex complex;
  BettiTable betti;
  bool finite = false;  // a zero module was reached within the bound
  std::optional<int> periodic_from;  // heuristic, informational only
  MinimalPresentation presentation;

  int computed_to() const { return complex.length(); }
  const GradedFreeModule& module(int i) const { return complex.modules.at(static_cast<std::size_t>(i)); }
  const Matrix& differential(int i) const { return complex.differentials.at(static_cast<std::size_t>(i)); }
  /// Rank of F_i; zero beyond the end of a finite resolution.
  int rank(int i) const {
    if (i < static_cast<int>(complex.modules.size())) return complex.modules[static_cast<std::size_t>(i)].rank();
    return 0;
  }
};

namespace detail {

inline std::string matrix_signature(const GradedRing& ring, const Matrix& m) {
  std::vector<std::string> cols;
  for (const auto& c : m.columns) {
    Vector v = vec::make_monic(ring.field(), c);
    std::vector<std::string> entries;
    for (int i = 0; i < m.rows(); ++i) {
      Polynomial p = v.component(ring.field(), ring.nvars(), i);
      if (!p.is_zero()) entries.push_back(ring.format(p.scaled(ring.field().inv(p.lead().coeff))));
    }
    std::sort(entries.begin(), entries.end());
    std::string s;
    for (const auto& e : entries) s += e + ";";
    cols.push_back(s);
  }
  std::sort(cols.begin(), cols.end());
  std::string out = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (const auto& c : cols) out += c + "|";
  return out;
}

}  // namespace detail

/// Minimal graded free resolution of M computed through homological degree n_max.
inline Resolution minimal_free_resolution(const PresentedModule& m, int n_max) {
  if (n_max < 0) throw InputError("n_max must be non-negative");
  Resolution res;
  res.ring = m.ring;
  res.presentation = minimal_presentation(m);
  const GradedRing& ring = *m.ring;
  FreeComplex& cx = res.complex;
  cx.modules.push_back(res.presentation.module.cover);
  cx.differentials.emplace_back();
  if (cx.modules[0].rank() == 0) res.finite = true;
  for (int i = 1; i <= n_max && !res.finite; ++i) {
    Matrix d;
    if (i == 1) {
      d = res.presentation.module.relation_matrix();
    } else {
      d = syzygies(ring, cx.differentials.back());
    }
    cx.modules.push_back(d.source);
    cx.differentials.push_back(std::move(d));
    if (cx.modules.back().rank() == 0) res.finite = true;
  }
  for (std::size_t i = 0; i < cx.modules.size(); ++i)
    for (int s : cx.modules[i].shifts) res.betti.entries[{static_cast<int>(i), s}] += 1;

  for (int n = 1; n + 2 < static_cast<int>(cx.differentials.size()); ++n) {
    const auto& a = cx.differentials[static_cast<std::size_t>(n)];
    const auto& b = cx.differentials[static_cast<std::size_t>(n + 2)];
    if (a.cols() == 0) break;
    if (detail::matrix_signature(ring, a) == detail::matrix_signature(ring, b)) {
      res.periodic_from = n;
      break;
    }
  }
  return res;
}

/// Omega_n(M), presented by the (n+1)-st differential of the minimal resolution.
inline PresentedModule syzygy_module(const Resolution& res, int n) {
  if (n < 0) throw InputError("syzygy index must be non-negative");
  if (n == 0) return res.presentation.module;
  if (n >= static_cast<int>(res.complex.modules.size())) {
    if (!res.finite) throw InputError("resolution not computed far enough for this syzygy");
    return free_module(res.ring, std::vector<int>{});
  }
  PresentedModule out;
  out.ring = res.ring;
  out.cover = res.complex.modules[static_cast<std::size_t>(n)];
  if (n + 1 < static_cast<int>(res.complex.differentials.size())) {
    out.relations = res.complex.differentials[static_cast<std::size_t>(n + 1)].columns;
  } else if (!res.finite) {
    throw InputError("resolution not computed far enough for this syzygy");
  }
  return out;
}

inline PresentedModule syzygy_module(const PresentedModule& m, int n) {
  return syzygy_module(minimal_free_resolution(m, n + 1), n);
}

/// Raised when a linear form is a zero divisor; carries a witness.
class ZeroDivisorError : public InputError {
 public:
  ZeroDivisorError(const std::string& what, std::string witness) : InputError(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

struct LinearQuotient {
  RingPtr ring;            // R/(l), with one variable eliminated
  PresentedModule module;  // M/lM over the new ring
  int eliminated = -1;     // index of the eliminated variable in the old ring
  Polynomial replacement;  // its value, in the old ring's variables
};

/// Substitutes x_v := replacement (a linear form free of x_v) and drops x_v.
inline Polynomial substitute_variable(const Polynomial& p, int v, const Polynomial& replacement,
                                      const PrimeField& field, int new_nvars) {
  const int nv = p.nvars();
  std::vector<int> map(static_cast<std::size_t>(nv), -1);
  for (int i = 0, k = 0; i < nv; ++i)
    if (i != v) map[static_cast<std::size_t>(i)] = k++;
  std::vector<Term> rep_terms;
  for (const auto& t : replacement.terms()) {
    std::vector<int> e(static_cast<std::size_t>(new_nvars), 0);
    for (int i = 0; i < nv; ++i)
      if (i != v) e[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = t.mono[i];
    rep_terms.push_back({Monomial::from_exponents(e), t.coeff});
  }
  Polynomial rep = Polynomial::from_terms(field, new_nvars, rep_terms);
  std::vector<Polynomial> powers{Polynomial::constant(field, new_nvars, 1)};
  Polynomial out(field, new_nvars);
  for (const auto& t : p.terms()) {
    while (static_cast<int>(powers.size()) <= t.mono[v]) powers.push_back(powers.back() * rep);
    std::vector<int> e(static_cast<std::size_t>(new_nvars), 0);
    for (int i = 0; i < nv; ++i)
      if (i != v) e[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = t.mono[i];
    out = out + powers[static_cast<std::size_t>(t.mono[v])].times_term(Monomial::from_exponents(e), t.coeff);
  }
  return out;
}

/// True iff multiplication by the linear form is injective on M.
inline bool is_regular_on(const PresentedModule& m, const Polynomial& l) {
  const GradedRing& ring = *m.ring;
  std::vector<int> src;
  std::vector<Vector> cols;
  for (int i = 0; i < m.generators(); ++i) {
    src.push_back(m.cover.shifts[static_cast<std::size_t>(i)] + l.degree());
    cols.push_back(ring.normal_form(vec::times_poly(ring.field(), l, Vector::basis(ring.nvars(), i))));
  }
  // Kernel of F0(-1) -> M; l is M-regular iff it lands inside the relations.
  // l is M-regular iff the kernel of F0(-1) -> M lies in the relations, which
  // are homogeneous for the shifted degrees as well.
  auto ker = kernel(ring, src, m.cover.shifts, cols, m.relations);
  return select_minimal_generators(ring, src, ker, m.relations).empty();
}

/// Passes to R/(l) and M/lM for a linear form l that is regular on R,
/// eliminating one variable by a linear change of coordinates.
inline LinearQuotient quotient_by_linear_regular(const PresentedModule& m, const Polynomial& l,
                                                 bool require_regular_on_module = false) {
  const GradedRing& ring = *m.ring;
  const PrimeField& f = ring.field();
  if (l.nvars() != ring.nvars()) throw InputError("linear form over a different number of variables");
  if (l.is_zero() || !l.is_homogeneous() || l.degree() != 1) throw InputError("expected a nonzero linear form");
  auto ker = kernel(ring, {1}, {0}, {Vector::from_polynomial(ring.normal_form(l), 0)}, {});
  if (!ker.empty()) {
    std::string w = ring.format(ker.front().component(f, ring.nvars(), 0));
    throw ZeroDivisorError("linear form " + ring.format(l) + " is a zero divisor (it kills " + w + ")", w);
  }
  if (require_regular_on_module && !is_regular_on(m, l))
    throw InputError("linear form " + ring.format(l) + " is not regular on the module");

  int v = -1;
  Coeff cv = 0;
  for (const auto& t : l.terms())
    for (int i = 0; i < ring.nvars(); ++i)
      if (t.mono[i] == 1 && i > v) {
        v = i;
        cv = t.coeff;
      }
  // x_v = -(1/c_v) * (l - c_v x_v)
  Polynomial rest = l - Polynomial::variable(f, ring.nvars(), v).scaled(cv);
  Polynomial replacement = rest.scaled(f.neg(f.inv(cv)));

  const int nn = ring.nvars() - 1;
  std::vector<std::string> vars;
  for (int i = 0; i < ring.nvars(); ++i)
    if (i != v) vars.push_back(ring.variables()[static_cast<std::size_t>(i)]);
  std::vector<Polynomial> ideal;
  for (const auto& g : ring.ideal_generators()) ideal.push_back(substitute_variable(g, v, replacement, f, nn));

  LinearQuotient out;
  out.ring = GradedRing::create(f, vars, ideal);
  out.eliminated = v;
  out.replacement = replacement;
  out.module.ring = out.ring;
  out.module.cover = m.cover;
  for (const auto& rel : m.relations) {
    auto entries = rel.to_polynomials(f, ring.nvars(), m.generators());
    std::vector<Polynomial> mapped;
    for (const auto& e : entries) mapped.push_back(out.ring->normal_form(substitute_variable(e, v, replacement, f, nn)));
    Vector nv = Vector::from_polynomials(mapped);
    if (!nv.is_zero()) out.module.relations.push_back(std::move(nv));
  }
  return out;
}

}  // namespace syzlab

#endif  // SYZLAB_RESOLVE_HPP
