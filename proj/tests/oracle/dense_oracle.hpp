#ifndef SYZLAB_TESTS_DENSE_ORACLE_HPP
#define SYZLAB_TESTS_DENSE_ORACLE_HPP

// Independent ground truth for tests: graded pieces are enumerated as
// monomial bases and every question becomes row reduction over F_p. Nothing
// here touches the Gröbner engine.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, std::uint64_t>;                    // monomial -> coefficient
using Vec = std::map<std::pair<int, Exps>, std::uint64_t>;     // (component, monomial) -> coefficient
using Dense = std::vector<std::uint64_t>;

struct Field {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2, b = a % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
};

inline int degree(const Exps& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

inline std::vector<Exps> monomials(int n, int d) {
  std::vector<Exps> out;
  if (d < 0) return out;
  Exps cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      cur[static_cast<std::size_t>(var)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, left - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline Exps times(const Exps& a, const Exps& b) {
  Exps c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

/// Incremental reduced row echelon form.
class Span {
 public:
  Span(const Field& f, std::size_t width) : f_(f), width_(width) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the rows; true (and stored) if independent.
  bool insert(Dense v) {
    reduce(v);
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    std::uint64_t inv = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t c = rows_[r][p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) rows_[r][j] = f_.sub(rows_[r][j], f_.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  void reduce(Dense& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[r][j]));
    }
  }

  /// Coordinates on the non-pivot columns: an isomorphism from the quotient.
  std::vector<std::size_t> free_columns() const {
    std::vector<bool> piv(width_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < width_; ++j)
      if (!piv[j]) out.push_back(j);
    return out;
  }

 private:
  Field f_;
  std::size_t width_;
  std::vector<Dense> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a list of vectors and an explicit basis of the dependencies among them.
struct Nullspace {
  std::size_t rank = 0;
  std::vector<Dense> kernel;  // coefficient vectors over the inputs
};

inline Nullspace nullspace(const Field& f, const std::vector<Dense>& images, std::size_t width) {
  Nullspace out;
  std::vector<Dense> rows, combos;
  std::vector<std::size_t> pivots;
  const std::size_t n = images.size();
  for (std::size_t i = 0; i < n; ++i) {
    Dense w = images[i];
    Dense c(n, 0);
    c[i] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint64_t a = w[pivots[r]];
      if (a == 0) continue;
      for (std::size_t j = 0; j < width; ++j) w[j] = f.sub(w[j], f.mul(a, rows[r][j]));
      for (std::size_t j = 0; j < n; ++j) c[j] = f.sub(c[j], f.mul(a, combos[r][j]));
    }
    std::size_t p = 0;
    while (p < width && w[p] == 0) ++p;
    if (p == width) {
      out.kernel.push_back(std::move(c));
      continue;
    }
    std::uint64_t inv = f.inv(w[p]);
    for (auto& x : w) x = f.mul(x, inv);
    for (auto& x : c) x = f.mul(x, inv);
    rows.push_back(std::move(w));
    combos.push_back(std::move(c));
    pivots.push_back(p);
  }
  out.rank = rows.size();
  return out;
}

/// Degree-d piece of a graded free S-module: basis (component, monomial).
class FreePiece {
 public:
  FreePiece(int nvars, const std::vector<int>& shifts, int d) {
    for (std::size_t i = 0; i < shifts.size(); ++i)
      for (auto& m : monomials(nvars, d - shifts[i])) {
        index_[{static_cast<int>(i), m}] = basis_.size();
        basis_.push_back({static_cast<int>(i), m});
      }
  }
  std::size_t size() const { return basis_.size(); }
  const std::pair<int, Exps>& at(std::size_t i) const { return basis_[i]; }
  Dense dense(const Vec& v) const {
    Dense out(basis_.size(), 0);
    for (const auto& [key, c] : v) {
      auto it = index_.find(key);
      if (it == index_.end()) throw std::logic_error("oracle: element outside the graded piece");
      out[it->second] = c;
    }
    return out;
  }
  Vec sparse(const Dense& d) const {
    Vec v;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) v[basis_[i]] = d[i];
    return v;
  }

 private:
  std::vector<std::pair<int, Exps>> basis_;
  std::map<std::pair<int, Exps>, std::size_t> index_;
};

struct Ring {
  Field field;
  int nvars;
  std::vector<Poly> ideal;  // homogeneous
};

inline int vec_degree(const Vec& v, const std::vector<int>& shifts) {
  const auto& [key, c] = *v.begin();
  return degree(key.second) + shifts[static_cast<std::size_t>(key.first)];
}

inline Vec monomial_times(const Field& f, const Exps& m, std::uint64_t c, const Vec& v) {
  Vec out;
  for (const auto& [key, a] : v) {
    auto& slot = out[{key.first, times(key.second, m)}];
    slot = f.add(slot, f.mul(a, c));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Vec poly_times(const Field& f, const Poly& p, const Vec& v) {
  Vec out;
  for (const auto& [m, c] : p)
    for (const auto& [key, a] : monomial_times(f, m, c, v)) {
      auto& slot = out[key];
      slot = f.add(slot, a);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// F / W for a free S-module F and a submodule W given by homogeneous
/// generators; the ring ideal times F is always added to W.
struct Quotient {
  std::vector<int> shifts;
  std::vector<Vec> gens;  // generators of W besides I F
};

/// The degree-d piece of F / W with explicit quotient coordinates.
class QuotientPiece {
 public:
  QuotientPiece(const Ring& r, const Quotient& q, int d)
      : field_(r.field), piece_(r.nvars, q.shifts, d), span_(r.field, piece_.size()) {
    auto add_multiples = [&](const Vec& w, int wdeg) {
      for (auto& m : monomials(r.nvars, d - wdeg)) span_.insert(piece_.dense(monomial_times(field_, m, 1, w)));
    };
    for (const auto& w : q.gens)
      if (!w.empty()) add_multiples(w, vec_degree(w, q.shifts));
    for (std::size_t i = 0; i < q.shifts.size(); ++i)
      for (const auto& g : r.ideal) {
        if (g.empty()) continue;
        Vec gi;
        for (const auto& [m, c] : g) gi[{static_cast<int>(i), m}] = c;
        add_multiples(gi, degree(g.begin()->first) + q.shifts[i]);
      }
    free_ = span_.free_columns();
  }

  std::size_t dim() const { return free_.size(); }
  const FreePiece& piece() const { return piece_; }
  /// Representative in F_d of the j-th quotient basis vector.
  Vec basis(std::size_t j) const { return {{piece_.at(free_[j]), 1}}; }
  Dense coords(const Vec& v) const {
    Dense d = piece_.dense(v);
    span_.reduce(d);
    Dense out(free_.size());
    for (std::size_t j = 0; j < free_.size(); ++j) out[j] = d[free_[j]];
    return out;
  }
  bool contains(const Vec& v) const {
    for (auto c : coords(v))
      if (c != 0) return false;
    return true;
  }

 private:
  Field field_;
  FreePiece piece_;
  Span span_;
  std::vector<std::size_t> free_;
};

/// A free module F_i with generator degrees and images in the previous module.
struct Step {
  std::vector<int> shifts;
  std::vector<Vec> images;  // image of each basis element
};

/// Degree-truncated minimal free resolution: all generators of degree <= max_degree.
struct Resolution {
  std::vector<Step> steps;  // steps[0] maps onto the module's cover

  long long betti(int i, int j) const {
    if (i >= static_cast<int>(steps.size())) return 0;
    long long c = 0;
    for (int s : steps[static_cast<std::size_t>(i)].shifts)
      if (s == j) ++c;
    return c;
  }
  int rank(int i) const {
    return i < static_cast<int>(steps.size()) ? static_cast<int>(steps[static_cast<std::size_t>(i)].shifts.size()) : 0;
  }
};

namespace detail {

inline int min_shift(const std::vector<int>& s) {
  int m = 1 << 20;
  for (int v : s) m = std::min(m, v);
  return m;
}

/// Minimal generators, degree by degree, of a submodule U of Y containing W,
/// where U_d is given by `u_piece(d)` as vectors of Y_d.
template <class UPiece>
std::pair<std::vector<int>, std::vector<Vec>> minimal_generators(const Ring& r, const Quotient& w, int dmin, int dmax,
                                                                 UPiece u_piece) {
  std::vector<int> degs;
  std::vector<Vec> gens;
  std::vector<Vec> prev;
  for (int d = dmin; d <= dmax; ++d) {
    FreePiece piece(r.nvars, w.shifts, d);
    QuotientPiece wq(r, w, d);
    // s spans W_d + m U_{d-1} inside Y_d; W_d is the kernel of the quotient projection.
    Span s(r.field, piece.size());
    {
      std::vector<Dense> imgs;
      for (std::size_t j = 0; j < piece.size(); ++j) imgs.push_back(wq.coords(Vec{{piece.at(j), 1}}));
      for (auto& k : nullspace(r.field, imgs, wq.dim()).kernel) s.insert(k);
    }
    for (const auto& u : prev)
      for (int j = 0; j < r.nvars; ++j) {
        Exps x(static_cast<std::size_t>(r.nvars), 0);
        x[static_cast<std::size_t>(j)] = 1;
        s.insert(piece.dense(monomial_times(r.field, x, 1, u)));
      }
    std::vector<Vec> cur = u_piece(d, piece);
    for (const auto& u : cur)
      if (s.insert(piece.dense(u))) {
        degs.push_back(d);
        gens.push_back(u);
      }
    prev = std::move(cur);
  }
  return {degs, gens};
}

/// Basis of ker(F_d -> Y_d / W_d) where F has generator images in Y.
inline std::vector<Vec> kernel_piece(const Ring& r, const Step& f, const Quotient& target, int d,
                                     const FreePiece& fpiece) {
  QuotientPiece tq(r, target, d);
  std::vector<Dense> imgs;
  for (std::size_t j = 0; j < fpiece.size(); ++j) {
    const auto& [comp, m] = fpiece.at(j);
    imgs.push_back(tq.coords(monomial_times(r.field, m, 1, f.images[static_cast<std::size_t>(comp)])));
  }
  auto ns = nullspace(r.field, imgs, tq.dim());
  std::vector<Vec> out;
  for (const auto& k : ns.kernel) out.push_back(fpiece.sparse(k));
  return out;
}

}  // namespace detail

/// Minimal resolution of M = F / W, with generators of degree <= max_degree,
/// through homological degree `length`.
inline Resolution resolve(const Ring& r, const Quotient& m, int length, int max_degree) {
  Resolution res;
  int dmin = detail::min_shift(m.shifts);
  auto [d0, g0] = detail::minimal_generators(r, m, dmin, max_degree, [&](int d, const FreePiece& piece) {
    std::vector<Vec> all;
    for (std::size_t j = 0; j < piece.size(); ++j) all.push_back(Vec{{piece.at(j), 1}});
    (void)d;
    return all;
  });
  res.steps.push_back(Step{d0, g0});
  Quotient target = m;
  for (int i = 1; i <= length; ++i) {
    const Step& prev = res.steps.back();
    if (prev.shifts.empty()) break;
    Quotient here{prev.shifts, {}};  // F_{i-1} modulo I F_{i-1}
    Step cur_prev = prev;
    Quotient tgt = target;
    auto [ds, gs] = detail::minimal_generators(r, here, detail::min_shift(prev.shifts), max_degree,
                                               [&](int d, const FreePiece& piece) {
                                                 (void)d;
                                                 return detail::kernel_piece(r, cur_prev, tgt, d, piece);
                                               });
    target = here;
    res.steps.push_back(Step{ds, gs});
  }
  return res;
}

/// Graded Hom(F_i, N)_d = sum over generators l of N_{d + a_l}.
class HomComplex {
 public:
  HomComplex(const Ring& r, const Resolution& res, const Quotient& n) : r_(r), res_(res), n_(n) {}

  /// dim Ext^i(M, N)_d.
  long long ext_dim(int i, int d) const {
    if (i >= static_cast<int>(res_.steps.size())) return 0;
    long long total = hom_dim(i, d);
    long long out_rank = i + 1 < static_cast<int>(res_.steps.size()) ? rank_delta(i + 1, d) : 0;
    long long in_rank = i >= 1 ? rank_delta(i, d) : 0;
    return total - out_rank - in_rank;
  }

  /// dim Tor_i(M, N)_d.
  long long tor_dim(int i, int d) const {
    if (i >= static_cast<int>(res_.steps.size())) return 0;
    long long total = tensor_dim(i, d);
    long long out_rank = i >= 1 ? rank_partial(i, d) : 0;
    long long in_rank = i + 1 < static_cast<int>(res_.steps.size()) ? rank_partial(i + 1, d) : 0;
    return total - out_rank - in_rank;
  }

 private:
  const QuotientPiece& npiece(int e) const {
    auto it = cache_.find(e);
    if (it == cache_.end()) it = cache_.emplace(e, QuotientPiece(r_, n_, e)).first;
    return it->second;
  }

  const std::vector<int>& shifts(int i) const { return res_.steps[static_cast<std::size_t>(i)].shifts; }

  long long hom_dim(int i, int d) const {
    if (i >= static_cast<int>(res_.steps.size())) return 0;
    long long s = 0;
    for (int a : shifts(i)) s += static_cast<long long>(npiece(d + a).dim());
    return s;
  }

  long long tensor_dim(int i, int d) const {
    if (i >= static_cast<int>(res_.steps.size())) return 0;
    long long s = 0;
    for (int a : shifts(i)) s += static_cast<long long>(npiece(d - a).dim());
    return s;
  }

  /// Entry f_{l q}: coefficient polynomial of e_l in the image of generator q of F_i.
  Poly entry(int i, int q, int l) const {
    Poly p;
    for (const auto& [key, c] : res_.steps[static_cast<std::size_t>(i)].images[static_cast<std::size_t>(q)])
      if (key.first == l) p[key.second] = c;
    return p;
  }

  static Vec in_component(const Vec& v, int comp) {
    Vec out;
    for (const auto& [key, c] : v) out[{comp, key.second}] = c;
    return out;
  }

  /// rank of delta: Hom(F_{i-1}, N)_d -> Hom(F_i, N)_d, phi -> phi o d_i.
  long long rank_delta(int i, int d) const {
    const auto& src = shifts(i - 1);
    const auto& dst = shifts(i);
    std::vector<std::size_t> offset;
    std::size_t width = 0;
    for (int a : dst) {
      offset.push_back(width);
      width += npiece(d + a).dim();
    }
    std::vector<Dense> imgs;
    for (std::size_t l = 0; l < src.size(); ++l) {
      const auto& np = npiece(d + src[l]);
      for (std::size_t b = 0; b < np.dim(); ++b) {
        Dense img(width, 0);
        for (std::size_t q = 0; q < dst.size(); ++q) {
          Poly f = entry(i, static_cast<int>(q), static_cast<int>(l));
          if (f.empty()) continue;
          Vec prod = poly_times(r_.field, f, np.basis(b));
          if (prod.empty()) continue;
          Dense c = npiece(d + dst[q]).coords(prod);
          for (std::size_t k = 0; k < c.size(); ++k) img[offset[q] + k] = c[k];
        }
        imgs.push_back(std::move(img));
      }
    }
    return static_cast<long long>(nullspace(r_.field, imgs, width).rank);
  }

  /// rank of d_i (x) N: (F_i (x) N)_d -> (F_{i-1} (x) N)_d.
  long long rank_partial(int i, int d) const {
    const auto& src = shifts(i);
    const auto& dst = shifts(i - 1);
    std::vector<std::size_t> offset;
    std::size_t width = 0;
    for (int a : dst) {
      offset.push_back(width);
      width += npiece(d - a).dim();
    }
    std::vector<Dense> imgs;
    for (std::size_t q = 0; q < src.size(); ++q) {
      const auto& np = npiece(d - src[q]);
      for (std::size_t b = 0; b < np.dim(); ++b) {
        Dense img(width, 0);
        for (std::size_t l = 0; l < dst.size(); ++l) {
          Poly f = entry(i, static_cast<int>(q), static_cast<int>(l));
          if (f.empty()) continue;
          Vec prod = poly_times(r_.field, f, np.basis(b));
          if (prod.empty()) continue;
          Dense c = npiece(d - dst[l]).coords(prod);
          for (std::size_t k = 0; k < c.size(); ++k) img[offset[l] + k] = c[k];
        }
        imgs.push_back(std::move(img));
      }
    }
    return static_cast<long long>(nullspace(r_.field, imgs, width).rank);
  }

  const Ring& r_;
  const Resolution& res_;
  Quotient n_;
  mutable std::map<int, QuotientPiece> cache_;
};

/// dim (0 :_M m)_d for M = F / W.
inline long long socle_dim(const Ring& r, const Quotient& m, int d) {
  QuotientPiece here(r, m, d), up(r, m, d + 1);
  std::vector<Dense> imgs;
  std::size_t width = up.dim() * static_cast<std::size_t>(r.nvars);
  for (std::size_t b = 0; b < here.dim(); ++b) {
    Dense img(width, 0);
    for (int j = 0; j < r.nvars; ++j) {
      Exps x(static_cast<std::size_t>(r.nvars), 0);
      x[static_cast<std::size_t>(j)] = 1;
      Vec prod = monomial_times(r.field, x, 1, here.basis(b));
      Dense c = up.coords(prod);
      for (std::size_t k = 0; k < c.size(); ++k) img[static_cast<std::size_t>(j) * up.dim() + k] = c[k];
    }
    imgs.push_back(std::move(img));
  }
  return static_cast<long long>(here.dim() - nullspace(r.field, imgs, width).rank);
}

inline long long hilbert_value(const Ring& r, const Quotient& m, int d) { return static_cast<long long>(QuotientPiece(r, m, d).dim()); }

}  // namespace oracle

#endif  // SYZLAB_TESTS_DENSE_ORACLE_HPP
