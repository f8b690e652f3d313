#ifndef SYZLAB_FUZZ_HPP
#define SYZLAB_FUZZ_HPP

// Seeded random rings and modules. Same seed, same standard library: same objects.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "syzlab/ring.hpp"

namespace syzlab::fuzz {

inline const std::vector<std::string>& default_names() {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return names;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::string monomial_text(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::vector<int> random_exponents(std::mt19937_64& rng, int n, int degree) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
  return e;
}

/// All exponent vectors of the given degree in n variables.
inline std::vector<std::vector<int>> all_exponents(int n, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
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
  rec(rec, 0, degree);
  return out;
}

/// F_p[x1..xn]/I with I monomial, containing a pure power of every variable
/// (so the ring is Artinian, hence Cohen-Macaulay). With probability about
/// 1/3 every quadric is added, which gives minimal multiplicity.
inline RingSpec random_artinian_monomial_ring(std::mt19937_64& rng, int max_vars = 3, int max_power = 3) {
  RingSpec s;
  const int n = uniform(rng, 1, max_vars);
  s.vars.assign(default_names().begin(), default_names().begin() + n);
  std::set<std::string> ideal;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = uniform(rng, 2, max_power);
    ideal.insert(monomial_text(s.vars, e));
  }
  if (uniform(rng, 0, 2) == 0) {
    for (const auto& e : all_exponents(n, 2)) ideal.insert(monomial_text(s.vars, e));
  } else {
    int extra = uniform(rng, 0, 3);
    for (int k = 0; k < extra; ++k) ideal.insert(monomial_text(s.vars, random_exponents(rng, n, uniform(rng, 2, max_power))));
  }
  s.ideal.assign(ideal.begin(), ideal.end());
  return s;
}

/// Generators of a random monomial ideal J for a cyclic module R/J (possibly J = 0).
inline std::vector<std::string> random_cyclic_ideal(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  const int n = static_cast<int>(vars.size());
  std::set<std::string> gens;
  int count = uniform(rng, 0, 2);
  for (int k = 0; k < count; ++k) gens.insert(monomial_text(vars, random_exponents(rng, n, uniform(rng, 1, 2))));
  return {gens.begin(), gens.end()};
}

}  // namespace syzlab::fuzz

#endif  // SYZLAB_FUZZ_HPP
