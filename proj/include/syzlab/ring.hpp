#ifndef SYZLAB_RING_HPP
#define SYZLAB_RING_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "syzlab/groebner.hpp"

namespace syzlab {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Plain description of a ring, as read from a ring file.
struct RingSpec {
  std::uint32_t p = PrimeField::kDefaultPrime;
  std::vector<std::string> vars;
  std::vector<int> degrees;  // empty means all 1
  std::vector<std::string> ideal;
};

/// S/I with S = F_p[vars] standard graded and I homogeneous. The maximal
/// ideal m is the ideal of the variables and k = S/m.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  static RingPtr create(PrimeField field, std::vector<std::string> vars, std::vector<Polynomial> ideal) {
    validate_names(vars);
    int n = static_cast<int>(vars.size());
    std::vector<Polynomial> gens;
    for (auto& g : ideal) {
      if (g.nvars() != n) throw InputError("ideal generator over a different number of variables");
      if (!(g.field() == field)) throw InputError("ideal generator over a different field");
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw InputError("ideal generator is not homogeneous");
      if (g.degree() == 0) throw InputError("ideal generator is a unit; the quotient ring would be zero");
      gens.push_back(g);
    }
    auto gb = buchberger(gens, field, n);
    return RingPtr(new GradedRing(field, std::move(vars), std::move(gens), std::move(gb)));
  }

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Polynomial>& ideal_generators() const { return ideal_; }
  const std::vector<Polynomial>& groebner_basis() const { return gb_; }
  bool is_polynomial_ring() const { return gb_.empty(); }

  /// The ambient polynomial ring S.
  RingPtr ambient() const {
    if (is_polynomial_ring()) return shared_from_this();
    if (!ambient_) ambient_ = create(field_, vars_, {});
    return ambient_;
  }

  Polynomial zero() const { return Polynomial(field_, nvars()); }
  Polynomial one() const { return Polynomial::constant(field_, nvars(), 1); }
  Polynomial variable(int i) const { return Polynomial::variable(field_, nvars(), i); }
  Polynomial parse(std::string_view text) const { return parse_polynomial(text, vars_, field_); }
  std::string format(const Polynomial& p) const { return p.to_string(vars_); }

  Polynomial normal_form(const Polynomial& f) const {
    if (gb_.empty()) return f;
    return syzlab::reduce(f, gb_);
  }
  Vector normal_form(const Vector& v) const { return reduce_mod_ideal(field_, v, gb_); }

  /// The generators I * e_i of I F for the free module with the given shifts.
  std::vector<Vector> ideal_multiples(std::size_t rank) const {
    std::vector<Vector> out;
    out.reserve(rank * gb_.size());
    for (std::size_t i = 0; i < rank; ++i)
      for (const auto& g : gb_) out.push_back(Vector::from_polynomial(g, static_cast<int>(i)));
    return out;
  }

  /// dim_k of the degree-1 part of I.
  int linear_forms_in_ideal() const {
    int c = 0;
    for (const auto& g : gb_)
      if (g.degree() == 1) ++c;
    return c;
  }

  /// Embedding dimension mu(m).
  int embedding_dimension() const { return nvars() - linear_forms_in_ideal(); }

  RingSpec spec() const {
    RingSpec s;
    s.p = field_.characteristic();
    s.vars = vars_;
    for (const auto& g : ideal_) s.ideal.push_back(format(g));
    return s;
  }

 private:
  GradedRing(PrimeField field, std::vector<std::string> vars, std::vector<Polynomial> ideal, std::vector<Polynomial> gb)
      : field_(field), vars_(std::move(vars)), ideal_(std::move(ideal)), gb_(std::move(gb)) {}

  static void validate_names(const std::vector<std::string>& vars) {
    if (vars.size() > static_cast<std::size_t>(kMaxVars))
      throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
        throw InputError("invalid variable name '" + v + "'");
      for (char c : v)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw InputError("invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
    }
  }

  PrimeField field_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> ideal_;
  std::vector<Polynomial> gb_;
  mutable RingPtr ambient_;
};

/// Validates a ring description and computes its reduced Gröbner basis.
inline RingPtr define_ring(const RingSpec& spec) {
  PrimeField field(spec.p);
  if (!spec.degrees.empty()) {
    if (spec.degrees.size() != spec.vars.size()) throw InputError("degrees must list one entry per variable");
    for (int d : spec.degrees)
      if (d != 1) throw InputError("only standard gradings (all variable degrees 1) are supported");
  }
  std::vector<Polynomial> gens;
  for (const auto& s : spec.ideal) gens.push_back(parse_polynomial(s, spec.vars, field));
  return GradedRing::create(field, spec.vars, std::move(gens));
}

inline RingPtr polynomial_ring(std::vector<std::string> vars, std::uint32_t p = PrimeField::kDefaultPrime) {
  return GradedRing::create(PrimeField(p), std::move(vars), {});
}

inline RingPtr quotient_ring(std::vector<std::string> vars, const std::vector<std::string>& ideal,
                             std::uint32_t p = PrimeField::kDefaultPrime) {
  RingSpec s;
  s.p = p;
  s.vars = std::move(vars);
  s.ideal = ideal;
  return define_ring(s);
}

}  // namespace syzlab

#endif  // SYZLAB_RING_HPP
