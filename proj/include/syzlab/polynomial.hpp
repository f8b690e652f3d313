#ifndef SYZLAB_POLYNOMIAL_HPP
#define SYZLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syzlab/field.hpp"
#include "syzlab/monomial.hpp"

namespace syzlab {

struct Term {
  Monomial mono;
  Coeff coeff = 0;
};

/// Sparse polynomial over F_p; terms are kept sorted in descending degrevlex
/// order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(PrimeField field, int nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(PrimeField field, int nvars, std::int64_t c) {
    Polynomial p(field, nvars);
    Coeff v = field.from_int(c);
    if (v != 0) p.terms_.push_back({Monomial(nvars), v});
    return p;
  }
  static Polynomial variable(PrimeField field, int nvars, int index) {
    Polynomial p(field, nvars);
    p.terms_.push_back({Monomial::variable(nvars, index), 1});
    return p;
  }
  static Polynomial term(PrimeField field, const Monomial& m, Coeff c) {
    Polynomial p(field, m.nvars());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(PrimeField field, int nvars, std::vector<Term> terms) {
    Polynomial p(field, nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return degrevlex(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(t);
      }
    }
    return p;
  }

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  /// Coefficient of the constant term.
  Coeff constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
    return true;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, a.field_.mul(s.coeff, t.coeff)});
    return from_terms(a.field_, a.nvars_, std::move(prod));
  }

  Polynomial scaled(Coeff c) const {
    Polynomial r(field_, nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  Polynomial times_term(const Monomial& m, Coeff c) const {
    Polynomial r(field_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;
  }

  Polynomial pow(int e) const {
    Polynomial r = constant(field_, nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      std::int64_t c = field_.to_signed(t.coeff);
      bool negative = c < 0;
      std::int64_t a = negative ? -c : c;
      if (s.empty()) {
        if (negative) s += '-';
      } else {
        s += negative ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        s += std::to_string(a);
      } else {
        if (a != 1) s += std::to_string(a) + "*";
        s += t.mono.to_string(names);
      }
    }
    return s;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw InputError("polynomials over different numbers of variables");
    if (!(o.field_ == field_)) throw InputError("polynomials over different fields");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_compatible(b);
    const PrimeField& f = a.field_;
    Polynomial r(f, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      Coeff bc = subtract ? f.neg(b.terms_[j].coeff) : b.terms_[j].coeff;
      if (i == a.terms_.size()) {
        r.terms_.push_back({b.terms_[j++].mono, bc});
        continue;
      }
      auto cmp = degrevlex(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({b.terms_[j++].mono, bc});
      } else {
        Coeff c = f.add(a.terms_[i].coeff, bc);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  PrimeField field_{};
  int nvars_ = 0;
  std::vector<Term> terms_;
};

enum class PolyOp { add, mul, scale };

/// Exact arithmetic dispatch; `scalar` is used by scale only.
inline Polynomial poly_arithmetic(const Polynomial& f, const Polynomial& g, PolyOp op, std::int64_t scalar = 1) {
  switch (op) {
    case PolyOp::add:
      return f + g;
    case PolyOp::mul:
      return f * g;
    case PolyOp::scale:
      return f.scaled(f.field().from_int(scalar));
  }
  return f;
}

namespace detail {

// Recursive-descent parser for: expr := ['+'|'-'] term (('+'|'-') term)*,
// term := factor ('*' factor)*, factor := atom ['^' int], atom := int | ident | '(' expr ')'.
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names, PrimeField field)
      : text_(text), names_(names), field_(field), nvars_(static_cast<int>(names.size())) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial \"" + std::string(text_) + "\": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::int64_t{1} << 56)) fail("integer too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (start == pos_) fail("expected integer");
    return v;
  }
  Polynomial expr() {
    Polynomial acc(field_, nvars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }
  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }
  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      std::int64_t e = integer();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }
  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(field_, nvars_, integer() % field_.characteristic());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view id = text_.substr(start, pos_ - start);
      for (int i = 0; i < nvars_; ++i)
        if (names_[i] == id) return Polynomial::variable(field_, nvars_, i);
      fail("unknown variable '" + std::string(id) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  PrimeField field_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names, PrimeField field) {
  return detail::PolyParser(text, names, field).parse();
}

}  // namespace syzlab

#endif  // SYZLAB_POLYNOMIAL_HPP
