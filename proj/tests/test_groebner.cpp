#include <gtest/gtest.h>

#include "syzlab/module.hpp"

using namespace syzlab;

namespace {

const std::vector<std::string> kXY{"x", "y"};

std::vector<std::string> fmt(const GradedRing& r, const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(r.format(p));
  return out;
}

}  // namespace

TEST(Reduce, SpecExamples) {
  auto s = polynomial_ring(kXY);
  std::vector<Polynomial> xy{s->parse("x*y")};
  EXPECT_TRUE(reduce(s->zero(), xy).is_zero());
  EXPECT_TRUE(reduce(s->parse("x^2*y"), xy).is_zero());
  std::vector<Polynomial> g{s->parse("x*y"), s->parse("y^2")};
  EXPECT_EQ(reduce(s->parse("x^3"), g), s->parse("x^3"));
}

TEST(Reduce, RankMismatch) {
  auto s = polynomial_ring(kXY);
  Vector v = Vector::basis(2, 3);
  EXPECT_THROW(reduce(v, {}, s->field(), 2, {0, 0}), InputError);
}

TEST(Buchberger, SpecExamples) {
  auto s = polynomial_ring(kXY);
  auto gb1 = buchberger({s->parse("x*y")}, s->field(), 2);
  EXPECT_EQ(fmt(*s, gb1), std::vector<std::string>{"x*y"});
  auto gb2 = buchberger({s->parse("x^2"), s->parse("x*y"), s->parse("y^2")}, s->field(), 2);
  EXPECT_EQ(gb2.size(), 3u);
  auto gb3 = buchberger({s->parse("x^2+y^2"), s->parse("x*y")}, s->field(), 2);
  // Sorted ascending: x*y < x^2+y^2 (lead x^2) < y^3.
  EXPECT_EQ(fmt(*s, gb3), (std::vector<std::string>{"x*y", "x^2 + y^2", "y^3"}));
}

TEST(Buchberger, PermutationInvariant) {
  auto s = polynomial_ring({"x", "y", "z"});
  std::vector<Polynomial> g{s->parse("x^2-y*z"), s->parse("x*y-z^2"), s->parse("y^2-x*z")};
  auto a = buchberger(g, s->field(), 3);
  std::reverse(g.begin(), g.end());
  auto b = buchberger(g, s->field(), 3);
  EXPECT_EQ(a, b);
}

TEST(Syzygies, SpecExamples) {
  auto r3 = polynomial_ring(kXY);
  Matrix m;
  m.target = GradedFreeModule({0});
  m.source = GradedFreeModule({1, 1});
  m.columns = {Vector::from_polynomial(r3->parse("x"), 0), Vector::from_polynomial(r3->parse("y"), 0)};
  auto syz = syzygies(*r3, m);
  ASSERT_EQ(syz.cols(), 1);
  auto col = syz.columns[0].to_polynomials(r3->field(), 2, 2);
  // (-y, x) up to a scalar
  Polynomial a = col[0], b = col[1];
  Coeff c = r3->field().inv(b.lead().coeff);
  EXPECT_EQ(a.scaled(c), r3->parse("-y"));
  EXPECT_EQ(b.scaled(c), r3->parse("x"));
  EXPECT_EQ(syz.source.shifts, std::vector<int>{2});

  auto r1 = quotient_ring(kXY, {"x*y"});
  Matrix mx{GradedFreeModule({0}), GradedFreeModule({1}), {Vector::from_polynomial(r1->parse("x"), 0)}};
  auto sx = syzygies(*r1, mx);
  ASSERT_EQ(sx.cols(), 1);
  EXPECT_EQ(r1->format(sx.columns[0].component(r1->field(), 2, 0)), "y");

  Matrix id{GradedFreeModule({0}), GradedFreeModule({0}), {Vector::basis(2, 0)}};
  EXPECT_EQ(syzygies(*r3, id).cols(), 0);
}

TEST(Syzygies, CompositionVanishes) {
  auto r = quotient_ring({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  Matrix m{GradedFreeModule({0}), GradedFreeModule({1, 1, 1}), {}};
  for (int i = 0; i < 3; ++i) m.columns.push_back(Vector::from_polynomial(r->variable(i), 0));
  auto syz = syzygies(*r, m);
  for (const auto& col : syz.columns) {
    Vector img;
    auto entries = col.to_polynomials(r->field(), 3, 3);
    for (int j = 0; j < 3; ++j) img = vec::add(r->field(), img, vec::times_poly(r->field(), entries[j], m.columns[j]));
    EXPECT_TRUE(r->normal_form(img).is_zero());
  }
}

TEST(Colon, SpecExamples) {
  auto s = polynomial_ring(kXY);
  auto c = ideal_colon(*s, {s->parse("x^2")}, {s->parse("x")});
  EXPECT_EQ(fmt(*s, c), std::vector<std::string>{"x"});

  auto r1 = quotient_ring(kXY, {"x*y"});
  EXPECT_TRUE(ideal_is_zero_in(*r1, module_annihilator(free_module(r1, 1))));
  auto ann = module_annihilator(ideal_module(r1, {r1->parse("x")}));
  EXPECT_EQ(fmt(*r1, ann), (std::vector<std::string>{"y"}));
}
