#include <gtest/gtest.h>

#include "syzlab/resolve.hpp"

using namespace syzlab;

namespace {

const std::vector<std::string> kXY{"x", "y"};

std::vector<long long> totals(const Resolution& r, int upto) {
  std::vector<long long> out;
  for (int i = 0; i <= upto; ++i) out.push_back(r.betti.total(i));
  return out;
}

}  // namespace

TEST(MinimalPresentation, PrunesUnitRelation) {
  auto r = polynomial_ring(kXY);
  PresentedModule m = free_module(r, std::vector<int>{0, 1, 0});
  m.relations.push_back(Vector::from_polynomials(std::vector<Polynomial>{r->parse("x"), r->one(), r->zero()}));
  auto mp = minimal_presentation(m);
  EXPECT_EQ(mp.module.generators(), 2);
  EXPECT_TRUE(mp.module.relations.empty());
}

TEST(MinimalPresentation, MaximalIdealOfR2) {
  auto r2 = quotient_ring(kXY, {"x^2", "x*y", "y^2"});
  auto m = ideal_module(r2, {r2->parse("x"), r2->parse("y")});
  auto mp = minimal_presentation(m);
  EXPECT_EQ(mp.module.generators(), 2);
  EXPECT_EQ(mp.module.relations.size(), 4u);
}

TEST(Resolution, ResidueFieldOverR1) {
  auto r1 = quotient_ring(kXY, {"x*y"});
  auto res = minimal_free_resolution(residue_field(r1), 5);
  EXPECT_EQ(totals(res, 5), (std::vector<long long>{1, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(res.periodic_from.has_value());
}

TEST(Resolution, KoszulOverR3) {
  auto r3 = polynomial_ring(kXY);
  auto res = minimal_free_resolution(residue_field(r3), 3);
  EXPECT_TRUE(res.finite);
  EXPECT_EQ(res.betti.total(0), 1);
  EXPECT_EQ(res.betti.total(1), 2);
  EXPECT_EQ(res.betti.total(2), 1);
  EXPECT_EQ(res.betti.total(3), 0);
  EXPECT_EQ(res.betti.at(2, 2), 1);
}

TEST(Resolution, ResidueFieldOverR2) {
  auto r2 = quotient_ring(kXY, {"x^2", "x*y", "y^2"});
  auto res = minimal_free_resolution(residue_field(r2), 6);
  for (int i = 0; i <= 6; ++i) {
    EXPECT_EQ(res.betti.total(i), 1LL << i);
    EXPECT_EQ(res.betti.at(i, i), 1LL << i);  // linear resolution
  }
}

TEST(Resolution, ComplexIsMinimalAndExact) {
  auto r = quotient_ring({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  auto res = minimal_free_resolution(residue_field(r), 4);
  const auto& f = r->field();
  for (int i = 1; i <= res.computed_to(); ++i)
    for (const auto& col : res.differential(i).columns)
      for (const auto& t : col.terms()) EXPECT_FALSE(t.mono.is_one());
  for (int i = 2; i <= res.computed_to(); ++i) {
    const auto& a = res.differential(i - 1);
    for (const auto& col : res.differential(i).columns) {
      Vector img;
      auto entries = col.to_polynomials(f, 3, a.cols());
      for (int j = 0; j < a.cols(); ++j) img = vec::add(f, img, vec::times_poly(f, entries[j], a.columns[j]));
      EXPECT_TRUE(r->normal_form(img).is_zero());
    }
  }
}

TEST(Resolution, IndependentOfPresentation) {
  auto r1 = quotient_ring(kXY, {"x*y"});
  auto k = residue_field(r1);
  PresentedModule padded = k;
  padded.cover.shifts.push_back(0);
  padded.relations.push_back(Vector::basis(2, 1));
  padded.relations.push_back(Vector::from_polynomial(r1->parse("x^2"), 0));
  EXPECT_EQ(minimal_free_resolution(k, 4).betti, minimal_free_resolution(padded, 4).betti);
}

TEST(SyzygyModule, SpecExamples) {
  auto r3 = polynomial_ring(kXY);
  auto omega2 = syzygy_module(residue_field(r3), 2);
  EXPECT_EQ(omega2.generators(), 1);
  EXPECT_TRUE(omega2.relations.empty());

  auto r1 = quotient_ring(kXY, {"x*y"});
  auto omega1 = syzygy_module(residue_field(r1), 1);
  EXPECT_EQ(omega1.generators(), 2);
  ASSERT_EQ(omega1.relations.size(), 2u);
  for (const auto& rel : omega1.relations) EXPECT_EQ(rel.size(), 1u);  // diagonal

  auto free3 = syzygy_module(free_module(r1, 3), 0);
  EXPECT_EQ(free3.generators(), 3);
  EXPECT_TRUE(free3.relations.empty());
}

TEST(LinearQuotient, SpecExamples) {
  auto r1 = quotient_ring(kXY, {"x*y"});
  auto q = quotient_by_linear_regular(residue_field(r1), r1->parse("x+y"));
  ASSERT_EQ(q.ring->nvars(), 1);
  ASSERT_EQ(q.ring->groebner_basis().size(), 1u);
  EXPECT_EQ(q.ring->format(q.ring->groebner_basis()[0]), "x^2");

  auto r3 = polynomial_ring(kXY);
  auto q3 = quotient_by_linear_regular(free_module(r3, 1), r3->parse("y"));
  EXPECT_TRUE(q3.ring->is_polynomial_ring());
  EXPECT_EQ(q3.ring->variables(), std::vector<std::string>{"x"});

  try {
    quotient_by_linear_regular(free_module(r1, 1), r1->parse("x"));
    FAIL() << "zero divisor accepted";
  } catch (const ZeroDivisorError& e) {
    EXPECT_EQ(e.witness(), "y");
  }
}

TEST(LinearQuotient, DecompositionBettiOverR1) {
  auto r1 = quotient_ring(kXY, {"x*y"});
  auto k = residue_field(r1);
  auto res = minimal_free_resolution(k, 6);
  for (int n = 1; n <= 5; ++n) {
    auto bar = quotient_by_linear_regular(syzygy_module(res, n), r1->parse("x+y"));
    EXPECT_EQ(minimal_presentation(bar.module).module.generators(), 2) << "n=" << n;
  }
}

TEST(BettiTable, TextLayout) {
  auto r3 = polynomial_ring(kXY);
  auto res = minimal_free_resolution(residue_field(r3), 3);
  EXPECT_EQ(res.betti.to_text(),
            "       0 1 2\n"
            "total: 1 2 1\n"
            "    0: 1 2 1\n");
}
