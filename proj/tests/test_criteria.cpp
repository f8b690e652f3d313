#include <gtest/gtest.h>

#include "syzlab/criteria.hpp"

using namespace syzlab;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

RingPtr r1() { return quotient_ring(kXY, {"x*y"}); }
RingPtr r2() { return quotient_ring(kXY, {"x^2", "x*y", "y^2"}); }
RingPtr r4() { return quotient_ring(kXYZ, {"x^2", "x*y", "y^2"}); }

/// (x) over R1 as the image of Omega_1(k) = (x) (+) (y) killing the second summand.
SyzygyImage principal_x(const RingPtr& r) { return syzygy_image(r, {{1, 1}}, {Vector::basis(2, 1)}); }

}  // namespace

TEST(Trace, SpecExamples) {
  auto r3 = polynomial_ring(kXY);
  EXPECT_TRUE(has_free_summand(syzygy_module(residue_field(r3), 2)));

  auto r = r1();
  auto t = trace_ideal(ideal_module(r, {r->parse("x")}));
  EXPECT_FALSE(t.free_summand);
  ASSERT_EQ(t.ideal_gb.size(), 1u);  // preimage (x, xy) = (x)
  EXPECT_TRUE(reduce(r->parse("x"), t.ideal_gb).is_zero());
  EXPECT_FALSE(reduce(r->parse("y"), t.ideal_gb).is_zero());

  auto q = r2();
  auto m = direct_sum({free_module(q, 1), ideal_module(q, {q->parse("x"), q->parse("y")})});
  auto tq = trace_ideal(m);
  ASSERT_TRUE(tq.free_summand);
  EXPECT_EQ(tq.witness->generator, 0);
}

TEST(Trace, ZeroModuleHasNoFreeSummand) {
  auto r = r1();
  EXPECT_FALSE(has_free_summand(cyclic_module(r, {r->one()})));
}

TEST(Semidualizing, SpecExamples) {
  EXPECT_TRUE(is_semidualizing_up_to(free_module(r1(), 1), 3).yes);
  auto q = r2();
  EXPECT_TRUE(is_semidualizing_up_to(canonical_module(q), 6).yes);
  auto v = is_semidualizing_up_to(residue_field(q), 1);
  EXPECT_FALSE(v.yes);
  EXPECT_EQ(v.failed, "annihilator");
}

TEST(Semidualizing, NonCyclicEndomorphisms) {
  // ann(m) = 0 over R1, but End(m) contains both projections.
  auto r = r1();
  auto v = is_semidualizing_up_to(ideal_module(r, {r->parse("x"), r->parse("y")}), 2);
  EXPECT_FALSE(v.yes);
  EXPECT_EQ(v.failed, "endomorphisms");
}

TEST(SyzygyImage, SpecExamples) {
  auto r = r1();
  auto o1 = syzygy_image(r, {{1, 1}});
  EXPECT_TRUE(o1.certificate.certified);
  EXPECT_EQ(o1.module.generators(), 2);
  auto x = principal_x(r);
  EXPECT_TRUE(x.certificate.certified);
  EXPECT_EQ(x.module.generators(), 1);
  auto k = syzygy_image(r2(), {{0, 1}});
  EXPECT_TRUE(k.certificate.certified);
}

TEST(SyzygyImage, RefusesNonMcmAndZero) {
  auto r = r1();
  auto k = syzygy_image(r, {{0, 1}});
  EXPECT_FALSE(k.certificate.certified);
  EXPECT_FALSE(k.certificate.mcm);
  auto zero = syzygy_image(r, {{0, 1}}, {Vector::basis(2, 0)});
  EXPECT_FALSE(zero.certificate.nonzero);
}

TEST(Regularity, SharpnessOverR1) {
  auto r = r1();
  auto m = principal_x(r);
  auto v = regularity_criterion(m, m, 8);
  EXPECT_EQ(v.reports[0].longest_zero_run(), 1);
  EXPECT_EQ(v.reports[1].longest_zero_run(), 1);
  EXPECT_EQ(v.outcome, "inconclusive-by-theorem");
  EXPECT_FALSE(v.verdict);
  EXPECT_TRUE(v.agreement);
}

TEST(Regularity, PolynomialRing) {
  auto r3 = polynomial_ring(kXY);
  auto l = syzygy_image(r3, {{2, 1}});
  auto v = regularity_criterion(l, l, 6);
  EXPECT_TRUE(v.verdict);
  EXPECT_TRUE(v.agreement);
  EXPECT_EQ(v.window, std::make_pair(1, 3));
}

TEST(Regularity, ResidueFieldOverR2) {
  auto q = r2();
  auto k = syzygy_image(q, {{0, 1}});
  auto v = regularity_criterion(k, k, 6);
  EXPECT_FALSE(v.verdict);
  EXPECT_TRUE(v.agreement);
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(v.reports[0].at(i).length, 1LL << i);
}

TEST(Regularity, RefusesOutsideHypotheses) {
  auto r = quotient_ring(kXY, {"x^3"});  // e = 3 > mu(m) - dim + 1 = 2
  auto l = syzygy_image(r, {{1, 1}});
  EXPECT_THROW(regularity_criterion(l, l, 4), HypothesisRefused);
  auto q = r1();
  auto k = syzygy_image(q, {{0, 1}});
  EXPECT_THROW(regularity_criterion(k, k, 4), HypothesisRefused);
  auto x = principal_x(q);
  EXPECT_THROW(regularity_criterion(x, x, 1), InputError);
}

TEST(GorensteinExt, SpecExamples) {
  auto a = gorenstein_criterion_ext_L_R(syzygy_image(r1(), {{1, 1}}), 6);
  EXPECT_TRUE(a.verdict);
  EXPECT_TRUE(a.agreement);
  auto c = gorenstein_criterion_ext_L_R(syzygy_image(r2(), {{0, 1}}), 4);
  EXPECT_FALSE(c.verdict);
  EXPECT_TRUE(c.agreement);
  for (const auto& e : c.reports[0].entries) EXPECT_FALSE(e.vanishes);
}

TEST(GorensteinOmega, SpecExamples) {
  auto a = gorenstein_criterion_omega(syzygy_image(r1(), {{1, 1}}), 4);
  EXPECT_TRUE(a.verdict);
  EXPECT_TRUE(a.agreement);
  auto c = gorenstein_criterion_omega(syzygy_image(r2(), {{0, 1}}), 4);
  EXPECT_FALSE(c.verdict);
  EXPECT_TRUE(c.agreement);
}

TEST(GorensteinScan, R1AndR2) {
  auto a = gorenstein_scan_syzygies_of_omega(r1(), 4);
  EXPECT_EQ(a.found_at, 0);
  EXPECT_TRUE(a.agreement);
  auto b = gorenstein_scan_syzygies_of_omega(r2(), 6);
  EXPECT_FALSE(b.found_at.has_value());
  EXPECT_TRUE(b.agreement);
}

TEST(Gdim, SpecExamples) {
  auto r = r1();
  EXPECT_TRUE(gdim_zero_up_to(free_module(r, 2), 3).result.yes);
  auto l = syzygy_image(r, {{1, 1}});
  auto g = gdim_zero_up_to(l.module, 6, l.certificate);
  EXPECT_TRUE(g.result.yes);
  EXPECT_TRUE(g.corollary_applies);
  EXPECT_TRUE(g.gorenstein);
  EXPECT_TRUE(g.agreement);
  auto q = r2();
  auto kg = gdim_zero_up_to(residue_field(q), 1);
  EXPECT_FALSE(kg.result.yes);
  EXPECT_EQ(kg.result.failed, "biduality");
}

TEST(Audit, ResidueFieldOverR1) {
  auto rep = no_summand_audit(residue_field(r1()), 6);
  EXPECT_EQ(rep.window_start, 2);
  EXPECT_EQ(rep.violations, 0);
  for (const auto& row : rep.rows)
    if (row.n >= 1) EXPECT_FALSE(row.free_summand) << row.n;
}

TEST(Audit, KoszulExample) {
  auto r3 = polynomial_ring(kXY);
  auto m = direct_sum({free_module(r3, 1), cyclic_module(r3, {r3->parse("x")}),
                       cyclic_module(r3, {r3->parse("x"), r3->parse("y")})});
  auto rep = no_summand_audit(m, 3);
  EXPECT_EQ(rep.violations, 0);
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(rep.rows[static_cast<std::size_t>(n)].free_summand) << n;
  EXPECT_TRUE(rep.rows[3].zero);
}

TEST(SocleLemma, R2AndR4) {
  for (const auto& r : {r2(), r4()}) {
    auto rows = socle_lemma_check(residue_field(r), 4);
    for (const auto& row : rows) EXPECT_TRUE(row.contained) << row.n << " " << row.witness;
  }
}

TEST(Takahashi, R1ModXPlusY) {
  auto r = r1();
  auto rep = takahashi_check(r, r->parse("x+y"), 5);
  EXPECT_TRUE(rep.all_ok);
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.mu_lhs, 2);
    EXPECT_EQ(row.beta_n + row.beta_n1, 2);
  }
}

TEST(SyzygyModX, MaximalIdealOverR4) {
  auto r = r4();
  auto m = syzygy_module(residue_field(r), 1);
  for (const auto& row : syzygy_mod_x_check(m, r->parse("z"), 3)) EXPECT_TRUE(row.ok) << row.n;
}
