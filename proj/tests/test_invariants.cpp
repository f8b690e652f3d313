#include <gtest/gtest.h>

#include "syzlab/invariants.hpp"

using namespace syzlab;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

std::vector<long long> head(const HilbertData& h, int count) {
  std::vector<long long> out;
  for (int d = 0; d < count; ++d) out.push_back(h.value(d));
  return out;
}

}  // namespace

TEST(Hilbert, R1) {
  auto r1 = quotient_ring(kXY, {"x*y"});
  auto h = hilbert(*r1);
  EXPECT_EQ(h.numerator.to_string(), "1 + t");
  EXPECT_EQ(h.dim, 1);
  EXPECT_EQ(h.multiplicity, 2);
  EXPECT_EQ(head(h, 5), (std::vector<long long>{1, 2, 2, 2, 2}));
}

TEST(Hilbert, R2AndR3) {
  auto h2 = hilbert(*quotient_ring(kXY, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(h2.dim, 0);
  EXPECT_EQ(h2.multiplicity, 3);
  EXPECT_EQ(head(h2, 4), (std::vector<long long>{1, 2, 0, 0}));
  auto h3 = hilbert(*polynomial_ring(kXY));
  EXPECT_EQ(h3.dim, 2);
  EXPECT_EQ(h3.multiplicity, 1);
  EXPECT_EQ(h3.numerator.to_string(), "1");
  EXPECT_EQ(head(h3, 4), (std::vector<long long>{1, 2, 3, 4}));
}

TEST(Hilbert, NonMonomialIdeal) {
  // Twisted cubic: HF(d) = 3d + 1.
  auto r = quotient_ring({"a", "b", "c", "d"}, {"a*c-b^2", "b*d-c^2", "a*d-b*c"});
  auto h = hilbert(*r);
  EXPECT_EQ(h.dim, 2);
  EXPECT_EQ(h.multiplicity, 3);
  EXPECT_EQ(head(h, 5), (std::vector<long long>{1, 4, 7, 10, 13}));
}

TEST(Hilbert, ResolutionPathAgrees) {
  auto r = quotient_ring(kXYZ, {"x^2", "x*y", "y^2"});
  auto omega = canonical_module(r);
  auto direct = hilbert(omega, 8);
  auto via_res = hilbert_from_resolution(ambient_resolution(omega), 8);
  EXPECT_EQ(direct.numerator, via_res.numerator);
  EXPECT_EQ(direct.dim, via_res.dim);
}

TEST(Hilbert, AdditiveOnDirectSums) {
  auto r = quotient_ring(kXY, {"x*y"});
  auto a = residue_field(r);
  auto b = shifted(cyclic_module(r, {r->parse("x^2")}), 1);
  auto sum = hilbert(direct_sum({a, b}));
  for (int d = 0; d < 8; ++d) EXPECT_EQ(sum.value(d), hilbert(a).value(d) + hilbert(b).value(d)) << d;
}

TEST(Depth, SpecExamples) {
  EXPECT_EQ(depth(free_module(polynomial_ring(kXY), 1)), 2);
  EXPECT_EQ(depth(free_module(quotient_ring(kXY, {"x^2", "x*y", "y^2"}), 1)), 0);
  EXPECT_EQ(depth(free_module(quotient_ring(kXYZ, {"x^2", "x*y", "y^2"}), 1)), 1);
  auto r = polynomial_ring(kXY);
  EXPECT_THROW(depth(cyclic_module(r, {r->one()})), InputError);
}

TEST(Classify, R1) {
  auto c = classify(*quotient_ring(kXY, {"x*y"}));
  EXPECT_EQ(c.dim, 1);
  EXPECT_EQ(c.multiplicity, 2);
  EXPECT_EQ(c.embdim, 2);
  EXPECT_TRUE(c.cohen_macaulay);
  EXPECT_TRUE(c.gorenstein);
  EXPECT_TRUE(c.minimal_multiplicity);
  EXPECT_FALSE(c.regular);
}

TEST(Classify, R2R3R4) {
  auto c2 = classify(*quotient_ring(kXY, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(c2.dim, 0);
  EXPECT_EQ(c2.multiplicity, 3);
  EXPECT_EQ(c2.type, 2);
  EXPECT_FALSE(c2.gorenstein);
  EXPECT_TRUE(c2.minimal_multiplicity);
  auto c3 = classify(*polynomial_ring(kXY));
  EXPECT_TRUE(c3.regular);
  EXPECT_TRUE(c3.gorenstein);
  auto c4 = classify(*quotient_ring(kXYZ, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(c4.dim, 1);
  EXPECT_EQ(c4.depth, 1);
  EXPECT_EQ(c4.type, 2);
  EXPECT_TRUE(c4.minimal_multiplicity);
  EXPECT_FALSE(c4.gorenstein);
}

TEST(Classify, NonCohenMacaulay) {
  // k[x,y,z,w]/(x,y) intersected with (z,w): dim 2, depth 1.
  auto r = quotient_ring({"x", "y", "z", "w"}, {"x*z", "x*w", "y*z", "y*w"});
  auto c = classify(*r);
  EXPECT_EQ(c.dim, 2);
  EXPECT_EQ(c.depth, 1);
  EXPECT_FALSE(c.cohen_macaulay);
  EXPECT_FALSE(c.type.has_value());
  EXPECT_THROW(canonical_module(r), HypothesisRefused);
}

TEST(Canonical, SpecExamples) {
  auto w1 = minimal_presentation(canonical_module(quotient_ring(kXY, {"x*y"}))).module;
  EXPECT_EQ(w1.generators(), 1);
  EXPECT_TRUE(w1.relations.empty());
  auto w2 = canonical_module(quotient_ring(kXY, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(minimal_presentation(w2).module.generators(), 2);
  auto r4 = quotient_ring(kXYZ, {"x^2", "x*y", "y^2"});
  auto w4 = canonical_module(r4);
  EXPECT_EQ(minimal_presentation(w4).module.generators(), 2);
  EXPECT_EQ(depth(w4), 1);
}

TEST(Canonical, HilbertOfOmegaOverArtinianRing) {
  // For Artinian R, H_omega(d) = H_R(-d) with the graded twist used here.
  auto r2 = quotient_ring(kXY, {"x^2", "x*y", "y^2"});
  auto h = hilbert(canonical_module(r2));
  EXPECT_EQ(h.value(-1), 2);
  EXPECT_EQ(h.value(0), 1);
  EXPECT_EQ(h.length(), 3);
}
