#include <gtest/gtest.h>

#include "syzlab/ring.hpp"

using namespace syzlab;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Polynomial P(std::string_view s, std::uint32_t p = PrimeField::kDefaultPrime) {
  return parse_polynomial(s, kXY, PrimeField(p));
}

}  // namespace

TEST(Field, RejectsBadCharacteristic) {
  EXPECT_THROW(PrimeField(0), InputError);
  EXPECT_THROW(PrimeField(32004), InputError);
  EXPECT_NO_THROW(PrimeField(5));
}

TEST(Field, InverseAndSignedLift) {
  PrimeField f(32003);
  for (Coeff a : {1u, 2u, 17u, 32002u}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.to_signed(32002), -1);
  EXPECT_EQ(f.from_int(-3), 32000u);
}

TEST(PolyArithmetic, SpecExamples) {
  auto xy = P("x*y");
  EXPECT_TRUE(poly_arithmetic(xy, -xy, PolyOp::add).is_zero());
  EXPECT_EQ(poly_arithmetic(P("x+y"), P("x-y"), PolyOp::mul), P("x^2-y^2"));
  auto s = poly_arithmetic(P("x^2+x*y", 5), P("0", 5), PolyOp::scale, 3);
  EXPECT_EQ(s, P("3*x^2 + 3*x*y", 5));
  EXPECT_EQ(s.lead().coeff, 3u);
}

TEST(PolyArithmetic, MismatchedVariableCount) {
  auto a = P("x");
  auto b = parse_polynomial("z", {"x", "y", "z"}, PrimeField());
  EXPECT_THROW(a + b, InputError);
}

TEST(Parser, GrammarAndErrors) {
  EXPECT_EQ(P("(x+y)^2"), P("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P(" - x * y + 3 "), P("3-x*y"));
  EXPECT_THROW(P("x+"), InputError);
  EXPECT_THROW(P("w"), InputError);
  EXPECT_THROW(P("x^-1"), InputError);
}

TEST(MonomialCompare, Degrevlex) {
  std::vector<int> x2{2, 0}, xy{1, 1}, y3{0, 3}, x2y{2, 1};
  EXPECT_TRUE(monomial_compare(x2, xy) > 0);
  EXPECT_TRUE(monomial_compare(xy, xy) == 0);
  EXPECT_TRUE(monomial_compare(x2y, y3) > 0);
  std::vector<int> three{1, 0, 0};
  EXPECT_THROW(monomial_compare(x2, three), InputError);
  // degrevlex in three variables: x*z < y^2
  EXPECT_TRUE(monomial_compare(std::vector<int>{1, 0, 1}, std::vector<int>{0, 2, 0}) < 0);
}

TEST(MonomialCompare, OverflowIsAnError) {
  auto big = Monomial::variable(1, 0, std::numeric_limits<std::int32_t>::max());
  EXPECT_THROW(big * Monomial::variable(1, 0), std::overflow_error);
}

TEST(DefineRing, SpecExamples) {
  auto r1 = quotient_ring(kXY, {"x*y"});
  ASSERT_EQ(r1->groebner_basis().size(), 1u);
  EXPECT_EQ(r1->format(r1->groebner_basis()[0]), "x*y");
  auto r2 = quotient_ring(kXY, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(r2->groebner_basis().size(), 3u);
  auto r3 = quotient_ring(kXY, {});
  EXPECT_TRUE(r3->is_polynomial_ring());
}

TEST(DefineRing, Rejections) {
  EXPECT_THROW(quotient_ring(kXY, {"x^2+y"}), InputError);
  EXPECT_THROW(quotient_ring(kXY, {"x*y"}, 12), InputError);
  EXPECT_THROW(quotient_ring({"x", "x"}, {}), InputError);
  EXPECT_THROW(quotient_ring(kXY, {"1"}), InputError);
  RingSpec s;
  s.vars = kXY;
  s.degrees = {1, 2};
  EXPECT_THROW(define_ring(s), InputError);
}
