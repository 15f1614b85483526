#include <gtest/gtest.h>

#include "gorjdt/errors.hpp"
#include "gorjdt/poly.hpp"

using namespace gorjdt;

namespace {
Poly D(const char* s, Field f = Field::rationals()) { return parse_poly(s, Side::Dual, f); }
Poly R(const char* s, Field f = Field::rationals()) { return parse_poly(s, Side::Ring, f); }
}  // namespace

TEST(Field, PrimeArithmetic) {
  Field f3 = Field::prime(3);
  EXPECT_EQ(f3.add(2, 2), 1);
  EXPECT_EQ(f3.mul(2, 2), 1);
  EXPECT_EQ(f3.inv(2), 2);
  EXPECT_EQ(f3.normalize(mpq_class(1, 2)), 2);
  EXPECT_THROW(Field::prime(4), InvalidField);
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(1));
}

TEST(Poly, Addition) {
  EXPECT_TRUE((D("X^3") + D("-X^3")).is_zero());
  EXPECT_EQ(D("X^2Y") + D("X^2Y"), D("2X^2Y"));
  Field f2 = Field::prime(2);
  EXPECT_TRUE((D("X^2Y", f2) + D("X^2Y", f2)).is_zero());
  EXPECT_THROW(D("X^2") + D("X^3"), DegreeMismatch);
  EXPECT_THROW(D("X") + R("x"), SideMismatch);
  EXPECT_THROW(D("X") + D("X", f2), FieldMismatch);
}

TEST(Poly, Multiplication) {
  EXPECT_EQ(R("x") * R("y"), R("xy"));
  EXPECT_EQ(R("x-y") * R("x+y"), R("x^2-y^2"));
  EXPECT_EQ(R("xy-yz") * R("z"), R("xyz-yz^2"));
  EXPECT_EQ(pow(R("x+y"), 2), R("x^2+2xy+y^2"));
}

TEST(Poly, Contraction) {
  EXPECT_EQ(contract(R("x^2yz^2"), D("X^3YZ^3-X^2Y^3Z^2")), D("XZ-Y^2"));
  EXPECT_EQ(contract(R("1"), D("X^3+Y^3+Z^3")), D("X^3+Y^3+Z^3"));
  EXPECT_EQ(contract(R("x+y+z"), D("X^3+Y^3+Z^3")), D("X^2+Y^2+Z^2"));
  // contraction, not differentiation: no factor 3
  EXPECT_EQ(contract(R("x"), D("X^3")), D("X^2"));
  EXPECT_TRUE(contract(R("x^4"), D("X^3Y")).is_zero());
  EXPECT_THROW(contract(D("X"), D("X^2")), SideMismatch);
}

TEST(Poly, MonomialBasis) {
  EXPECT_EQ(monomial_basis(0).size(), 1u);
  EXPECT_EQ(monomial_basis(1).size(), 3u);
  EXPECT_EQ(monomial_basis(4).size(), 15u);
  auto b1 = monomial_basis(1);
  // grevlex with z > y > x
  EXPECT_EQ(b1[0], Monomial(0, 0, 1));
  EXPECT_EQ(b1[2], Monomial(1, 0, 0));
  for (int d = 0; d < 6; ++d) {
    auto b = monomial_basis(d);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(monomial_index(b[i]), i);
  }
}

TEST(Poly, Parse) {
  Poly q = D("X^4+X^2*Z^2+X*Y^3");
  EXPECT_EQ(q.degree(), 4);
  EXPECT_EQ(q.size(), 3u);
  Poly p = D("X^3YZ^3-X^2Y^3Z^2");
  EXPECT_EQ(p.degree(), 7);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient(Monomial(2, 3, 2)), -1);
  EXPECT_EQ(D("1/2X^2"), D("X^2").scaled(mpq_class(1, 2)));
  EXPECT_THROW(D("X^2+Y"), NonHomogeneous);
  EXPECT_THROW(D("X^2+"), SyntaxError);
  EXPECT_THROW(D("W^2"), SyntaxError);
  EXPECT_EQ(parse_linear_form("x+y+z"), LinearForm(Field::rationals(), 1, 1, 1));
  EXPECT_THROW(parse_linear_form("0"), ZeroLinearForm);
}

TEST(Poly, DividedPowers) {
  Field q = Field::rationals();
  EXPECT_EQ(divided_power(LinearForm(q, 0, 1, 1), 2), D("Y^2+YZ+Z^2"));
  EXPECT_EQ(divided_power(LinearForm(q, 1, 0, 0), 5), D("X^5"));
  EXPECT_EQ(divided_power(LinearForm(q, 0, 1, 1), 3) - D("Y^3") - D("Y^2Z"), D("YZ^2+Z^3"));
  // every y^a z^b contracts (Y+Z)^[3] to a nonzero form
  Poly P = divided_power(LinearForm(q, 0, 1, 1), 3);
  for (int a = 0; a <= 3; ++a) {
    Poly h = Poly::monomial(q, Side::Ring, Monomial(0, a, 3 - a));
    EXPECT_FALSE(contract(h, P).is_zero());
  }
}

TEST(Poly, ToStringRoundTrip) {
  for (const char* s : {"X^3YZ^3-X^2Y^3Z^2", "X^4+X^2Z^2+XY^3", "2XYZ-1/3Z^3", "X^5"}) {
    Poly p = D(s);
    EXPECT_EQ(parse_poly(p.to_string(), Side::Dual), p) << s;
  }
}
