#include <gtest/gtest.h>

#include "gorjdt/apolarity.hpp"
#include "gorjdt/errors.hpp"
#include "gorjdt/tables.hpp"
#include "oracle.hpp"

using namespace gorjdt;

namespace {
Poly D(const std::string& s) { return parse_poly(s, Side::Dual); }

// span(a) == span(b) inside R_d
bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  auto rows = [](const std::vector<Poly>& v) {
    std::vector<oracle::Row> out;
    for (const auto& p : v) {
      auto d = p.to_dense();
      out.emplace_back(d.begin(), d.end());
    }
    return out;
  };
  auto ra = rows(a), rb = rows(b), both = ra;
  both.insert(both.end(), rb.begin(), rb.end());
  int r = oracle::rank(both);
  return r == oracle::rank(ra) && r == oracle::rank(rb);
}

IntSeq oracle_hilbert(const Poly& F) {
  IntSeq h;
  for (int d = 0; d <= F.degree(); ++d) h.push_back(oracle::power_rank(F, {1, 0, 0}, d, 0));
  return h;
}
}  // namespace

TEST(Apolarity, CatalecticantRanks) {
  EXPECT_EQ(rank(catalecticant(D("X^6"), 1)), 1u);
  EXPECT_EQ(rank(catalecticant(D("X^2YZ"), 2)), 4u);
  EXPECT_EQ(rank(catalecticant(D("X^3+Y^3+Z^3"), 2)), 3u);
  auto C = catalecticant(D("X^2YZ"), 1);
  EXPECT_EQ(C.rows(), 3u);
  EXPECT_EQ(C.cols(), 10u);
}

TEST(Apolarity, HilbertFunction) {
  EXPECT_EQ(hilbert_function(D("X^5")), (IntSeq{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(hilbert_function(D("X^2YZ")), (IntSeq{1, 3, 4, 3, 1}));
  EXPECT_EQ(hilbert_function(D("X^6+Y^6+Z^6")), (IntSeq{1, 3, 3, 3, 3, 3, 1}));
}

TEST(Apolarity, HilbertFunctionMatchesOracle) {
  for (const char* f : {"X^3YZ^3-X^2Y^3Z^2", "X^4+X^2Z^2+XY^3", "XYZ^3+X^5+Y^2Z^3", "X^2Y^2Z^2"}) {
    Poly F = D(f);
    EXPECT_EQ(hilbert_function(F), oracle_hilbert(F)) << f;
  }
}

TEST(Apolarity, AnnihilatorPieces) {
  Field q = Field::rationals();
  auto r = [&](const char* s) { return parse_poly(s, Side::Ring, q); };
  EXPECT_TRUE(same_span(ann_graded_basis(D("X^3+Y^3+Z^3"), 2), {r("xy"), r("xz"), r("yz")}));
  // degree 3: generated part plus x^3-y^3, x^3-z^3
  std::vector<Poly> deg3 = {r("x^3-y^3"), r("x^3-z^3")};
  for (const char* g : {"xy", "xz", "yz"})
    for (const char* v : {"x", "y", "z"}) deg3.push_back(r(g) * r(v));
  EXPECT_TRUE(same_span(ann_graded_basis(D("X^3+Y^3+Z^3"), 3), deg3));
  EXPECT_TRUE(same_span(ann_graded_basis(D("X^7"), 1), {r("y"), r("z")}));
  EXPECT_TRUE(same_span(ann_graded_basis(D("XYZ"), 2), {r("x^2"), r("y^2"), r("z^2")}));
}

TEST(Apolarity, IdealBasis) {
  auto I = GradedIdeal::parse({"x"}, Field::rationals(), 4);
  EXPECT_EQ(ideal_graded_basis(I, 2).size(), 3u);
  auto J = GradedIdeal::parse({"x^2", "y^2", "z^2"}, Field::rationals(), 4);
  EXPECT_EQ(quotient_hilbert(J, 3), (IntSeq{1, 3, 3, 1}));
  auto m = GradedIdeal::parse({"x", "y", "z"}, Field::rationals(), 4);
  EXPECT_EQ(quotient_hilbert(m, 3), (IntSeq{1, 0, 0, 0}));
}

TEST(Apolarity, QuotientOfAnnihilator) {
  for (const char* f : {"X^6+Y^6+Z^6", "X^5Y+Z^6", "X^2YZ"}) {
    Poly F = D(f);
    auto I = GradedIdeal::annihilator(F);
    EXPECT_EQ(quotient_hilbert(I, F.degree()), hilbert_function(F)) << f;
    IntSeq socle(F.degree() + 1, 0);
    socle.back() = 1;
    EXPECT_EQ(socle_dimension(I, F.degree()), socle) << f;
  }
}

TEST(Apolarity, Socle) {
  auto fat = GradedIdeal::parse({"x^2", "xy", "xz", "y^2", "yz", "z^2"}, Field::rationals(), 3);
  EXPECT_EQ(socle_dimension(fat, 1), (IntSeq{0, 3}));
}

TEST(Apolarity, IdealFamilyAtTen) {
  const auto& e = table("T11").entry("3");
  auto gens = eval_ideal_template(e.generator, 10);
  GradedIdeal I(Field::rationals(), gens, 11);
  EXPECT_EQ(quotient_hilbert(I, 10), (IntSeq{1, 3, 5, 5, 5, 5, 5, 5, 5, 3, 1}));
  IntSeq socle(11, 0);
  socle.back() = 1;
  EXPECT_EQ(socle_dimension(I, 10), socle);
  EXPECT_EQ(quotient_hilbert(I, 10)[3], 5);
}

TEST(Apolarity, Errors) {
  EXPECT_THROW(hilbert_function(Poly::zero(Field::rationals(), Side::Dual, 3)), ZeroPolynomial);
  EXPECT_THROW(catalecticant(parse_poly("x^2", Side::Ring), 1), SideMismatch);
}
