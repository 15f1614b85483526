#include <gtest/gtest.h>

#include <random>

#include "gorjdt/errors.hpp"
#include "gorjdt/jordan.hpp"
#include "oracle.hpp"

using namespace gorjdt;

namespace {
Poly D(const std::string& s, Field f = Field::rationals()) { return parse_poly(s, Side::Dual, f); }
LinearForm L(const std::string& s, Field f = Field::rationals()) { return parse_linear_form(s, f); }
Jdt P(const std::string& s, std::optional<int> j = std::nullopt) { return parse_jdt(s, j); }

const std::vector<std::vector<int>> kExampleM = {
    {1, 1, 1, 0, 0}, {0, 3, 3, 2, 0}, {0, 0, 4, 3, 1}, {0, 0, 0, 3, 1}, {0, 0, 0, 0, 1}};
}  // namespace

TEST(Jordan, WorkedExampleRankMatrix) {
  RankMatrix M = rank_matrix(D("X^2YZ"), L("x"));
  EXPECT_EQ(M, TriMatrix::from_rows(kExampleM));
  JdtMatrix J = jdt_matrix(M);
  for (int u = 0; u < 5; ++u)
    for (int v = u; v < 5; ++v) {
      int want = (u == 0 && v == 2) || (u == 2 && v == 4) ? 1 : (u == 1 && v == 3 ? 2 : 0);
      EXPECT_EQ(J.at(u, v), want) << u << "," << v;
    }
  EXPECT_EQ(to_notation(jdt_from_matrix(J)), "(3_0,3_1^2,3_2)");
}

TEST(Jordan, PowerOfVariable) {
  RankMatrix M = rank_matrix(D("X^5"), L("x"));
  for (int u = 0; u <= 5; ++u)
    for (int v = u; v <= 5; ++v) EXPECT_EQ(M.at(u, v), 1);
  JdtMatrix J = jdt_matrix(M);
  EXPECT_EQ(J.at(0, 5), 1);
  EXPECT_EQ(jdt_from_matrix(J), P("6_0"));
  EXPECT_EQ(rank_matrix_from_jdt(P("6_0"), 5), M);
}

TEST(Jordan, CubicOverRationals) {
  RankMatrix M = rank_matrix(D("X^3+Y^3+Z^3"), L("x+y+z"));
  EXPECT_EQ(M.diagonal(0), (IntSeq{1, 3, 3, 1}));
  EXPECT_EQ(M.diagonal(1), (IntSeq{1, 3, 1}));
  EXPECT_EQ(M.diagonal(2), (IntSeq{1, 1}));
  EXPECT_EQ(M.diagonal(3), (IntSeq{1}));
  Jdt S = jdt_from_matrix(jdt_matrix(M));
  EXPECT_EQ(S, P("(4_0,(2_1)^2)"));
  EXPECT_EQ(jordan_type(S), (JordanPartition{4, 2, 2}));
  EXPECT_TRUE(is_strong_lefschetz(S, {1, 3, 3, 1}));
}

TEST(Jordan, CubicInCharacteristicThree) {
  Field f3 = Field::prime(3);
  Poly F = D("X^3+Y^3+Z^3", f3);
  LinearForm ell = L("x+y+z", f3);
  RankMatrix M = rank_matrix(F, ell);
  EXPECT_EQ(M.diagonal(0), (IntSeq{1, 3, 3, 1}));
  EXPECT_EQ(M.diagonal(3), (IntSeq{0}));
  // the test-side oracle agrees on every rank
  auto flat = oracle::rank_matrix_rows(F, {1, 1, 1}, 3);
  EXPECT_EQ(M.flatten(), flat);
  EXPECT_EQ(oracle::jordan_partition(F, {1, 1, 1}, 3), (std::vector<int>{3, 3, 2}));
  Jdt S = jdt(F, ell);
  EXPECT_EQ(S, P("(3_0,3_1,2_1)"));
  EXPECT_EQ(to_notation(S), "(3_{0,1},2_1)");
  EXPECT_EQ(jordan_oracle(F, ell), S);
}

TEST(Jordan, JordanTypeAndLefschetz) {
  EXPECT_EQ(jordan_type(P("(3_0,3_1^2,3_2)")), (JordanPartition{3, 3, 3, 3}));
  EXPECT_EQ(jordan_type(P("(4_0,2_1)")), (JordanPartition{4, 2}));
  EXPECT_TRUE(jordan_type(Jdt{}).empty());
  EXPECT_TRUE(is_weak_lefschetz(P("(3_0,3_1^2,3_2)"), {1, 3, 4, 3, 1}));
  EXPECT_FALSE(is_weak_lefschetz(P("(4_0,2_1)"), {1, 3, 3, 1}));
  EXPECT_TRUE(is_weak_lefschetz(P("6_0"), {1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(is_strong_lefschetz(P("(5_0,3_1,3_1)"), {1, 3, 3, 3, 1}));
  EXPECT_FALSE(is_strong_lefschetz(P("(3_0,3_1,1_1,1_2)"), {1, 3, 3, 1}));
  EXPECT_TRUE(is_strong_lefschetz(P("1_0"), {1}));
}

TEST(Jordan, SymmetryAndInitialDegrees) {
  EXPECT_TRUE(check_symmetry(P("(5_0,3_1,3_1,1_2)"), 4));
  EXPECT_TRUE(check_symmetry(P("(5_0,3_1)"), 4));
  EXPECT_FALSE(check_symmetry(P("(5_0,2_1)"), 4));
  Jdt S4 = P("(4↑_0^2,1_1,1_4)");
  EXPECT_TRUE(check_symmetry(S4, 5));
  EXPECT_EQ(initial_hilbert(P("(5_0,3_1,3_1,1_2)")), (IntSeq{1, 2, 1}));
  EXPECT_EQ(initial_hilbert(S4), (IntSeq{1, 2, 1, 0, 1}));
  EXPECT_EQ(initial_hilbert(P("7_0")), (IntSeq{1}));
}

TEST(Jordan, NegativeJdtEntryRejected) {
  RankMatrix M = TriMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  EXPECT_THROW(jdt_matrix(M), NegativeEntry);
  EXPECT_THROW(rank_matrix(D("X^2"), LinearForm(Field::rationals(), 0, 0, 0)), ZeroLinearForm);
}

TEST(Jordan, IdealPathMatchesDualPath) {
  Poly F = D("X^2YZ");
  auto I = GradedIdeal::annihilator(F);
  EXPECT_EQ(rank_matrix_from_ideal(I, L("x"), 4), rank_matrix(F, L("x")));
  auto m = GradedIdeal::parse({"x", "y", "z"}, Field::rationals(), 1);
  EXPECT_EQ(rank_matrix_from_ideal(m, L("x"), 0), TriMatrix::from_rows({{1}}));
}

TEST(Jordan, TableFamilies) {
  for (int j = 4; j <= 8; ++j) {
    Poly F = D("X^" + std::to_string(j - 1) + "Y+Z^" + std::to_string(j));
    EXPECT_EQ(jdt(F, L("x")), P("(j_0,j_1,1↑_1^{j-1})", j)) << j;
  }
  EXPECT_EQ(jdt(D("X^2YZ"), L("x")), P("(3_0,3_1^2,3_2)"));
}

TEST(Jordan, RankMatrixAgainstOracle) {
  for (const char* f : {"X^2YZ", "X^3YZ^3-X^2Y^3Z^2", "X^4+X^2Z^2+XY^3", "X^5Y+Z^6+Y^3Z^3"}) {
    Poly F = D(f);
    for (std::array<int, 3> c : {std::array{1, 0, 0}, std::array{1, 1, 1}, std::array{0, 2, -1}}) {
      LinearForm ell(Field::rationals(), c[0], c[1], c[2]);
      EXPECT_EQ(rank_matrix(F, ell).flatten(), oracle::rank_matrix_rows(F, {c[0], c[1], c[2]})) << f;
      EXPECT_EQ(jordan_type(jdt(F, ell)), oracle::jordan_partition(F, {c[0], c[1], c[2]})) << f;
    }
  }
}

TEST(Jordan, Classification) {
  const int j = 6;
  auto c = classify_parts(P("((j+1)_0,2↑_1^{j-2},1_{1,j-1})", j), j, 3);
  ASSERT_EQ(c.lengthening.size(), 1u);
  EXPECT_EQ(c.lengthening[0], (Part{j + 1, 0}));
  EXPECT_EQ(c.repeated_widths(), (std::vector<int>{2}));
  EXPECT_EQ(c.sporadic.size(), 2u);

  const int j2 = 10;
  auto c2 = classify_parts(P("(j_{0,1},2↑_2^{j-3},1↑_1^{j-1},1_{2,j-2})", j2), j2, 5);
  EXPECT_EQ(c2.repeated_widths(), (std::vector<int>{2, 1}));
  ASSERT_EQ(c2.lengthening.size(), 2u);
  EXPECT_EQ(c2.lengthening[0], (Part{j2, 0}));
  EXPECT_EQ(c2.lengthening[1], (Part{j2, 1}));

  auto c3 = classify_parts(P("(4_0,(2_1)^2)"), 3, 3);
  EXPECT_EQ(c3.lengthening.size(), 3u);
  EXPECT_TRUE(c3.repeated.empty());
}

TEST(Jordan, NotationRoundTrip) {
  for (const char* s : {"(3_0,3_1^2,3_2)", "(8↑_0^2,7_{1,2},6_2)", "(9_{0,1},8_1,2↑_2^6,1_2^2,1↑_3^6,1_7^2)",
                        "(10_0,8_1^2,(1↑_2^7)^3)", "(8_0,8_1^2,8_2,2↑_2^6,1_{2,7})", "6_0"}) {
    Jdt S = P(s);
    EXPECT_EQ(P(to_notation(S)), S) << s;
  }
  EXPECT_EQ(to_notation(P("(3_0,3_1,3_1,3_2)")), "(3_0,3_1^2,3_2)");
  EXPECT_EQ(P("(4↑_0^2)"), P("(4_0,4_1,4_2)"));
  EXPECT_EQ(P("(2_{1,3})"), P("(2_1,2_3)"));
  EXPECT_EQ(P("((j-2)_{1,2})^2", 10), P("(8_1^2,8_2^2)"));
  EXPECT_THROW(P("(3_0"), SyntaxError);
  EXPECT_THROW(P("(j_0)"), SyntaxError);
}

TEST(Jordan, OracleMatchesRankPathOnRandomForms) {
  std::mt19937 rng(20241);
  std::uniform_int_distribution<int> coef(-3, 3), deg(2, 8), nterms(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int j = deg(rng);
    auto basis = monomial_basis(j);
    Poly F = Poly::zero(Field::rationals(), Side::Dual, j);
    while (F.is_zero()) {
      for (int t = nterms(rng); t > 0; --t) {
        int c = coef(rng);
        if (c) F.add_term(basis[rng() % basis.size()], c);
      }
    }
    int a = 0, b = 0, c = 0;
    while (a == 0 && b == 0 && c == 0) a = coef(rng), b = coef(rng), c = coef(rng);
    LinearForm ell(Field::rationals(), a, b, c);
    Jdt S = jdt_from_matrix(jdt_matrix(rank_matrix(F, ell)));
    EXPECT_EQ(jordan_oracle(F, ell), S) << F.to_string();
    EXPECT_EQ(jordan_type(S), oracle::jordan_partition(F, {a, b, c})) << F.to_string();
  }
}
