#pragma once

// Property checks shared by the unit tests and the acceptance runner.

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gorjdt/combinatorics.hpp"
#include "gorjdt/enumerator.hpp"
#include "gorjdt/jordan.hpp"
#include "gorjdt/tables.hpp"

namespace props {

using namespace gorjdt;

struct Outcome {
  bool ok = true;
  int checked = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Computed {
  Jdt jdt;
  int j;
  std::string origin;
};

inline Poly random_form(std::mt19937& rng, int j) {
  std::uniform_int_distribution<int> coef(-4, 4), nterms(1, 6);
  auto basis = monomial_basis(j);
  Poly F = Poly::zero(Field::rationals(), Side::Dual, j);
  while (F.is_zero())
    for (int t = nterms(rng); t > 0; --t) F.add_term(basis[rng() % basis.size()], coef(rng));
  return F;
}

inline LinearForm random_linear(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  int a = 0, b = 0, c = 0;
  while (a == 0 && b == 0 && c == 0) a = coef(rng), b = coef(rng), c = coef(rng);
  return LinearForm(Field::rationals(), a, b, c);
}

// (a) two independent routes to the JDT
inline Outcome oracle_equivalence(int trials, unsigned seed, std::vector<Computed>* sink = nullptr) {
  Outcome out;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int t = 0; t < trials; ++t) {
    Poly F = random_form(rng, deg(rng));
    LinearForm ell = random_linear(rng);
    Jdt a = jdt_from_matrix(jdt_matrix(rank_matrix(F, ell)));
    Jdt b = jordan_oracle(F, ell);
    ++out.checked;
    if (a != b) out.fail("F=" + F.to_string() + " ell=" + ell.to_string() + ": " + to_notation(a) + " vs " + to_notation(b));
    if (sink) sink->push_back({a, F.degree(), "random " + F.to_string()});
  }
  return out;
}

struct TableJ {
  std::string table;
  std::vector<int> js;
};

inline const std::vector<TableJ>& table_degrees() {
  static const std::vector<TableJ> v = {{"T7", {5, 6, 7, 8, 9, 10}}, {"T8", {7, 8, 9, 10}},
                                        {"T9", {4}},                 {"T10", {5}},
                                        {"T11", {8, 9, 10, 11}},     {"T12", {8, 9, 10, 11}}};
  return v;
}

inline std::vector<Computed> table_jdts() {
  std::vector<Computed> out;
  for (const auto& tj : table_degrees()) {
    const Table& t = table(tj.table);
    for (int j : tj.js)
      for (const auto& e : t.entries)
        if (applies(t, e, j)) out.push_back({computed_jdt(e, j), j, t.id + " #" + e.id + " j=" + std::to_string(j)});
  }
  return out;
}

// (b) and (d)
inline Outcome symmetry_and_initial_degrees(const std::vector<Computed>& all) {
  Outcome out;
  for (const auto& c : all) {
    ++out.checked;
    if (!check_symmetry(c.jdt, c.j)) out.fail("not symmetric: " + c.origin + " " + to_notation(c.jdt));
    if (!is_codim2_o_sequence(initial_hilbert(c.jdt)))
      out.fail("initial degrees not an O-sequence: " + c.origin + " " + to_notation(c.jdt));
  }
  return out;
}

inline std::vector<EnumSpec> enumeration_specs() {
  return {EnumSpec::codim3(3, 3), EnumSpec::codim3(3, 5), EnumSpec::codim3(4, 3), EnumSpec::codim3(4, 5),
          EnumSpec::codim3(5, 3), EnumSpec::codim3(5, 4), EnumSpec::codim3(5, 5), EnumSpec::codim3(6, 3),
          EnumSpec::codim3(6, 4), EnumSpec::codim3(6, 5), EnumSpec::codim3(6, 6), EnumSpec::codim2(2, 3),
          EnumSpec::codim2(3, 3)};
}

// (c), plus symmetry of every potential JDT
inline Outcome enumeration_round_trip() {
  Outcome out;
  for (const auto& spec : enumeration_specs())
    for (const auto& r : enumerate(spec)) {
      ++out.checked;
      Jdt S = jdt_from_matrix(jdt_matrix(r.matrix));
      if (S != r.jdt) out.fail("record jdt mismatch " + to_notation(S));
      if (rank_matrix_from_jdt(S, spec.j()) != r.matrix) out.fail("round trip failed for " + to_notation(S));
      if (!check_symmetry(S, spec.j())) out.fail("enumerated jdt not symmetric " + to_notation(S));
    }
  return out;
}

inline bool in_window(const Part& p, int j) {
  const int lo = j - 1 - p.degree;  // nu=0: j-1..j+1, nu=1: j-2..j, nu=2: j-3..j-1
  return p.degree <= 2 && p.length >= lo && p.length <= lo + 2;
}

// (e) and (f)
inline Outcome lengthening_structure() {
  Outcome out;
  for (const std::string id : {"T7", "T8", "T11", "T12"}) {
    const Table& t = table(id);
    const int b0 = t.s == 3 ? 1 : 2;
    for (int j = t.j_min; j <= t.j_max; ++j) {
      const int k = t.k_of(j);
      for (const auto& e : t.entries) {
        if (!applies(t, e, j)) continue;
        Jdt S = computed_jdt(e, j);
        PartClassification c;
        try {
          c = classify_parts(S, j, t.s);
        } catch (const std::exception& ex) {
          out.fail(id + " #" + e.id + ": " + ex.what());
          continue;
        }
        for (const auto& p : c.lengthening)
          if (!in_window(p, j))
            out.fail(id + " #" + e.id + ": lengthening part " + std::to_string(p.length) + "_" + std::to_string(p.degree) +
                     " outside its window");
        if (k < t.s + 1) continue;
        RankMatrix M = rank_matrix_from_jdt(S, j);
        IntSeq r{M.at(b0, b0)};
        for (int i = 1; i <= t.s; ++i) r.push_back(M.at(b0, b0 + i));
        DeltaSeq delta = delta_of(r);
        int size = 0;
        for (int x : delta) size += x;
        ++out.checked;
        if (c.repeated_widths() != conjugate(as_partition(delta)))
          out.fail(id + " #" + e.id + " j=" + std::to_string(j) + ": repeated widths differ from the conjugate of delta");
        if (int(c.lengthening.size()) != t.s - size)
          out.fail(id + " #" + e.id + " j=" + std::to_string(j) + ": lengthening count " +
                   std::to_string(c.lengthening.size()) + " != " + std::to_string(t.s - size));
      }
    }
  }
  return out;
}

// (g)
inline Outcome actual_within_potential() {
  Outcome out;
  struct Case {
    std::vector<std::string> tables;
    int s, j;
    bool equal;
  };
  const std::vector<Case> cases = {{{"T7"}, 3, 6, true},          {{"T7"}, 3, 9, true},
                                   {{"T8"}, 4, 7, true},          {{"T8"}, 4, 9, true},
                                   {{"T11", "T12"}, 5, 8, true},  {{"T11", "T12"}, 5, 10, true}};
  for (const auto& cs : cases) {
    const Table& first = table(cs.tables.front());
    const int k = first.k_of(cs.j);
    std::set<Jdt> potential;
    for (const auto& r : enumerate(EnumSpec::codim3(cs.s, k))) potential.insert(r.jdt);
    std::set<Jdt> actual;
    for (const auto& id : cs.tables) {
      const Table& t = table(id);
      for (const auto& e : t.entries)
        if (applies(t, e, cs.j)) {
          Jdt S = computed_jdt(e, cs.j);
          actual.insert(S);
          ++out.checked;
          if (!potential.count(S)) out.fail(id + " #" + e.id + " not in the enumeration: " + to_notation(S));
        }
    }
    if (cs.equal && actual != potential) {
      std::ostringstream os;
      os << "s=" << cs.s << " j=" << cs.j << ": " << actual.size() << " actual vs " << potential.size() << " potential";
      out.fail(os.str());
    }
  }
  // below the family range: the identified set at s=5, k=3 against the enumeration
  std::set<Jdt> potential;
  for (const auto& r : enumerate(EnumSpec::codim3(5, 3))) potential.insert(r.jdt);
  auto small = small_k_identifications(5, 3);
  std::set<Jdt> actual(small.jdts.begin(), small.jdts.end());
  out.checked += int(actual.size());
  if (actual != potential) out.fail("s=5 k=3: identified set differs from the enumeration");
  return out;
}

}  // namespace props
