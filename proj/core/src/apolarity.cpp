#include "gorjdt/apolarity.hpp"

#include "gorjdt/errors.hpp"

namespace gorjdt {

Matrix catalecticant(const Poly& F, int d) {
  if (F.side() != Side::Dual) throw SideMismatch("catalecticant needs a dual form");
  const int j = F.degree();
  if (d < 0 || d > j) throw DegreeOutOfRange("catalecticant degree " + std::to_string(d));
  const auto rows = monomial_basis(d);
  Matrix m(F.field(), rows.size(), basis_size(j - d));
  for (const auto& [mono, c] : F.terms())
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].divides(mono)) m.at(r, monomial_index(mono / rows[r])) = c;
  return m;
}

IntSeq hilbert_function(const Poly& F) {
  if (F.is_zero()) throw ZeroPolynomial("Hilbert function of the zero form");
  IntSeq h;
  for (int d = 0; d <= F.degree(); ++d) h.push_back(static_cast<int>(rank(catalecticant(F, d))));
  return h;
}

std::vector<Poly> ann_graded_basis(const Poly& F, int d) {
  if (F.is_zero()) throw ZeroPolynomial("annihilator of the zero form");
  const int j = F.degree();
  if (d < 0 || d > j + 1) throw DegreeOutOfRange("annihilator degree " + std::to_string(d));
  std::vector<Poly> out;
  if (d == j + 1) {
    for (const auto& m : monomial_basis(d)) out.push_back(Poly::monomial(F.field(), Side::Ring, m));
    return out;
  }
  const auto kernel = left_kernel(catalecticant(F, d));
  Echelon e = row_echelon(F.field(), basis_size(d), kernel);
  for (const auto& row : e.rows) out.push_back(Poly::from_dense(F.field(), Side::Ring, d, row));
  return out;
}

GradedIdeal::GradedIdeal(Field field, std::vector<Poly> generators, int top_degree)
    : field_(field), top_degree_(top_degree) {
  for (auto& g : generators) {
    if (g.side() != Side::Ring) throw SideMismatch("ideal generators live in the ring");
    if (g.field() != field) throw FieldMismatch("generator over " + g.field().name());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GradedIdeal GradedIdeal::parse(const std::vector<std::string>& generators, Field field,
                               int top_degree) {
  std::vector<Poly> gens;
  for (const auto& g : generators) gens.push_back(parse_poly(g, Side::Ring, field));
  return GradedIdeal(field, std::move(gens), top_degree);
}

GradedIdeal GradedIdeal::annihilator(const Poly& F) {
  std::vector<Poly> gens;
  for (int d = 1; d <= F.degree() + 1; ++d)
    for (auto& g : ann_graded_basis(F, d)) gens.push_back(std::move(g));
  return GradedIdeal(F.field(), std::move(gens), F.degree() + 1);
}

Echelon ideal_echelon(const GradedIdeal& I, int d) {
  if (d < 0) throw DegreeOutOfRange("negative degree");
  std::vector<Vec> rows;
  for (const auto& g : I.generators()) {
    const int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& m : monomial_basis(e))
      rows.push_back(mul(Poly::monomial(I.field(), Side::Ring, m), g).to_dense());
  }
  return row_echelon(I.field(), basis_size(d), rows);
}

std::vector<Poly> ideal_graded_basis(const GradedIdeal& I, int d) {
  std::vector<Poly> out;
  for (const auto& row : ideal_echelon(I, d).rows)
    out.push_back(Poly::from_dense(I.field(), Side::Ring, d, row));
  return out;
}

IntSeq quotient_hilbert(const GradedIdeal& I, int j) {
  IntSeq h;
  for (int d = 0; d <= j; ++d)
    h.push_back(static_cast<int>(basis_size(d) - ideal_echelon(I, d).rows.size()));
  return h;
}

IntSeq socle_dimension(const GradedIdeal& I, int j) {
  if (j < 0) throw DegreeOutOfRange("negative socle degree");
  if (ideal_echelon(I, j + 1).rows.size() != basis_size(j + 1))
    throw NotArtinian("A_" + std::to_string(j + 1) + " is not zero");
  IntSeq out;
  const Field& k = I.field();
  Echelon next = ideal_echelon(I, 0);
  for (int d = 0; d <= j; ++d) {
    Echelon cur = std::move(next);
    next = ideal_echelon(I, d + 1);
    const auto basis = monomial_basis(d);
    std::vector<bool> pivot(basis.size(), false);
    for (auto p : cur.pivots) pivot[p] = true;
    // standard monomials span A_d; f is in the socle when x f, y f, z f vanish in A_{d+1}
    std::vector<Vec> images;
    std::size_t standard = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (pivot[i]) continue;
      ++standard;
      Vec row;
      for (int v = 0; v < 3; ++v) {
        Monomial var;
        var.e[v] = 1;
        Vec img(basis_size(d + 1), 0);
        img[monomial_index(basis[i] * var)] = 1;
        img = reduce(k, next, img);
        row.insert(row.end(), img.begin(), img.end());
      }
      images.push_back(std::move(row));
    }
    const std::size_t r = images.empty() ? 0 : rank_of_rows(k, images.front().size(), images);
    out.push_back(static_cast<int>(standard - r));
  }
  return out;
}

}  // namespace gorjdt
