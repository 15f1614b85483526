#pragma once

#include <vector>

#include "gorjdt/linalg.hpp"
#include "gorjdt/poly.hpp"

namespace gorjdt {

using IntSeq = std::vector<int>;

// R_d -> S_{j-d}, h |-> h o F. Rows follow monomial_basis(d), columns monomial_basis(j-d).
Matrix catalecticant(const Poly& F, int d);
IntSeq hilbert_function(const Poly& F);
std::vector<Poly> ann_graded_basis(const Poly& F, int d);

// Homogeneous ideal of R given by generators.
class GradedIdeal {
 public:
  GradedIdeal(Field field, std::vector<Poly> generators, int top_degree);
  static GradedIdeal parse(const std::vector<std::string>& generators, Field field, int top_degree);
  // Ann(F) generated by its graded pieces in degrees 1..deg F + 1.
  static GradedIdeal annihilator(const Poly& F);

  const Field& field() const { return field_; }
  const std::vector<Poly>& generators() const { return generators_; }
  int top_degree() const { return top_degree_; }

 private:
  Field field_;
  std::vector<Poly> generators_;
  int top_degree_;
};

// Echelonized spanning set of I_d.
std::vector<Poly> ideal_graded_basis(const GradedIdeal& I, int d);
Echelon ideal_echelon(const GradedIdeal& I, int d);
IntSeq quotient_hilbert(const GradedIdeal& I, int j);
IntSeq socle_dimension(const GradedIdeal& I, int j);

}  // namespace gorjdt
