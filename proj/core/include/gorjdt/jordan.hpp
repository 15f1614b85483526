#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorjdt/apolarity.hpp"

namespace gorjdt {

// Upper-triangular (j+1)x(j+1) integer matrix; entries below the diagonal are 0.
class TriMatrix {
 public:
  TriMatrix() = default;
  explicit TriMatrix(int size) : n_(size), a_(std::size_t(size) * size, 0) {}
  static TriMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int socle_degree() const { return n_ - 1; }
  // Out-of-range reads give 0.
  int at(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || v < u) return 0;
    return a_[std::size_t(u) * n_ + v];
  }
  void set(int u, int v, int x) { a_[std::size_t(u) * n_ + v] = x; }
  IntSeq diagonal(int a) const;
  std::vector<int> flatten() const;
  std::string to_string() const;

  friend bool operator==(const TriMatrix& x, const TriMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
  friend bool operator<(const TriMatrix& x, const TriMatrix& y) {
    return x.n_ != y.n_ ? x.n_ < y.n_ : x.a_ < y.a_;
  }

 private:
  int n_ = 0;
  std::vector<int> a_;
};

using RankMatrix = TriMatrix;
using JdtMatrix = TriMatrix;

struct Part {
  int length;
  int degree;
  friend bool operator==(const Part& a, const Part& b) {
    return a.length == b.length && a.degree == b.degree;
  }
  // canonical order: degree ascending, length descending
  friend bool operator<(const Part& a, const Part& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.length > b.length;
  }
};

class Jdt {
 public:
  Jdt() = default;
  explicit Jdt(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  int total_length() const;
  // multiplicity of (p, nu)
  int count(int length, int degree) const;
  std::map<std::pair<int, int>, int> counts() const;
  IntSeq occupancy() const;

  friend bool operator==(const Jdt& a, const Jdt& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Jdt& a, const Jdt& b) { return !(a == b); }
  friend bool operator<(const Jdt& a, const Jdt& b);

 private:
  std::vector<Part> parts_;
};

using JordanPartition = std::vector<int>;

RankMatrix rank_matrix(const Poly& F, const LinearForm& ell);
RankMatrix rank_matrix_from_ideal(const GradedIdeal& I, const LinearForm& ell, int j);
JdtMatrix jdt_matrix(const RankMatrix& M);
Jdt jdt_from_matrix(const JdtMatrix& J);
RankMatrix rank_matrix_from_jdt(const Jdt& jdt, int j);
Jdt jdt(const Poly& F, const LinearForm& ell);

JordanPartition jordan_type(const Jdt& jdt);
bool is_weak_lefschetz(const Jdt& jdt, const IntSeq& T);
bool is_strong_lefschetz(const Jdt& jdt, const IntSeq& T);
bool check_symmetry(const Jdt& jdt, int j);
IntSeq initial_hilbert(const Jdt& jdt);

// Independent route: builds an explicit graded Jordan basis and verifies it.
Jdt jordan_oracle(const Poly& F, const LinearForm& ell);
Jdt jordan_oracle(const GradedIdeal& I, const LinearForm& ell, int j);

struct Ladder {
  int width;
  int from;
  int to;
  friend bool operator==(const Ladder& a, const Ladder& b) {
    return a.width == b.width && a.from == b.from && a.to == b.to;
  }
};

struct PartClassification {
  std::vector<Part> lengthening;
  std::vector<Ladder> repeated;
  std::vector<Part> sporadic;
  // widths of the repeated ladders, decreasing
  std::vector<int> repeated_widths() const;
};

PartClassification classify_parts(const Jdt& jdt, int j, int s);

// Notation: p_nu, (item)^m, w↑_a^b, p_{a,b,...}; integer expressions may use j when bound.
std::string to_notation(const Jdt& jdt);
Jdt parse_jdt(std::string_view text, std::optional<int> j = std::nullopt);

}  // namespace gorjdt
