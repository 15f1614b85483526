#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gorjdt/field.hpp"

namespace gorjdt {

// Ring side R = k[x,y,z] acts on the dual side S = k[X,Y,Z] by contraction.
enum class Side { Ring, Dual };

// Exponents of (x, y, z).
struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  Monomial() = default;
  Monomial(int ex, int ey, int ez) : e{ex, ey, ez} {}

  int degree() const { return e[0] + e[1] + e[2]; }
  bool divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }
  Monomial operator*(const Monomial& m) const {
    return {e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]};
  }
  Monomial operator/(const Monomial& m) const {
    return {e[0] - m.e[0], e[1] - m.e[1], e[2] - m.e[2]};
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded reverse lexicographic order with z > y > x.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(b, a); }
};

// All monomials of degree d, largest first.
std::vector<Monomial> monomial_basis(int d);
// Position of m inside monomial_basis(m.degree()).
std::size_t monomial_index(const Monomial& m);
inline std::size_t basis_size(int d) { return d < 0 ? 0 : std::size_t(d + 1) * std::size_t(d + 2) / 2; }

std::string monomial_to_string(const Monomial& m, Side side);

class Poly {
 public:
  using TermMap = std::map<Monomial, Coeff, MonomialGreater>;

  Poly(Field field, Side side, int degree);

  static Poly zero(Field field, Side side, int degree) { return Poly(field, side, degree); }
  static Poly monomial(Field field, Side side, const Monomial& m, const Coeff& c = 1);
  static Poly from_dense(Field field, Side side, int degree, const std::vector<Coeff>& v);

  const Field& field() const { return field_; }
  Side side() const { return side_; }
  // Zero polynomials keep the degree they were produced in.
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Coeff coefficient(const Monomial& m) const;
  std::vector<Coeff> to_dense() const;

  void add_term(const Monomial& m, const Coeff& c);

  Poly operator-() const;
  Poly scaled(const Coeff& c) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  Field field_;
  Side side_;
  int degree_;
  TermMap terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly pow(const Poly& p, int e);
inline Poly operator+(const Poly& p, const Poly& q) { return add(p, q); }
inline Poly operator-(const Poly& p, const Poly& q) { return sub(p, q); }
inline Poly operator*(const Poly& p, const Poly& q) { return mul(p, q); }

// h in R acting on F in S.
Poly contract(const Poly& h, const Poly& F);

Poly parse_poly(std::string_view text, Side side, Field field = Field::rationals());

class LinearForm {
 public:
  LinearForm(Field field, Coeff a, Coeff b, Coeff c);
  static LinearForm from_poly(const Poly& p);

  const Field& field() const { return field_; }
  const std::array<Coeff, 3>& coefficients() const { return c_; }
  Poly to_poly(Side side = Side::Ring) const;
  std::string to_string() const { return to_poly().to_string(); }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  Field field_;
  std::array<Coeff, 3> c_;
};

LinearForm parse_linear_form(std::string_view text, Field field = Field::rationals());

// Sum of all degree-d monomials in the variables where L has coefficient 1.
Poly divided_power(const LinearForm& L, int d, Side side = Side::Dual);

}  // namespace gorjdt
