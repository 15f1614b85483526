#include "gorjdt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gorjdt/errors.hpp"

namespace gorjdt {

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // reverse lex: the smaller variable decides, a larger power of it makes the monomial smaller
  if (a.e[0] != b.e[0]) return a.e[0] > b.e[0];
  if (a.e[1] != b.e[1]) return a.e[1] > b.e[1];
  return false;
}

std::vector<Monomial> monomial_basis(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(basis_size(d));
  for (int ex = 0; ex <= d; ++ex)
    for (int ey = 0; ey <= d - ex; ++ey) out.emplace_back(ex, ey, d - ex - ey);
  return out;
}

std::size_t monomial_index(const Monomial& m) {
  const std::size_t d = m.degree();
  const std::size_t ex = m.e[0];
  return ex * (d + 1) - (ex * (ex + 1) / 2 - ex) + m.e[1];
}

std::string monomial_to_string(const Monomial& m, Side side) {
  static const char ring[] = {'x', 'y', 'z'};
  static const char dual[] = {'X', 'Y', 'Z'};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += side == Side::Ring ? ring[i] : dual[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

Poly::Poly(Field field, Side side, int degree) : field_(field), side_(side), degree_(degree) {}

Poly Poly::monomial(Field field, Side side, const Monomial& m, const Coeff& c) {
  Poly p(field, side, m.degree());
  p.add_term(m, c);
  return p;
}

Poly Poly::from_dense(Field field, Side side, int degree, const std::vector<Coeff>& v) {
  auto basis = monomial_basis(degree);
  if (v.size() != basis.size()) throw DegreeMismatch("dense vector length does not match degree");
  Poly p(field, side, degree);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.add_term(basis[i], v[i]);
  return p;
}

Coeff Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

std::vector<Coeff> Poly::to_dense() const {
  std::vector<Coeff> v(basis_size(degree_));
  for (const auto& [m, c] : terms_) v[monomial_index(m)] = c;
  return v;
}

void Poly::add_term(const Monomial& m, const Coeff& c) {
  if (terms_.empty() && m.degree() != degree_) degree_ = m.degree();
  if (m.degree() != degree_) throw NonHomogeneous("term degree " + std::to_string(m.degree()) +
                                                  " differs from " + std::to_string(degree_));
  Coeff v = field_.normalize(c);
  if (v == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, v);
    return;
  }
  it->second = field_.add(it->second, v);
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const Coeff& c) const {
  Poly out(field_, side_, degree_);
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coeff a = c;
    bool negative = a < 0;
    if (negative) a = -a;
    if (negative)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    bool constant = m.degree() == 0;
    if (a != 1 || constant) {
      out += a.get_str();
      if (!constant) out += '*';
    }
    if (!constant) out += monomial_to_string(m, side_);
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_ || a.side_ != b.side_) return false;
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

static void check_compatible(const Poly& p, const Poly& q) {
  if (p.field() != q.field()) throw FieldMismatch(p.field().name() + " vs " + q.field().name());
  if (p.side() != q.side()) throw SideMismatch("ring and dual polynomials mixed");
}

Poly add(const Poly& p, const Poly& q) {
  check_compatible(p, q);
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot add degree " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  Poly out = p;
  for (const auto& [m, c] : q.terms()) out.add_term(m, c);
  return out;
}

Poly sub(const Poly& p, const Poly& q) { return add(p, -q); }

Poly mul(const Poly& p, const Poly& q) {
  check_compatible(p, q);
  Poly out(p.field(), p.side(), p.degree() + q.degree());
  for (const auto& [m1, c1] : p.terms())
    for (const auto& [m2, c2] : q.terms()) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw DegreeOutOfRange("negative power");
  Poly out = Poly::monomial(p.field(), p.side(), Monomial());
  for (int i = 0; i < e; ++i) out = mul(out, p);
  return out;
}

Poly contract(const Poly& h, const Poly& F) {
  if (h.field() != F.field()) throw FieldMismatch(h.field().name() + " vs " + F.field().name());
  if (h.side() != Side::Ring || F.side() != Side::Dual)
    throw SideMismatch("contraction needs a ring operator and a dual form");
  Poly out(F.field(), Side::Dual, F.degree() - h.degree());
  for (const auto& [a, c1] : h.terms())
    for (const auto& [b, c2] : F.terms())
      if (a.divides(b)) out.add_term(b / a, c1 * c2);
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Side side, Field field)
      : s_(text), side_(side), field_(field) {}

  Poly run() {
    std::vector<std::pair<Monomial, Coeff>> terms;
    skip();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      Coeff sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [m, c] = term();
      terms.emplace_back(m, sign * c);
      skip();
    }
    int degree = terms.front().first.degree();
    Poly p(field_, side_, degree);
    for (const auto& [m, c] : terms) {
      if (m.degree() != degree)
        throw NonHomogeneous("term " + monomial_to_string(m, side_) + " has degree " +
                             std::to_string(m.degree()) + ", expected " + std::to_string(degree));
      try {
        p.add_term(m, c);
      } catch (const UnsupportedCoefficient&) {
        throw UnsupportedCoefficient("coefficient not defined over " + field_.name());
      }
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer", pos_);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  int var_index(char c, std::size_t at) const {
    const char* names = side_ == Side::Ring ? "xyz" : "XYZ";
    const char* other = side_ == Side::Ring ? "XYZ" : "xyz";
    for (int i = 0; i < 3; ++i) {
      if (c == names[i]) return i;
      if (c == other[i])
        throw SyntaxError(std::string("variable '") + c + "' belongs to the other side", at);
    }
    return -1;
  }

  std::pair<Monomial, Coeff> term() {
    Coeff c = 1;
    bool have = false;
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        den = integer();
        if (den == 0) throw SyntaxError("zero denominator", pos_);
      }
      c = Coeff(num, den);
      c.canonicalize();
      have = true;
    }
    Monomial m;
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      }
      int v = var_index(peek(), pos_);
      if (v < 0) break;
      ++pos_;
      skip();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        e = static_cast<int>(integer().get_si());
      }
      m.e[v] += e;
      have = true;
    }
    if (!have) throw SyntaxError("expected a term", pos_);
    return {m, c};
  }

  std::string_view s_;
  Side side_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, Side side, Field field) {
  return PolyParser(text, side, field).run();
}

LinearForm::LinearForm(Field field, Coeff a, Coeff b, Coeff c)
    : field_(field), c_{field.normalize(a), field.normalize(b), field.normalize(c)} {
  if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0) throw ZeroLinearForm("linear form is zero");
}

LinearForm LinearForm::from_poly(const Poly& p) {
  if (p.is_zero()) throw ZeroLinearForm("linear form is zero");
  if (p.degree() != 1) throw DegreeMismatch("linear form must have degree 1");
  return LinearForm(p.field(), p.coefficient({1, 0, 0}), p.coefficient({0, 1, 0}),
                    p.coefficient({0, 0, 1}));
}

Poly LinearForm::to_poly(Side side) const {
  Poly p(field_, side, 1);
  p.add_term({1, 0, 0}, c_[0]);
  p.add_term({0, 1, 0}, c_[1]);
  p.add_term({0, 0, 1}, c_[2]);
  return p;
}

LinearForm parse_linear_form(std::string_view text, Field field) {
  return LinearForm::from_poly(parse_poly(text, Side::Ring, field));
}

Poly divided_power(const LinearForm& L, int d, Side side) {
  if (d < 0) throw DegreeOutOfRange("negative divided power");
  const auto& c = L.coefficients();
  for (const auto& v : c)
    if (v != 0 && v != 1) throw UnsupportedCoefficient("divided power needs 0/1 coefficients");
  Poly out(L.field(), side, d);
  for (const auto& m : monomial_basis(d)) {
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      if (m.e[i] > 0 && c[i] == 0) ok = false;
    if (ok) out.add_term(m, 1);
  }
  return out;
}

}  // namespace gorjdt
