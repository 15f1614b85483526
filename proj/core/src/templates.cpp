#include "gorjdt/errors.hpp"
#include "gorjdt/tables.hpp"
#include "int_expr.hpp"

namespace gorjdt {

namespace {

class TemplateParser {
 public:
  TemplateParser(std::string_view text, Side side, int j, Field field)
      : c_(text), side_(side), field_(field) {
    b_["j"] = j;
  }

  Poly run() {
    Poly p = expr();
    if (!c_.at_end()) throw SyntaxError("unexpected trailing input", c_.pos());
    return p;
  }

  // one comma-separated item at a time
  std::vector<Poly> run_list() {
    std::vector<Poly> out;
    do {
      out.push_back(expr());
    } while (c_.accept(','));
    if (!c_.at_end()) throw SyntaxError("unexpected trailing input", c_.pos());
    return out;
  }

 private:
  Poly constant(long v) const { return Poly::monomial(field_, side_, Monomial(), Coeff(v)); }

  static Poly plus(const Poly& a, const Poly& b, std::size_t at) {
    try {
      return add(a, b);
    } catch (const DegreeMismatch& e) {
      throw NonHomogeneous(std::string(e.what()) + " near position " + std::to_string(at));
    }
  }

  Poly expr() {
    std::optional<Poly> acc;
    bool first = true;
    for (;;) {
      long sign = 1;
      if (c_.accept('+')) {
      } else if (c_.accept('-')) {
        sign = -1;
      } else if (!first) {
        return *acc;
      }
      first = false;
      const std::size_t at = c_.pos();
      Poly t = term();
      if (sign < 0) t = -t;
      acc = acc ? plus(*acc, t, at) : t;
    }
  }

  bool starts_factor() {
    const char ch = c_.peek();
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || var_index(ch) >= 0 ||
           c_.text().substr(c_.pos()).starts_with("sum_");
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (c_.accept('*')) {
        acc = mul(acc, factor());
      } else if (starts_factor()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  int var_index(char ch) const {
    const char* names = side_ == Side::Ring ? "xyz" : "XYZ";
    for (int i = 0; i < 3; ++i)
      if (ch == names[i]) return i;
    return -1;
  }

  long int_expr() { return detail::IntExpr(c_, b_).expr(); }

  // INT | name | {expr}
  long exponent() {
    if (c_.accept('{')) {
      long v = int_expr();
      c_.expect('}');
      return v;
    }
    return detail::IntExpr(c_, b_).factor();
  }

  Poly power(const Poly& base, long e, std::size_t at) {
    if (e < 0) throw OutOfRange("negative exponent " + std::to_string(e) + " at position " + std::to_string(at));
    return pow(base, static_cast<int>(e));
  }

  Poly factor() {
    c_.skip();
    const std::size_t at = c_.pos();
    const char ch = c_.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return constant(c_.integer());
    if (c_.accept("sum_")) return sum();
    if (c_.accept('(')) {
      Poly inner = expr();
      c_.expect(')');
      if (c_.accept('^')) {
        if (c_.accept('[')) {
          const long e = int_expr();
          c_.expect(']');
          if (e < 0) throw OutOfRange("negative divided power at position " + std::to_string(at));
          if (inner.is_zero() || inner.degree() != 1)
            throw SyntaxError("divided power needs a linear form", at);
          const LinearForm L(field_, inner.coefficient({1, 0, 0}), inner.coefficient({0, 1, 0}),
                             inner.coefficient({0, 0, 1}));
          return divided_power(L, static_cast<int>(e), side_);
        }
        return power(inner, exponent(), at);
      }
      return inner;
    }
    const int v = var_index(ch);
    if (v < 0) throw SyntaxError(std::string("unexpected '") + ch + "'", at);
    c_.reset(c_.pos() + 1);
    long e = 1;
    if (c_.accept('^')) e = exponent();
    if (e < 0) throw OutOfRange("negative exponent " + std::to_string(e) + " at position " + std::to_string(at));
    Monomial m;
    m.e[v] = static_cast<int>(e);
    return Poly::monomial(field_, side_, m);
  }

  // sum_{i=lo}^{hi}(body)
  Poly sum() {
    c_.expect('{');
    c_.skip();
    const char var = c_.peek();
    if (!std::isalpha(static_cast<unsigned char>(var))) throw SyntaxError("expected summation index", c_.pos());
    c_.reset(c_.pos() + 1);
    c_.expect('=');
    const long lo = int_expr();
    c_.expect('}');
    c_.expect('^');
    const long hi = exponent();
    c_.skip();
    const std::size_t body = c_.pos();
    if (c_.peek() != '(') throw SyntaxError("expected '(' after summation bounds", c_.pos());
    // locate the end of the body once so empty sums can skip it
    std::size_t depth = 0, end = body;
    for (; end < c_.text().size(); ++end) {
      if (c_.text()[end] == '(') ++depth;
      if (c_.text()[end] == ')' && --depth == 0) break;
    }
    if (end >= c_.text().size()) throw SyntaxError("unbalanced parentheses", body);
    const std::string name(1, var);
    const bool had = b_.count(name) > 0;
    const long saved = had ? b_[name] : 0;
    std::optional<Poly> acc;
    for (long i = lo; i <= hi; ++i) {
      b_[name] = i;
      c_.reset(body);
      Poly t = factor();
      acc = acc ? plus(*acc, t, body) : t;
    }
    if (had)
      b_[name] = saved;
    else
      b_.erase(name);
    c_.reset(end + 1);
    if (!acc) return Poly::zero(field_, side_, 0);
    return *acc;
  }

  detail::Cursor c_;
  detail::Bindings b_;
  Side side_;
  Field field_;
};

}  // namespace

Poly eval_template(std::string_view text, Side side, int j, Field field) {
  return TemplateParser(text, side, j, field).run();
}

std::vector<Poly> eval_ideal_template(std::string_view text, int j, Field field) {
  return TemplateParser(text, Side::Ring, j, field).run_list();
}

}  // namespace gorjdt
