#include "gorjdt/field.hpp"

#include "gorjdt/errors.hpp"

namespace gorjdt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 0) return Field();
  if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
  // residues are multiplied as 64-bit products, so keep p below 2^31
  if (p >= (1ULL << 31)) throw InvalidField("characteristic too large");
  return Field(p);
}

static std::uint64_t mod_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::residue(const Coeff& v) const {
  if (p_ == 0) throw FieldMismatch("residue requested over Q");
  std::uint64_t num = mod_of(v.get_num(), p_);
  std::uint64_t den = mod_of(v.get_den(), p_);
  if (den == 0) throw UnsupportedCoefficient("denominator divisible by the characteristic");
  return num * pow_mod(den, p_ - 2, p_) % p_;
}

Coeff Field::normalize(const Coeff& v) const {
  if (p_ == 0) {
    Coeff r = v;
    r.canonicalize();
    return r;
  }
  return Coeff(static_cast<unsigned long>(residue(v)));
}

Coeff Field::inv(const Coeff& a) const {
  if (p_ == 0) {
    if (a == 0) throw std::domain_error("inverse of zero");
    return Coeff(1) / a;
  }
  std::uint64_t r = residue(a);
  if (r == 0) throw std::domain_error("inverse of zero");
  return Coeff(static_cast<unsigned long>(pow_mod(r, p_ - 2, p_)));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

}  // namespace gorjdt
