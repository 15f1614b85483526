#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gorjdt {

using Coeff = mpq_class;

// Coefficient field: characteristic 0 is Q, otherwise F_p with residues kept in [0,p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Coeff normalize(const Coeff& v) const;
  Coeff add(const Coeff& a, const Coeff& b) const { return normalize(a + b); }
  Coeff sub(const Coeff& a, const Coeff& b) const { return normalize(a - b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return normalize(a * b); }
  Coeff neg(const Coeff& a) const { return normalize(-a); }
  Coeff inv(const Coeff& a) const;

  std::uint64_t residue(const Coeff& v) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace gorjdt
