#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace heg {

using Rational = boost::multiprecision::cpp_rational;

// Exact scalar field: the rationals, or a prime field F_p with p < 2^31.
// Prime-field values are stored as reduced representatives 0..p-1.
class Field {
public:
  static Field rationals();
  static Field prime(long p);

  bool is_prime_field() const { return p_ != 0; }
  long characteristic() const { return p_; }

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(long n) const { return reduce(Rational(n)); }

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  // Throws DIV_ZERO.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const;

  bool is_zero(const Rational& a) const { return a == 0; }

  // "p/q" (or "n") for rationals, a residue 0..p-1 otherwise.
  std::string to_string(const Rational& a) const;
  // Accepts integers and "p/q" fractions; reduces mod p in a prime field.
  Rational parse(const std::string& text) const;

  std::string spec() const;  // "Q" or "F:<p>"
  static Field parse_spec(const std::string& spec);

  bool operator==(const Field&) const = default;

private:
  explicit Field(long p) : p_(p) {}
  Rational reduce(const Rational& a) const;

  long p_ = 0;  // 0 means the rationals
};

// Gauss-Jordan inverse of a square matrix (row-major). Throws
// DEGENERATE_TRACE when singular (callers use it on pairing matrices).
std::vector<std::vector<Rational>> invert_matrix(
    const Field& field, std::vector<std::vector<Rational>> m);

}  // namespace heg
