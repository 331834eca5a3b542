#include "heg/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "heg/errors.hpp"

namespace heg {

using boost::multiprecision::cpp_int;

Field Field::rationals() { return Field(0); }

Field Field::prime(long p) {
  if (p < 2 || p >= (1L << 31))
    throw DomainError("BAD_FIELD", "characteristic out of range");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError("BAD_FIELD", "characteristic not prime");
  return Field(p);
}

Rational Field::reduce(const Rational& a) const {
  if (p_ == 0) return a;
  cpp_int num = numerator(a), den = denominator(a);
  cpp_int m = num % p_;
  if (m < 0) m += p_;
  if (den != 1) {
    cpp_int d = den % p_;
    if (d < 0) d += p_;
    if (d == 0) throw DomainError("DIV_ZERO", "denominator vanishes mod p");
    // modular inverse by Fermat
    cpp_int inv = 1, base = d, exp = p_ - 2;
    while (exp > 0) {
      if (exp % 2 == 1) inv = inv * base % p_;
      base = base * base % p_;
      exp /= 2;
    }
    m = m * inv % p_;
  }
  return Rational(m);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  return reduce(a + b);
}
Rational Field::sub(const Rational& a, const Rational& b) const {
  return reduce(a - b);
}
Rational Field::mul(const Rational& a, const Rational& b) const {
  return reduce(a * b);
}
Rational Field::neg(const Rational& a) const { return reduce(-a); }

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw DomainError("DIV_ZERO", "division by zero");
  return reduce(1 / a);
}

Rational Field::div(const Rational& a, const Rational& b) const {
  if (b == 0) throw DomainError("DIV_ZERO", "division by zero");
  return reduce(a / b);
}

std::string Field::to_string(const Rational& a) const {
  if (p_ != 0) return numerator(a).str();
  if (denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

Rational Field::parse(const std::string& text) const {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return reduce(Rational(cpp_int(text)));
    cpp_int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw DomainError("DIV_ZERO", "zero denominator");
    return reduce(Rational(num, den));
  } catch (const std::exception& e) {
    throw DomainError("PARSE", "bad scalar '" + text + "'");
  }
}

std::string Field::spec() const {
  return p_ == 0 ? "Q" : "F:" + std::to_string(p_);
}

Field Field::parse_spec(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.rfind("F:", 0) == 0) return prime(std::stol(spec.substr(2)));
  throw DomainError("PARSE", "bad field spec '" + spec + "'");
}

std::vector<std::vector<Rational>> invert_matrix(
    const Field& field, std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && field.is_zero(m[pivot][col])) ++pivot;
    if (pivot == n)
      throw DomainError("DEGENERATE_TRACE", "matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = field.inv(m[col][col]);
    for (size_t j = 0; j < n; ++j) {
      m[col][j] = field.mul(m[col][j], scale);
      inv[col][j] = field.mul(inv[col][j], scale);
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || field.is_zero(m[row][col])) continue;
      const Rational factor = m[row][col];
      for (size_t j = 0; j < n; ++j) {
        m[row][j] = field.sub(m[row][j], field.mul(factor, m[col][j]));
        inv[row][j] = field.sub(inv[row][j], field.mul(factor, inv[col][j]));
      }
    }
  }
  return inv;
}

}  // namespace heg
