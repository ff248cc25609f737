#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace pavoid {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, coefficients ascending by degree.
// Canonical: no trailing zero coefficient; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(int degree, BigInt coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero beyond the stored range.
  const BigInt& coeff(int i) const;
  const BigInt& leading() const;
  BigInt at_zero() const { return coeffs_.empty() ? BigInt(0) : coeffs_[0]; }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& c);

  // gcd of all coefficients, non-negative; 0 for the zero polynomial.
  BigInt content() const;
  // Divides every coefficient; division must be exact.
  IntPolynomial divided_by_const(const BigInt& c) const;
  // x^s * p.
  IntPolynomial shifted(int s) const;

  bool operator==(const IntPolynomial&) const = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Exact quotient a / b; throws if b is zero or the division is not exact.
IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd via the primitive pseudo-remainder sequence; result has
// positive leading coefficient, gcd(0, 0) = 0.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

BigInt int_gcd(BigInt a, BigInt b);

}  // namespace pavoid
