#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pavoid/polynomial.hpp"

namespace pavoid {

// Rational generating function num/den held in canonical form:
//   gcd(num, den) = 1, gcd of all integer coefficients jointly 1, den(0) > 0.
// den(0) != 0 always, so the series expansion exists.
class RationalGF {
 public:
  RationalGF() : RationalGF(IntPolynomial{}, IntPolynomial{1}) {}
  RationalGF(long long c) : RationalGF(IntPolynomial{c}, IntPolynomial{1}) {}
  explicit RationalGF(IntPolynomial num) : RationalGF(std::move(num), IntPolynomial{1}) {}
  RationalGF(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalGF operator-() const;
  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator/(const RationalGF& a, const RationalGF& b);

  bool operator==(const RationalGF&) const = default;

  std::string str(const std::string& var = "x") const;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalGF& g);

// Maclaurin coefficients 0..n of gf, exact; throws DomainError if any
// coefficient is not an integer.
std::vector<BigInt> expand(const RationalGF& gf, int n);

// True iff seq matches the series of gf term by term from index 0.
bool recurrence_check(const RationalGF& gf, const std::vector<BigInt>& seq);

// One step of a back-substitution chain s_i = A_i s_{i+1} + B_i.
struct ChainStep {
  RationalGF A;
  RationalGF B;
};

// Solves the chain with terminal value s_r = h by direct back-substitution.
RationalGF chain_solve(const std::vector<ChainStep>& steps, const RationalGF& h);

// Same value via the determinant of the companion linear system: first
// column (B_1, ..., B_{r-1}, h), unit diagonal below row 1, superdiagonal
// -A_i.  Kept as an independent route; tests compare it against chain_solve.
RationalGF chain_det(const std::vector<ChainStep>& steps, const RationalGF& h);

// (1 - x)/(1 - 2x + x^d), d >= 1.
RationalGF build_f(int d);
// x^d/(1 - 2x + x^d), d >= 1.
RationalGF build_g(int d);
// u_1 = 1, u_2 = 1/(1 - x).
RationalGF build_u(int i);
// v_1 = x(1 + x), v_2 = x^2/(1 - x).
RationalGF build_v(int i);

nlohmann::json gf_to_json(const RationalGF& gf);
RationalGF gf_from_json(const nlohmann::json& j);

}  // namespace pavoid
