#include "pavoid/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "pavoid/errors.hpp"

namespace pavoid {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.assign(coeffs.begin(), coeffs.end());
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
  if (degree < 0) throw DomainError("monomial degree must be nonnegative");
  std::vector<BigInt> c(static_cast<size_t>(degree) + 1, 0);
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> c(coeffs_);
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const BigInt& c) {
  std::vector<BigInt> r(a.coeffs_);
  for (auto& v : r) v *= c;
  return IntPolynomial(std::move(r));
}

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& v : coeffs_) {
    g = int_gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::divided_by_const(const BigInt& c) const {
  if (c == 0) throw DomainError("division of polynomial by zero constant");
  std::vector<BigInt> r(coeffs_);
  for (auto& v : r) {
    if (v % c != 0) throw DomainError("inexact constant division of polynomial");
    v /= c;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted(int s) const {
  if (s < 0) throw DomainError("negative shift");
  if (is_zero() || s == 0) return *this;
  std::vector<BigInt> c(coeffs_.size() + static_cast<size_t>(s), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<size_t>(s)] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigInt& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      if (mag != 1) out << "*";
      out << var;
      if (i >= 2) out << "^" << i;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.str();
}

IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  std::vector<BigInt> rem(a.coeffs());
  std::vector<BigInt> q(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
  const auto& bc = b.coeffs();
  for (int d = a.degree() - b.degree(); d >= 0; --d) {
    BigInt top = rem[static_cast<size_t>(d + b.degree())];
    if (top % b.leading() != 0) throw DomainError("inexact polynomial division");
    BigInt f = top / b.leading();
    q[static_cast<size_t>(d)] = f;
    if (f != 0)
      for (size_t i = 0; i < bc.size(); ++i) rem[static_cast<size_t>(d) + i] -= f * bc[i];
  }
  for (const auto& v : rem)
    if (v != 0) throw DomainError("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  IntPolynomial pp = p.divided_by_const(p.content());
  if (pp.leading() < 0) return -pp;
  return pp;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0); only its primitive part
// is used, so the lc(b)^e scaling is left implicit.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int s = a.degree() - b.degree();
    a = a * b.leading() - b.shifted(s) * a.leading();
  }
  return a;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace pavoid
