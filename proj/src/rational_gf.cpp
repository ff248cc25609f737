#include "pavoid/rational_gf.hpp"

#include <limits>
#include <ostream>
#include <utility>

#include "pavoid/errors.hpp"

namespace pavoid {

RationalGF::RationalGF(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator in generating function");
  if (num_.is_zero()) {
    den_ = IntPolynomial{1};
  } else {
    IntPolynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = poly_exact_div(num_, g);
      den_ = poly_exact_div(den_, g);
    }
    BigInt c = int_gcd(num_.content(), den_.content());
    if (c > 1) {
      num_ = num_.divided_by_const(c);
      den_ = den_.divided_by_const(c);
    }
  }
  if (den_.at_zero() == 0)
    throw DomainError("denominator vanishes at 0, no power series expansion");
  if (den_.at_zero() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalGF RationalGF::operator-() const { return RationalGF(-num_, den_); }

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator/(const RationalGF& a, const RationalGF& b) {
  if (b.is_zero()) throw DomainError("division by zero generating function");
  return RationalGF(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalGF::str(const std::string& var) const {
  if (den_ == IntPolynomial{1}) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalGF& g) {
  return os << g.str();
}

std::vector<BigInt> expand(const RationalGF& gf, int n) {
  if (n < 0) throw DomainError("expansion length must be nonnegative");
  const BigInt d0 = gf.den().at_zero();
  const int dd = gf.den().degree();
  std::vector<BigInt> a;
  a.reserve(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    BigInt acc = gf.num().coeff(m);
    for (int j = 1; j <= dd && j <= m; ++j)
      acc -= gf.den().coeff(j) * a[static_cast<size_t>(m - j)];
    if (acc % d0 != 0) throw DomainError("series coefficient is not an integer");
    a.push_back(acc / d0);
  }
  return a;
}

bool recurrence_check(const RationalGF& gf, const std::vector<BigInt>& seq) {
  if (seq.empty()) return true;
  return expand(gf, static_cast<int>(seq.size()) - 1) == seq;
}

RationalGF chain_solve(const std::vector<ChainStep>& steps, const RationalGF& h) {
  RationalGF s = h;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s = it->A * s + it->B;
  return s;
}

namespace {

RationalGF det_first_column(const std::vector<std::vector<RationalGF>>& m) {
  const size_t r = m.size();
  if (r == 1) return m[0][0];
  RationalGF acc = 0;
  for (size_t i = 0; i < r; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<RationalGF>> minor;
    minor.reserve(r - 1);
    for (size_t p = 0; p < r; ++p) {
      if (p == i) continue;
      minor.emplace_back(m[p].begin() + 1, m[p].end());
    }
    RationalGF term = m[i][0] * det_first_column(minor);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

RationalGF chain_det(const std::vector<ChainStep>& steps, const RationalGF& h) {
  const size_t r = steps.size() + 1;
  std::vector<std::vector<RationalGF>> m(r, std::vector<RationalGF>(r, RationalGF(0)));
  for (size_t i = 0; i + 1 < r; ++i) {
    m[i][0] = steps[i].B;
    m[i][i + 1] = -steps[i].A;
  }
  m[r - 1][0] = h;
  for (size_t i = 1; i < r; ++i) m[i][i] = 1;
  return det_first_column(m);
}

namespace {

IntPolynomial den_two_step(int d) {
  // 1 - 2x + x^d
  IntPolynomial p{1, -2};
  return p + IntPolynomial::monomial(d);
}

}  // namespace

RationalGF build_f(int d) {
  if (d < 1) throw DomainError("build_f requires d >= 1");
  return RationalGF(IntPolynomial{1, -1}, den_two_step(d));
}

RationalGF build_g(int d) {
  if (d < 1) throw DomainError("build_g requires d >= 1");
  return RationalGF(IntPolynomial::monomial(d), den_two_step(d));
}

RationalGF build_u(int i) {
  switch (i) {
    case 1:
      return RationalGF(1);
    case 2:
      return RationalGF(IntPolynomial{1}, IntPolynomial{1, -1});
    default:
      throw DomainError("build_u defined only for i in {1, 2}");
  }
}

RationalGF build_v(int i) {
  switch (i) {
    case 1:
      return RationalGF(IntPolynomial{0, 1, 1});
    case 2:
      return RationalGF(IntPolynomial{0, 0, 1}, IntPolynomial{1, -1});
    default:
      throw DomainError("build_v defined only for i in {1, 2}");
  }
}

namespace {

std::vector<long long> poly_to_i64(const IntPolynomial& p) {
  std::vector<long long> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c < std::numeric_limits<long long>::min() || c > std::numeric_limits<long long>::max())
      throw DomainError("coefficient too large for JSON serialization");
    out.push_back(static_cast<long long>(c));
  }
  return out;
}

IntPolynomial poly_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw ParseError("polynomial JSON must be an array");
  std::vector<BigInt> c;
  c.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw ParseError("polynomial coefficients must be integers");
    c.emplace_back(v.get<long long>());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

nlohmann::json gf_to_json(const RationalGF& gf) {
  return nlohmann::json{{"num", poly_to_i64(gf.num())}, {"den", poly_to_i64(gf.den())}};
}

RationalGF gf_from_json(const nlohmann::json& j) {
  if (!j.contains("num") || !j.contains("den"))
    throw ParseError("generating function JSON needs \"num\" and \"den\"");
  return RationalGF(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

}  // namespace pavoid
