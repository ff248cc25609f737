#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "pavoid/errors.hpp"
#include "pavoid/polynomial.hpp"
#include "pavoid/rational_gf.hpp"
#include "pavoid/sequences.hpp"

using namespace pavoid;

namespace {

std::vector<RationalGF> sample_gfs() {
  return {RationalGF(0),
          RationalGF(1),
          RationalGF(IntPolynomial{0, 1}),
          RationalGF(IntPolynomial{1}, IntPolynomial{1, -1}),
          RationalGF(IntPolynomial{1, -1}, IntPolynomial{1, -2, 0, 1}),
          RationalGF(IntPolynomial{2, 3}, IntPolynomial{1, 0, -1}),
          RationalGF(IntPolynomial{-1, 0, 5}, IntPolynomial{3, 1})};
}

RationalGF random_gf(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);
  auto poly = [&](bool unit_at_zero) {
    std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    if (unit_at_zero && c[0] == 0) c[0] = 1;
    return IntPolynomial(std::move(c));
  };
  return RationalGF(poly(false), poly(true));
}

}  // namespace

TEST_CASE("polynomial canonical form") {
  CHECK(IntPolynomial{0, 0, 0} == IntPolynomial{});
  CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{2, 4, 6}.content() == 2);
  CHECK(IntPolynomial::monomial(3) == IntPolynomial{0, 0, 0, 1});
  CHECK((IntPolynomial{1, 1} * IntPolynomial{1, -1}) == IntPolynomial{1, 0, -1});
  CHECK(poly_gcd(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1}) ==
        IntPolynomial{-1, 1});
  CHECK(poly_exact_div(IntPolynomial{1, 0, -1}, IntPolynomial{1, 1}) ==
        IntPolynomial{1, -1});
  CHECK_THROWS_AS(poly_exact_div(IntPolynomial{1, 1}, IntPolynomial{2}),
                  DomainError);
  CHECK_THROWS_AS(poly_exact_div(IntPolynomial{1}, IntPolynomial{}), DomainError);
}

TEST_CASE("gf canonicalization") {
  // common factor cancelled: (1 - x)/(1 - x^2) = 1/(1 + x)
  RationalGF g(IntPolynomial{1, -1}, IntPolynomial{1, 0, -1});
  CHECK(g.num() == IntPolynomial{1});
  CHECK(g.den() == IntPolynomial{1, 1});
  // sign normalized so den(0) > 0
  RationalGF h(IntPolynomial{1}, IntPolynomial{-1, 2});
  CHECK(h.den().at_zero() > 0);
  CHECK(h == RationalGF(IntPolynomial{-1}, IntPolynomial{1, -2}));
  // joint content removed
  RationalGF s(IntPolynomial{2}, IntPolynomial{4, -2});
  CHECK(s == RationalGF(IntPolynomial{1}, IntPolynomial{2, -1}));
  // canonicalization is idempotent
  for (const auto& a : sample_gfs()) CHECK(RationalGF(a.num(), a.den()) == a);
  CHECK_THROWS_AS(RationalGF(IntPolynomial{1}, IntPolynomial{}), DomainError);
  CHECK_THROWS_AS(RationalGF(IntPolynomial{1}, IntPolynomial{0, 1}), DomainError);
}

TEST_CASE("field operations satisfy ring identities") {
  auto gs = sample_gfs();
  for (const auto& a : gs)
    for (const auto& b : gs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
      // division requires the divisor to be a power-series unit: b(0) != 0
      if (b.num().at_zero() != 0) CHECK((a / b) * b == a);
    }
  for (const auto& a : gs)
    for (const auto& b : gs)
      for (const auto& c : gs) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
  CHECK_THROWS_AS(RationalGF(1) / RationalGF(0), DomainError);
}

TEST_CASE("expansion") {
  RationalGF g(IntPolynomial{1}, IntPolynomial{1, -2});
  CHECK(expand(g, 4) == std::vector<BigInt>{1, 2, 4, 8, 16});
  CHECK(expand(RationalGF(0), 3) == std::vector<BigInt>{0, 0, 0, 0});
  // 1/(2 - x) has coefficient 1/2 at x^0
  CHECK_THROWS_AS(expand(RationalGF(IntPolynomial{1}, IntPolynomial{2, -1}), 2),
                  DomainError);
  // convolution: coefficients of a*b are the Cauchy product
  RationalGF a = build_f(3), b = build_f(4);
  auto ea = expand(a, 8), eb = expand(b, 8), eab = expand(a * b, 8);
  for (int k = 0; k <= 8; ++k) {
    BigInt s = 0;
    for (int i = 0; i <= k; ++i) s += ea[static_cast<size_t>(i)] * eb[static_cast<size_t>(k - i)];
    CHECK(eab[static_cast<size_t>(k)] == s);
  }
}

TEST_CASE("recurrence_check") {
  RationalGF f3 = build_f(3);
  CHECK(recurrence_check(f3, {1, 1, 2, 3, 5, 8, 13}));
  CHECK_FALSE(recurrence_check(f3, {1, 1, 2, 3, 6}));
  CHECK(recurrence_check(RationalGF(IntPolynomial{1}, IntPolynomial{1, -1}),
                         {1, 1, 1, 1}));
}

TEST_CASE("building blocks f, g, u, v") {
  CHECK(build_f(1) == RationalGF(1));
  CHECK(build_f(3) == RationalGF(IntPolynomial{1}, IntPolynomial{1, -1, -1}));
  CHECK(build_g(2) ==
        RationalGF(IntPolynomial{0, 0, 1}, IntPolynomial{1, -2, 1}));
  for (int n = 0; n <= 10; ++n) {
    CHECK(expand(build_f(4), n).back() == tribonacci_like(n));
    CHECK(expand(build_f(3), n).back() == fib_shifted(n));
  }
  CHECK(build_u(1) == RationalGF(1));
  CHECK(build_u(2) == RationalGF(IntPolynomial{1}, IntPolynomial{1, -1}));
  CHECK(expand(build_v(1), 2) == std::vector<BigInt>{0, 1, 1});
  CHECK(build_v(2) ==
        RationalGF(IntPolynomial{0, 0, 1}, IntPolynomial{1, -1}));
  CHECK_THROWS_AS(build_f(0), DomainError);
  CHECK_THROWS_AS(build_g(0), DomainError);
  CHECK_THROWS_AS(build_u(3), DomainError);
  CHECK_THROWS_AS(build_v(0), DomainError);
}

TEST_CASE("chain back-substitution matches the determinant route") {
  // the two-block shape (3, 1): steps (g_3, f_3), terminal f_1
  std::vector<ChainStep> steps{{build_g(3), build_f(3)}};
  RationalGF want(IntPolynomial{1, -1, 0, 1}, IntPolynomial{1, -2, 0, 1});
  CHECK(chain_solve(steps, build_f(1)) == want);
  CHECK(chain_det(steps, build_f(1)) == want);

  std::mt19937 rng(20240911);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> len(1, 7);
    std::vector<ChainStep> st;
    int r = len(rng);
    for (int i = 0; i < r; ++i) st.push_back({random_gf(rng), random_gf(rng)});
    RationalGF h = random_gf(rng);
    CHECK(chain_solve(st, h) == chain_det(st, h));
  }
  // empty chain: s_1 = h
  CHECK(chain_solve({}, build_f(4)) == build_f(4));
  CHECK(chain_det({}, build_f(4)) == build_f(4));
}

TEST_CASE("gf json round-trip") {
  for (const auto& g : sample_gfs()) CHECK(gf_from_json(gf_to_json(g)) == g);
  auto j = gf_to_json(build_f(3));
  CHECK(j["num"] == nlohmann::json::array({1}));
  CHECK(j["den"] == nlohmann::json::array({1, -1, -1}));
  CHECK_THROWS_AS(gf_from_json(nlohmann::json{{"num", {1}}}), ParseError);
}

TEST_CASE("reference sequences") {
  CHECK(catalan(10) == 16796);
  CHECK(fib_std(12) == 144);
  CHECK(fib_shifted(12) == 233);
  CHECK(tribonacci_like(11) == 504);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
  std::vector<BigInt> tri{1, 1, 2, 4, 7, 13, 24, 44};
  for (size_t i = 0; i < tri.size(); ++i) CHECK(tribonacci_like(static_cast<int>(i)) == tri[i]);
}

TEST_CASE("gf printing") {
  CHECK(build_f(3).str() == "(1)/(1 - x - x^2)");
  CHECK(RationalGF(IntPolynomial{1, -2, 2}, IntPolynomial{1, -3, 3, -1}).str() ==
        "(1 - 2*x + 2*x^2)/(1 - 3*x + 3*x^2 - x^3)");
  CHECK(RationalGF(7).str() == "7");
}
