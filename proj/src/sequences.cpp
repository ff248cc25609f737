#include "pavoid/sequences.hpp"

#include <vector>

#include "pavoid/errors.hpp"

namespace pavoid {

BigInt binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt fib_std(int n) {
  if (n < 0) throw DomainError("fib_std needs n >= 0");
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

BigInt fib_shifted(int n) {
  if (n < 0) throw DomainError("fib_shifted needs n >= 0");
  return fib_std(n + 1);
}

BigInt tribonacci_like(int n) {
  if (n < 0) throw DomainError("tribonacci_like needs n >= 0");
  std::vector<BigInt> t{1, 1, 2};
  if (n < 3) return t[static_cast<size_t>(n)];
  for (int i = 3; i <= n; ++i) {
    BigInt v = t[static_cast<size_t>(i - 1)] + t[static_cast<size_t>(i - 2)] +
               t[static_cast<size_t>(i - 3)];
    t.push_back(v);
  }
  return t.back();
}

}  // namespace pavoid
