#pragma once

#include "pavoid/polynomial.hpp"

namespace pavoid {

// C(n, k) with C(n, k) = 0 for k < 0 or k > n; n must be >= 0.
BigInt binomial(int n, int k);

// Catalan number C_n, n >= 0.
BigInt catalan(int n);

// Fibonacci, standard indexing f_0 = 0, f_1 = f_2 = 1.
BigInt fib_std(int n);

// Fibonacci shifted one step: f_0 = f_1 = 1, so fib_shifted(n) = fib_std(n+1).
BigInt fib_shifted(int n);

// t_0 = t_1 = 1, t_2 = 2, then t_n = 2 t_{n-1} - t_{n-4}; equals the series
// of (1 - x)/(1 - 2x + x^4): 1, 1, 2, 4, 7, 13, 24, 44, ...
BigInt tribonacci_like(int n);

}  // namespace pavoid
