#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pavoid/permutation.hpp"

namespace pavoid {

using BigInt = boost::multiprecision::cpp_int;

// Hard size caps. The general cap follows the n! / Catalan growth budget;
// an empty pattern set means materializing all n! permutations, which is
// only realistic to 10.
inline constexpr int kMaxEnumerateN = 13;
inline constexpr int kMaxEmptySetEnumerateN = 10;
inline constexpr int kMaxNaiveN = 8;

// S_n(avoid) in lexicographic order via prefix-pruned DFS: a prefix that
// already contains a pattern cannot extend to an avoider, and a freshly
// appended element only needs occurrences ending at itself rechecked.
// jobs = 0 uses the OpenMP default. Result is scheduling-independent.
std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& avoid,
                                            int jobs = 0);

// Single-threaded reference walk of the identical DFS.
std::vector<Permutation> enumerate_avoiders_serial(int n,
                                                   const PatternSet& avoid);

// Independent oracle-of-the-oracle: filter all n! permutations with the
// subset-scanning matcher.
std::vector<Permutation> naive_enumerate(int n, const PatternSet& avoid);

BigInt factorial(int n);

// |S_n(avoid)|.
BigInt count_avoiders(int n, const PatternSet& avoid, int jobs = 0);

// |S_n(avoid ∪ {tau})|, computed by enumerating S_n(avoid) and filtering
// on tau.
BigInt count_avoiders(int n, const PatternSet& avoid, const Permutation& tau,
                      int jobs = 0);

// Memoized avoider sets keyed by (n, pattern-set key). Thread-safe;
// concurrent misses may compute the same entry twice, the first insert
// wins and both callers see identical content.
class AvoiderCache {
 public:
  std::shared_ptr<const std::vector<Permutation>> get(int n,
                                                      const PatternSet& avoid,
                                                      int jobs = 0);
  static AvoiderCache& global();

 private:
  std::mutex mu_;
  std::map<std::pair<int, std::string>,
           std::shared_ptr<const std::vector<Permutation>>>
      map_;
};

// Cache-backed variants used by the classification sweeps.
BigInt count_avoiders_cached(int n, const PatternSet& avoid, int jobs = 0);
BigInt count_avoiders_cached(int n, const PatternSet& avoid,
                             const Permutation& tau, int jobs = 0);

}  // namespace pavoid
