#include "pavoid/enumerate.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pavoid/errors.hpp"

namespace pavoid {

namespace {

int effective_threads(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

void check_enumerate_args(int n, const PatternSet& avoid) {
  if (n < 0) throw ParseError("length must be non-negative");
  const int cap = avoid.empty() ? kMaxEmptySetEnumerateN : kMaxEnumerateN;
  if (n > cap) {
    throw ResourceLimitError("enumeration of length " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(cap) +
                             (avoid.empty() ? " for an empty pattern set" : ""));
  }
}

std::vector<std::vector<int>> raw_patterns(const PatternSet& avoid) {
  std::vector<std::vector<int>> pats;
  pats.reserve(avoid.size());
  for (const auto& p : avoid.patterns()) pats.push_back(p.values());
  return pats;
}

bool prefix_ok(const std::vector<int>& prefix,
               const std::vector<std::vector<int>>& pats) {
  for (const auto& p : pats) {
    if (seq_contains_ending_at_last(prefix, p)) return false;
  }
  return true;
}

void dfs_collect(int n, const std::vector<std::vector<int>>& pats,
                 std::vector<int>& prefix, std::vector<char>& used,
                 std::vector<Permutation>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Permutation(prefix));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    prefix.push_back(v);
    if (prefix_ok(prefix, pats)) {
      used[static_cast<std::size_t>(v)] = 1;
      dfs_collect(n, pats, prefix, used, out);
      used[static_cast<std::size_t>(v)] = 0;
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Permutation> enumerate_avoiders_serial(int n,
                                                   const PatternSet& avoid) {
  check_enumerate_args(n, avoid);
  if (n == 0) return {Permutation()};
  const auto pats = raw_patterns(avoid);
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  dfs_collect(n, pats, prefix, used, out);
  return out;
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& avoid,
                                            int jobs) {
  check_enumerate_args(n, avoid);
  if (n == 0) return {Permutation()};
  const auto pats = raw_patterns(avoid);
  // One branch per first element; branch order restores lexicographic
  // output independent of scheduling.
  std::vector<std::vector<Permutation>> branch(static_cast<std::size_t>(n));
  const int nt = effective_threads(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
#endif
  for (int first = 1; first <= n; ++first) {
    std::vector<int> prefix{first};
    if (!prefix_ok(prefix, pats)) continue;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    used[static_cast<std::size_t>(first)] = 1;
    dfs_collect(n, pats, prefix, used,
                branch[static_cast<std::size_t>(first - 1)]);
  }
  (void)nt;
  std::vector<Permutation> out;
  std::size_t total = 0;
  for (const auto& b : branch) total += b.size();
  out.reserve(total);
  for (auto& b : branch) {
    out.insert(out.end(), std::make_move_iterator(b.begin()),
               std::make_move_iterator(b.end()));
  }
  return out;
}

std::vector<Permutation> naive_enumerate(int n, const PatternSet& avoid) {
  if (n < 0) throw ParseError("length must be non-negative");
  if (n > kMaxNaiveN) {
    throw ResourceLimitError("naive enumeration of length " +
                             std::to_string(n) + " exceeds the cap of " +
                             std::to_string(kMaxNaiveN));
  }
  if (n == 0) return {Permutation()};
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    bool ok = true;
    for (const auto& pat : avoid.patterns()) {
      if (contains_naive(p, pat)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt count_avoiders(int n, const PatternSet& avoid, int jobs) {
  if (avoid.empty()) {
    if (n < 0) throw ParseError("length must be non-negative");
    if (n > kMaxEnumerateN) {
      throw ResourceLimitError("count of length " + std::to_string(n) +
                               " exceeds the cap of " +
                               std::to_string(kMaxEnumerateN));
    }
    return factorial(n);
  }
  return BigInt(enumerate_avoiders(n, avoid, jobs).size());
}

namespace {

BigInt filter_count(const std::vector<Permutation>& hosts,
                    const Permutation& tau, int jobs) {
  const auto& pat = tau.values();
  long long count = 0;
  const int m = static_cast<int>(hosts.size());
  const int nt = effective_threads(jobs);
  (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt) reduction(+ : count)
#endif
  for (int i = 0; i < m; ++i) {
    if (!seq_contains(hosts[static_cast<std::size_t>(i)].values(), pat)) {
      ++count;
    }
  }
  return BigInt(count);
}

}  // namespace

BigInt count_avoiders(int n, const PatternSet& avoid, const Permutation& tau,
                      int jobs) {
  if (avoid.empty()) {
    std::vector<Permutation> single{tau};
    return BigInt(enumerate_avoiders(n, PatternSet(single), jobs).size());
  }
  return filter_count(enumerate_avoiders(n, avoid, jobs), tau, jobs);
}

std::shared_ptr<const std::vector<Permutation>> AvoiderCache::get(
    int n, const PatternSet& avoid, int jobs) {
  const auto key = std::make_pair(n, avoid.key());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
  }
  auto computed = std::make_shared<const std::vector<Permutation>>(
      enumerate_avoiders(n, avoid, jobs));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = map_.try_emplace(key, std::move(computed));
  return it->second;
}

AvoiderCache& AvoiderCache::global() {
  static AvoiderCache cache;
  return cache;
}

BigInt count_avoiders_cached(int n, const PatternSet& avoid, int jobs) {
  if (avoid.empty()) return count_avoiders(n, avoid, jobs);
  return BigInt(AvoiderCache::global().get(n, avoid, jobs)->size());
}

BigInt count_avoiders_cached(int n, const PatternSet& avoid,
                             const Permutation& tau, int jobs) {
  if (avoid.empty()) return count_avoiders(n, avoid, tau, jobs);
  return filter_count(*AvoiderCache::global().get(n, avoid, jobs), tau, jobs);
}

}  // namespace pavoid
