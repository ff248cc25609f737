#include "pavoid/closedform.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "pavoid/errors.hpp"
#include "pavoid/sequences.hpp"

namespace pavoid {

namespace {

const Permutation& pat123() {
  static const Permutation p = Permutation::parse("123");
  return p;
}
const Permutation& pat132() {
  static const Permutation p = Permutation::parse("132");
  return p;
}
const Permutation& pat213() {
  static const Permutation p = Permutation::parse("213");
  return p;
}
const Permutation& pat231() {
  static const Permutation p = Permutation::parse("231");
  return p;
}
const Permutation& pat321() {
  static const Permutation p = Permutation::parse("321");
  return p;
}

const PatternSet& canon_set(CanonicalCase c) {
  static const PatternSet s12 = PatternSet::parse("123,132");
  static const PatternSet s13 = PatternSet::parse("123,231");
  static const PatternSet s23 = PatternSet::parse("132,213");
  static const PatternSet s34 = PatternSet::parse("213,231");
  static const PatternSet t123 = PatternSet::parse("123,132,213");
  static const PatternSet t124 = PatternSet::parse("123,132,231");
  static const PatternSet t134 = PatternSet::parse("123,213,231");
  static const PatternSet t145 = PatternSet::parse("123,231,312");
  static const PatternSet t234 = PatternSet::parse("132,213,231");
  switch (c) {
    case CanonicalCase::pair_123_132: return s12;
    case CanonicalCase::pair_123_231: return s13;
    case CanonicalCase::pair_132_213: return s23;
    case CanonicalCase::pair_213_231: return s34;
    case CanonicalCase::triple_123_132_213: return t123;
    case CanonicalCase::triple_123_132_231: return t124;
    case CanonicalCase::triple_123_213_231: return t134;
    case CanonicalCase::triple_123_231_312: return t145;
    case CanonicalCase::triple_132_213_231: return t234;
    default: throw DomainError("case has no canonical set");
  }
}

constexpr std::array<CanonicalCase, 9> kSymmetryCases = {
    CanonicalCase::pair_123_132,       CanonicalCase::pair_123_231,
    CanonicalCase::pair_132_213,       CanonicalCase::pair_213_231,
    CanonicalCase::triple_123_132_213, CanonicalCase::triple_123_132_231,
    CanonicalCase::triple_123_213_231, CanonicalCase::triple_123_231_312,
    CanonicalCase::triple_132_213_231};

void require_length3_members(const PatternSet& T) {
  if (T.empty()) throw DomainError("pattern set is empty");
  for (const auto& p : T.patterns())
    if (p.size() != 3)
      throw DomainError("pattern set must consist of length-3 patterns, got " + p.str());
}

bool in_orbit(const PatternSet& T, const PatternSet& canon) {
  for (SymmetryTag sym : kAllSymmetries)
    if (apply_symmetry(T, sym) == canon) return true;
  return false;
}

Permutation from_values(std::vector<int> v) { return Permutation(std::move(v)); }

}  // namespace

std::string to_string(CanonicalCase c) {
  switch (c) {
    case CanonicalCase::pair_123_132: return "pair(123,132)";
    case CanonicalCase::pair_123_231: return "pair(123,231)";
    case CanonicalCase::pair_132_213: return "pair(132,213)";
    case CanonicalCase::pair_213_231: return "pair(213,231)";
    case CanonicalCase::triple_123_132_213: return "triple(123,132,213)";
    case CanonicalCase::triple_123_132_231: return "triple(123,132,231)";
    case CanonicalCase::triple_123_213_231: return "triple(123,213,231)";
    case CanonicalCase::triple_123_231_312: return "triple(123,231,312)";
    case CanonicalCase::triple_132_213_231: return "triple(132,213,231)";
    case CanonicalCase::both_monotone: return "both-monotone";
    case CanonicalCase::four_plus: return "four-plus";
  }
  return "?";
}

std::string to_string(FormulaKind k) {
  switch (k) {
    case FormulaKind::rational_gf: return "rational_gf";
    case FormulaKind::linear: return "linear";
    case FormulaKind::binomial_sum: return "binomial_sum";
    case FormulaKind::constant: return "constant";
    case FormulaKind::kronecker: return "kronecker";
    case FormulaKind::eventually_zero: return "eventually_zero";
  }
  return "?";
}

std::string VerifyStatus::str() const {
  switch (kind) {
    case Kind::unverified: return "unverified";
    case Kind::verified_to: return "verified_to(" + std::to_string(n) + ")";
    case Kind::discrepant_at: {
      std::ostringstream out;
      out << "discrepant_at(" << n << ", printed " << printed << ", true " << oracle << ")";
      return out.str();
    }
  }
  return "?";
}

CanonicalReduction reduce_to_canonical(const PatternSet& T, const Permutation& tau) {
  require_length3_members(T);
  if (T.size() < 2 || T.size() > 5)
    throw DomainError("canonical reduction needs 2 <= |T| <= 5, got " +
                      std::to_string(T.size()));
  for (const auto& t : T.patterns())
    if (tau.contains(t))
      throw DomainError("tau contains the member " + t.str() +
                        "; counts collapse to the base count of T");
  if (T.size() >= 4)
    return {CanonicalCase::four_plus, T, tau, SymmetryTag::identity};
  if (T.member(pat123()) && T.member(pat321()))
    return {CanonicalCase::both_monotone, T, tau, SymmetryTag::identity};
  for (SymmetryTag sym : kAllSymmetries) {
    PatternSet image = apply_symmetry(T, sym);
    for (CanonicalCase c : kSymmetryCases) {
      if (T.size() != canon_set(c).size()) continue;
      if (image == canon_set(c))
        return {c, image, apply_symmetry(tau, sym), sym};
    }
  }
  throw DomainError("no symmetry maps " + T.key() + " to a canonical case");
}

BlockDecomposition decompose_123_132(const Permutation& tau) {
  if (tau.contains(pat123()) || tau.contains(pat132()))
    throw DomainError("tau " + tau.str() + " contains 123 or 132; no block decomposition");
  const int k = tau.size();
  BlockDecomposition d;
  int top = k, idx = 0;
  while (idx < k) {
    int j = idx;
    while (j < k && tau[j] != top) ++j;
    if (j == k) throw DomainError("malformed block structure in " + tau.str());
    int r = j - idx + 1;
    std::vector<int> block(r);
    for (int u = 0; u < r; ++u) block[static_cast<size_t>(u)] = tau[idx + u];
    for (int u = 0; u + 1 < r; ++u)
      if (block[static_cast<size_t>(u)] != top - 1 - u)
        throw DomainError("malformed block structure in " + tau.str());
    d.sizes.push_back(r);
    d.anchors.push_back(top);
    d.blocks.push_back(std::move(block));
    top -= r;
    idx = j + 1;
  }
  return d;
}

BlockDecomposition decompose_132_213(const Permutation& tau) {
  if (tau.contains(pat132()) || tau.contains(pat213()))
    throw DomainError("tau " + tau.str() + " contains 132 or 213; no run decomposition");
  const int k = tau.size();
  BlockDecomposition d;
  d.anchors.push_back(k + 1);
  int idx = 0;
  while (idx < k) {
    int j = idx;
    while (j + 1 < k && tau[j + 1] == tau[j] + 1) ++j;
    int start = tau[idx], end = tau[j];
    int prev = d.anchors.back();
    if (end != prev - 1 || start >= prev)
      throw DomainError("malformed run structure in " + tau.str());
    std::vector<int> run;
    run.reserve(static_cast<size_t>(j - idx + 1));
    for (int u = idx; u <= j; ++u) run.push_back(tau[u]);
    d.sizes.push_back(prev - start);
    d.blocks.push_back(std::move(run));
    d.anchors.push_back(start);
    idx = j + 1;
  }
  if (!d.anchors.empty() && d.anchors.back() != 1)
    throw DomainError("malformed run structure in " + tau.str());
  return d;
}

Permutation reassemble(const BlockDecomposition& d) {
  std::vector<int> v;
  for (const auto& b : d.blocks) v.insert(v.end(), b.begin(), b.end());
  return Permutation(std::move(v));
}

RationalGF run_chain_fg(const std::vector<int>& sizes) {
  if (sizes.empty()) throw DomainError("chain needs at least one segment");
  std::vector<ChainStep> steps;
  for (size_t i = 0; i + 1 < sizes.size(); ++i)
    steps.push_back({build_g(sizes[i]), build_f(sizes[i])});
  return chain_solve(steps, build_f(sizes.back()));
}

BigInt evaluate_formula(const FormulaSpec& spec, int n) {
  if (n < spec.validity_from)
    throw DomainError("n = " + std::to_string(n) + " is below the validity threshold " +
                      std::to_string(spec.validity_from));
  switch (spec.kind) {
    case FormulaKind::rational_gf:
      return expand(spec.gf, n)[static_cast<size_t>(n)];
    case FormulaKind::linear:
      return BigInt(spec.slope) * n + spec.intercept;
    case FormulaKind::binomial_sum: {
      if (n == 0) return 1;
      BigInt acc = 0;
      for (int j = 0; j <= spec.sum_upper; ++j) acc += binomial(n - 1, j);
      return acc;
    }
    case FormulaKind::constant:
      return spec.constant;
    case FormulaKind::kronecker: {
      BigInt v = spec.kron_base;
      if (spec.kron_sub_inc && spec.tau_increasing) v -= 1;
      if (spec.kron_sub_dec && spec.tau_decreasing) v -= 1;
      return v;
    }
    case FormulaKind::eventually_zero:
      return 0;
  }
  throw DomainError("unknown formula kind");
}

void verify_status(FormulaSpec& spec, const PatternSet& T, const Permutation& tau,
                   int verify_to, int jobs) {
  if (verify_to < spec.validity_from) {
    spec.status = {};
    return;
  }
  std::vector<BigInt> series;
  if (spec.kind == FormulaKind::rational_gf) series = expand(spec.gf, verify_to);
  for (int n = spec.validity_from; n <= verify_to; ++n) {
    BigInt printed = spec.kind == FormulaKind::rational_gf ? series[static_cast<size_t>(n)]
                                                           : evaluate_formula(spec, n);
    BigInt truth = count_avoiders_cached(n, T, tau, jobs);
    if (printed != truth) {
      spec.status = {VerifyStatus::Kind::discrepant_at, n, printed, truth};
      return;
    }
  }
  spec.status = {VerifyStatus::Kind::verified_to, verify_to, 0, 0};
}

FormulaSpec gf_123_132(const Permutation& tau, int verify_to) {
  BlockDecomposition d = decompose_123_132(tau);
  FormulaSpec spec;
  spec.kind = FormulaKind::rational_gf;
  spec.gf = run_chain_fg(d.sizes);
  spec.validity_from = tau.size();
  spec.provenance = "block-chain(123,132)";
  verify_status(spec, canon_set(CanonicalCase::pair_123_132), tau, verify_to);
  return spec;
}

std::pair<int, int> family_123_231(const Permutation& tau) {
  if (tau.contains(pat123()) || tau.contains(pat231()))
    throw DomainError("tau " + tau.str() + " contains 123 or 231; outside the linear family");
  if (tau.is_decreasing())
    throw DomainError("decreasing tau is outside the linear family; it vanishes eventually");
  const int k = tau.size();
  for (int m = 2; m <= k + 1; ++m) {
    for (int r = 1; r <= m - 2; ++r) {
      std::vector<int> v;
      v.reserve(static_cast<size_t>(k));
      for (int x = k; x >= m; --x) v.push_back(x);
      for (int x = r; x >= 1; --x) v.push_back(x);
      for (int x = m - 1; x >= r + 1; --x) v.push_back(x);
      if (static_cast<int>(v.size()) == k && from_values(std::move(v)) == tau)
        return {m, r};
    }
  }
  throw DomainError("tau " + tau.str() + " is not of the form (k..m, r..1, m-1..r+1)");
}

FormulaSpec recognize_123_231(const Permutation& tau, int verify_to) {
  family_123_231(tau);  // validates membership
  const int k = tau.size();
  FormulaSpec spec;
  spec.kind = FormulaKind::linear;
  spec.slope = k - 2;
  spec.intercept = -(static_cast<long long>(k) * (k - 3)) / 2;
  spec.validity_from = k;
  spec.provenance = "linear(123,231)";
  verify_status(spec, canon_set(CanonicalCase::pair_123_231), tau, verify_to);
  return spec;
}

FormulaSpec gf_132_213(const Permutation& tau, int verify_to) {
  FormulaSpec spec;
  if (tau.is_decreasing()) {
    if (tau.size() == 0) throw DomainError("tau must be nonempty");
    spec.kind = FormulaKind::binomial_sum;
    spec.sum_upper = tau.size() - 2;
    spec.validity_from = 0;
    spec.provenance = "binomial-sum(132,213)";
  } else {
    BlockDecomposition d = decompose_132_213(tau);
    spec.kind = FormulaKind::rational_gf;
    spec.gf = run_chain_fg(d.sizes);
    spec.validity_from = tau.size();
    spec.provenance = "run-chain(132,213)";
  }
  verify_status(spec, canon_set(CanonicalCase::pair_132_213), tau, verify_to);
  return spec;
}

std::vector<Extremal> signature_213_231(const Permutation& tau) {
  if (tau.contains(pat213()) || tau.contains(pat231()))
    throw DomainError("tau " + tau.str() + " contains 213 or 231; outside the extremal family");
  const int k = tau.size();
  std::vector<Extremal> sig;
  if (k == 0) return sig;
  std::vector<int> sufmax(static_cast<size_t>(k)), sufmin(static_cast<size_t>(k));
  sufmax[static_cast<size_t>(k - 1)] = sufmin[static_cast<size_t>(k - 1)] = tau[k - 1];
  for (int i = k - 2; i >= 0; --i) {
    sufmax[static_cast<size_t>(i)] = std::max(tau[i], sufmax[static_cast<size_t>(i + 1)]);
    sufmin[static_cast<size_t>(i)] = std::min(tau[i], sufmin[static_cast<size_t>(i + 1)]);
  }
  for (int i = 0; i < k - 1; ++i) {
    if (tau[i] == sufmax[static_cast<size_t>(i)])
      sig.push_back(Extremal::max);
    else if (tau[i] == sufmin[static_cast<size_t>(i)])
      sig.push_back(Extremal::min);
    else
      throw DomainError("entry " + std::to_string(tau[i]) +
                        " is neither a right maximum nor a right minimum in " + tau.str());
  }
  return sig;
}

FormulaSpec gf_213_231(const Permutation& tau, int verify_to) {
  signature_213_231(tau);  // validates membership
  const int k = tau.size();
  std::vector<ChainStep> steps;
  RationalGF g = build_g(1);  // x/(1-x)
  for (int i = 0; i + 1 < k; ++i) steps.push_back({g, RationalGF(1)});
  FormulaSpec spec;
  spec.kind = FormulaKind::rational_gf;
  spec.gf = chain_solve(steps, RationalGF(1));
  spec.validity_from = k;
  spec.provenance = "extremal-chain(213,231)";
  verify_status(spec, canon_set(CanonicalCase::pair_213_231), tau, verify_to);
  return spec;
}

MSignature m_signature(const Permutation& tau) {
  if (tau.contains(pat123()) || tau.contains(pat132()) || tau.contains(pat213()))
    throw DomainError("tau " + tau.str() + " contains 123, 132 or 213; no step signature");
  if (tau.is_decreasing())
    throw DomainError("decreasing tau is outside the stepped family; it vanishes eventually");
  const int k = tau.size();
  MSignature sig;
  int t = k, i = 0;
  while (t > 0) {
    if (tau[i] == t) {
      sig.m.push_back(1);
      i += 1;
      t -= 1;
    } else if (tau[i] == t - 1 && i + 1 < k && tau[i + 1] == t) {
      sig.m.push_back(2);
      i += 2;
      t -= 2;
    } else {
      throw DomainError("no leading extremal step in " + tau.str());
    }
  }
  return sig;
}

FormulaSpec gf_123_132_213(const Permutation& tau, int verify_to) {
  MSignature sig = m_signature(tau);
  std::vector<ChainStep> steps;
  for (size_t i = 0; i + 1 < sig.m.size(); ++i)
    steps.push_back({build_v(sig.m[i]), build_u(sig.m[i])});
  FormulaSpec spec;
  spec.kind = FormulaKind::rational_gf;
  spec.gf = chain_solve(steps, build_u(sig.m.back()));
  spec.validity_from = tau.size();
  spec.provenance = "step-chain(123,132,213)";
  verify_status(spec, canon_set(CanonicalCase::triple_123_132_213), tau, verify_to);
  return spec;
}

namespace {

// Family shapes of the four constant triples; r sweeps the stated range.
std::optional<int> match_3set_family(CanonicalCase c, const Permutation& tau) {
  const int k = tau.size();
  auto try_shape = [&](std::vector<int> v) -> bool {
    return static_cast<int>(v.size()) == k && from_values(std::move(v)) == tau;
  };
  switch (c) {
    case CanonicalCase::triple_123_132_231:
      for (int r = 2; r <= k; ++r) {
        std::vector<int> v;
        for (int x = k; x >= r + 1; --x) v.push_back(x);
        for (int x = r - 1; x >= 1; --x) v.push_back(x);
        v.push_back(r);
        if (try_shape(std::move(v))) return r;
      }
      return std::nullopt;
    case CanonicalCase::triple_123_213_231:
      for (int r = 2; r <= k; ++r) {
        std::vector<int> v;
        for (int x = k; x >= r + 1; --x) v.push_back(x);
        v.push_back(1);
        for (int x = r; x >= 2; --x) v.push_back(x);
        if (try_shape(std::move(v))) return r;
      }
      return std::nullopt;
    case CanonicalCase::triple_123_231_312:
      for (int r = 1; r <= k - 1; ++r) {
        std::vector<int> v;
        for (int x = r; x >= 1; --x) v.push_back(x);
        for (int x = k; x >= r + 1; --x) v.push_back(x);
        if (try_shape(std::move(v))) return r;
      }
      return std::nullopt;
    case CanonicalCase::triple_132_213_231:
      for (int r = 1; r <= k; ++r) {
        std::vector<int> v;
        for (int x = k; x >= r + 1; --x) v.push_back(x);
        for (int x = 1; x <= r; ++x) v.push_back(x);
        if (try_shape(std::move(v))) return r;
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

FormulaSpec canonical_3set(const PatternSet& T, const Permutation& tau, int verify_to) {
  CanonicalCase c = CanonicalCase::four_plus;
  Permutation tc = tau;
  for (CanonicalCase cand : {CanonicalCase::triple_123_132_231, CanonicalCase::triple_123_213_231,
                             CanonicalCase::triple_123_231_312, CanonicalCase::triple_132_213_231}) {
    if (T == canon_set(cand)) {
      c = cand;
      break;
    }
  }
  if (c == CanonicalCase::four_plus) {
    CanonicalReduction red = reduce_to_canonical(T, tau);
    switch (red.kind) {
      case CanonicalCase::triple_123_132_231:
      case CanonicalCase::triple_123_213_231:
      case CanonicalCase::triple_123_231_312:
      case CanonicalCase::triple_132_213_231:
        c = red.kind;
        tc = red.tau;
        break;
      default:
        throw DomainError("pattern set " + T.key() + " is not one of the constant triples");
    }
  }
  std::optional<int> r = match_3set_family(c, tc);
  if (!r) {
    if (tc.is_decreasing())
      throw DomainError("decreasing tau is outside the family; it vanishes eventually");
    throw DomainError("tau " + tau.str() + " does not match the " + to_string(c) + " family");
  }
  const int k = tau.size();
  FormulaSpec spec;
  spec.kind = FormulaKind::constant;
  spec.constant = k - 1;
  spec.validity_from = k;
  spec.provenance = "constant" + to_string(c).substr(6);  // "constant(a,b,c)"
  verify_status(spec, T, tau, verify_to);
  return spec;
}

FormulaSpec formula_T4plus(const PatternSet& T, const Permutation& tau, int verify_to) {
  require_length3_members(T);
  if (T.size() < 4 || T.size() > 5)
    throw DomainError("the four-plus formula needs |T| in {4, 5}, got " +
                      std::to_string(T.size()));
  for (const auto& t : T.patterns())
    if (tau.contains(t))
      throw DomainError("tau contains the member " + t.str() +
                        "; counts collapse to the base count of T");
  const bool has_inc = T.member(pat123()), has_dec = T.member(pat321());
  FormulaSpec spec;
  spec.kind = FormulaKind::kronecker;
  spec.tau_increasing = tau.is_increasing();
  spec.tau_decreasing = tau.is_decreasing();
  if (has_inc && has_dec) {
    spec.kron_base = 0;
  } else if (has_inc) {
    spec.kron_base = 2;
    spec.kron_sub_dec = true;
  } else if (has_dec) {
    spec.kron_base = 2;
    spec.kron_sub_inc = true;
  } else {
    spec.kron_base = 2;
    spec.kron_sub_inc = spec.kron_sub_dec = true;
  }
  spec.validity_from = tau.size() + 1;
  spec.provenance = "four-plus-kronecker";
  verify_status(spec, T, tau, verify_to);
  return spec;
}

std::optional<int> es_bound(const PatternSet& patterns) {
  std::optional<int> a, b;
  for (const auto& p : patterns.patterns()) {
    if (p.size() == 0) continue;
    if (p.is_increasing() && (!a || p.size() < *a)) a = p.size();
    if (p.is_decreasing() && (!b || p.size() < *b)) b = p.size();
  }
  if (a && b) return (*a - 1) * (*b - 1) + 1;
  return std::nullopt;
}

BigInt base_count(const PatternSet& T, int n) {
  require_length3_members(T);
  if (n < 0) throw DomainError("n must be >= 0");
  if (n <= 2) return factorial(n);
  if (T.member(pat123()) && T.member(pat321())) {
    if (n >= 5) return 0;
    return count_avoiders(n, T);
  }
  switch (T.size()) {
    case 1:
      return catalan(n);
    case 2:
      if (in_orbit(T, canon_set(CanonicalCase::pair_123_231))) return binomial(n, 2) + 1;
      return BigInt(1) << (n - 1);
    case 3:
      if (in_orbit(T, canon_set(CanonicalCase::triple_123_132_213))) return fib_std(n + 1);
      return n;
    case 4:
      return 2;
    case 5:
      return 1;
    default:
      throw DomainError("unreachable pattern set size");
  }
}

namespace {

FormulaSpec ez_spec(const PatternSet& T, const Permutation& tau) {
  PatternSet with_tau = T;
  {
    std::vector<Permutation> ps = T.patterns();
    ps.push_back(tau);
    with_tau = PatternSet(std::move(ps));
  }
  std::optional<int> threshold = es_bound(with_tau);
  if (!threshold)
    throw DomainError("no monotone clash for " + T.key() + " with tau " + tau.str());
  FormulaSpec spec;
  spec.kind = FormulaKind::eventually_zero;
  spec.zero_from = *threshold;
  spec.validity_from = *threshold;
  spec.provenance = "erdos-szekeres";
  return spec;
}

}  // namespace

FormulaSpec classify(const PatternSet& T, const Permutation& tau, int verify_to, int jobs) {
  CanonicalReduction red = reduce_to_canonical(T, tau);
  FormulaSpec spec;
  switch (red.kind) {
    case CanonicalCase::four_plus:
      spec = formula_T4plus(T, tau, -1);
      break;
    case CanonicalCase::both_monotone:
      spec = ez_spec(T, tau);
      break;
    case CanonicalCase::pair_123_132:
      spec = red.tau.is_decreasing() ? ez_spec(T, tau) : gf_123_132(red.tau, -1);
      break;
    case CanonicalCase::pair_123_231:
      spec = red.tau.is_decreasing() ? ez_spec(T, tau) : recognize_123_231(red.tau, -1);
      break;
    case CanonicalCase::pair_132_213:
      spec = gf_132_213(red.tau, -1);
      break;
    case CanonicalCase::pair_213_231:
      spec = gf_213_231(red.tau, -1);
      break;
    case CanonicalCase::triple_123_132_213:
      spec = red.tau.is_decreasing() ? ez_spec(T, tau) : gf_123_132_213(red.tau, -1);
      break;
    case CanonicalCase::triple_123_132_231:
    case CanonicalCase::triple_123_213_231:
    case CanonicalCase::triple_123_231_312:
      spec = red.tau.is_decreasing() ? ez_spec(T, tau)
                                     : canonical_3set(red.canonical_set, red.tau, -1);
      break;
    case CanonicalCase::triple_132_213_231:
      spec = canonical_3set(red.canonical_set, red.tau, -1);
      break;
  }
  verify_status(spec, T, tau, verify_to, jobs);
  return spec;
}

bool eval_agrees(const EvalResult& r) {
  return !(r.oracle && r.formula && *r.oracle != *r.formula);
}

EvalResult evaluate(const PatternSet& T, const Permutation& tau, int n, EvalMethod method,
                    int jobs) {
  if (n < 0) throw DomainError("n must be >= 0");
  EvalResult res;
  bool s3_members = !T.empty();
  for (const auto& p : T.patterns())
    if (p.size() != 3) s3_members = false;
  bool remark = false;
  if (s3_members)
    for (const auto& t : T.patterns())
      if (tau.contains(t)) {
        remark = true;
        break;
      }

  if (method == EvalMethod::oracle || method == EvalMethod::both) {
    res.oracle = count_avoiders_cached(n, T, tau, jobs);
    res.route = "oracle";
  }
  if (method == EvalMethod::formula || method == EvalMethod::both) {
    if (remark) {
      res.formula = base_count(T, n);
      res.route = "contains-member base-count";
    } else if (s3_members && T.size() >= 2) {
      FormulaSpec spec = classify(T, tau, -1, jobs);
      if (n >= spec.validity_from) {
        res.formula = evaluate_formula(spec, n);
        res.route = spec.provenance;
      } else {
        // below the validity threshold the oracle is authoritative
        if (!res.oracle) res.oracle = count_avoiders_cached(n, T, tau, jobs);
        res.route = spec.provenance + " [below validity, oracle]";
      }
    } else {
      throw DomainError("no closed form for this pattern set; use the oracle method");
    }
  }
  res.value = res.oracle ? *res.oracle : *res.formula;
  return res;
}

}  // namespace pavoid
