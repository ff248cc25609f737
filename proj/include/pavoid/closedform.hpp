#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pavoid/enumerate.hpp"
#include "pavoid/permutation.hpp"
#include "pavoid/rational_gf.hpp"

namespace pavoid {

// Structural cases a length-3 pattern set reduces to under the symmetry
// group.  Sets containing both monotone patterns vanish eventually and get
// their own case; everything of size >= 4 shares one formula family.
enum class CanonicalCase {
  pair_123_132,
  pair_123_231,
  pair_132_213,
  pair_213_231,
  triple_123_132_213,
  triple_123_132_231,
  triple_123_213_231,
  triple_123_231_312,
  triple_132_213_231,
  both_monotone,
  four_plus,
};

std::string to_string(CanonicalCase c);

struct CanonicalReduction {
  CanonicalCase kind;
  PatternSet canonical_set;  // apply_symmetry(T, sym)
  Permutation tau;           // apply_symmetry(input tau, sym)
  SymmetryTag sym;
};

// Finds a symmetry mapping T onto a canonical case set; tau is mapped along.
// Requires 2 <= |T| <= 5 with every member of length 3.
CanonicalReduction reduce_to_canonical(const PatternSet& T, const Permutation& tau);

// Segment structure of tau.  For the {123,132} family: sizes are the block
// sizes r_1..r_m, anchors the running maxima t_i, blocks the value segments
// (t_i-1, ..., t_i-r_i+1, t_i).  For the {132,213} family: blocks are the
// increasing runs, sizes their lengths, anchors the strictly decreasing
// chain r_0 > r_1 > ... > r_m of run start values prefixed with r_0 = k+1.
struct BlockDecomposition {
  std::vector<int> sizes;
  std::vector<std::vector<int>> blocks;
  std::vector<int> anchors;
};

BlockDecomposition decompose_123_132(const Permutation& tau);
BlockDecomposition decompose_132_213(const Permutation& tau);
Permutation reassemble(const BlockDecomposition& d);

enum class FormulaKind {
  rational_gf,
  linear,
  binomial_sum,
  constant,
  kronecker,
  eventually_zero,
};

std::string to_string(FormulaKind k);

struct VerifyStatus {
  enum class Kind { unverified, verified_to, discrepant_at };
  Kind kind = Kind::unverified;
  int n = 0;          // verified_to bound, or first discrepant n
  BigInt printed{};   // formula value at the discrepancy
  BigInt oracle{};    // true count at the discrepancy
  bool operator==(const VerifyStatus&) const = default;
  std::string str() const;
};

// A closed form for |S_n(T, tau)| exactly as printed in its source.
// Correctness is recorded in `status`, never assumed: the oracle comparison
// may brand the printed form discrepant.
struct FormulaSpec {
  FormulaKind kind = FormulaKind::constant;

  RationalGF gf;          // rational_gf: coefficient n of the series
  long long slope = 0;    // linear: slope*n + intercept
  long long intercept = 0;
  int sum_upper = 0;      // binomial_sum: sum_{j=0}^{sum_upper} C(n-1, j)
  BigInt constant{};      // constant
  int kron_base = 2;      // kronecker: base - [sub_inc]d(tau,inc) - [sub_dec]d(tau,dec)
  bool kron_sub_inc = false;
  bool kron_sub_dec = false;
  bool tau_increasing = false;
  bool tau_decreasing = false;
  int zero_from = 0;      // eventually_zero: 0 for n >= zero_from

  int validity_from = 0;  // smallest n the form is claimed for
  std::string provenance; // mechanism tag, e.g. "block-chain(123,132)"
  VerifyStatus status;
};

// Value of the printed form at n; requires n >= validity_from.
BigInt evaluate_formula(const FormulaSpec& spec, int n);

// Compares the form against the oracle for validity_from <= n <= verify_to
// and fills status (first mismatch wins).  verify_to < validity_from leaves
// the spec unverified.
void verify_status(FormulaSpec& spec, const PatternSet& T, const Permutation& tau,
                   int verify_to, int jobs = 0);

// --- per-family constructors (canonical pattern sets) ---

// T = {123,132}: chain over block sizes, steps (g_{r_i}, f_{r_i}), h = f_{r_m}.
FormulaSpec gf_123_132(const Permutation& tau, int verify_to = 11);
// T = {123,231}: member (k,..,m, r,..,1, m-1,..,r+1) with slope k-2.
std::pair<int, int> family_123_231(const Permutation& tau);  // (m, r)
FormulaSpec recognize_123_231(const Permutation& tau, int verify_to = 11);
// T = {132,213}: chain over run lengths; decreasing tau gets the binomial sum.
FormulaSpec gf_132_213(const Permutation& tau, int verify_to = 11);
// T = {213,231}: sum_{i=0}^{k-1} (x/(1-x))^i regardless of tau.
enum class Extremal { max, min };
std::vector<Extremal> signature_213_231(const Permutation& tau);
FormulaSpec gf_213_231(const Permutation& tau, int verify_to = 11);
// T = {123,132,213}: chain over the 1/2-step signature with u/v weights.
struct MSignature {
  std::vector<int> m;  // entries in {1,2}, summing to k
};
MSignature m_signature(const Permutation& tau);
FormulaSpec gf_123_132_213(const Permutation& tau, int verify_to = 11);
// The four remaining triples: constant k-1 once the family index r is found.
FormulaSpec canonical_3set(const PatternSet& T, const Permutation& tau, int verify_to = 11);
// |T| >= 4: 2 minus Kronecker deltas, or 0 when both monotone patterns sit in T.
FormulaSpec formula_T4plus(const PatternSet& T, const Permutation& tau, int verify_to = 11);

// Chain s_i = g_{d_i} s_{i+1} + f_{d_i} with terminal f_{d_m}, shared by the
// {123,132} (block sizes) and {132,213} (run lengths) families.
RationalGF run_chain_fg(const std::vector<int>& sizes);

// Vanishing threshold (a-1)(b-1)+1 when the set holds an increasing member of
// length a and a decreasing one of length b (minimal such a, b); else nothing.
std::optional<int> es_bound(const PatternSet& patterns);

// Exact |S_n(T)| for nonempty T of length-3 patterns, any n >= 0.
BigInt base_count(const PatternSet& T, int n);

// Full dispatcher for tau avoiding T, |T| >= 2: picks the family by
// canonical reduction, routes decreasing tau away from the chain formulas,
// and verifies the result against the oracle of the original pair.
FormulaSpec classify(const PatternSet& T, const Permutation& tau, int verify_to = 11,
                     int jobs = 0);

enum class EvalMethod { oracle, formula, both };

struct EvalResult {
  BigInt value;                   // oracle value when available, else formula
  std::optional<BigInt> oracle;
  std::optional<BigInt> formula;
  std::string route;              // mechanism that produced the formula value
};

// False exactly when both sides are present and differ.
bool eval_agrees(const EvalResult& r);

// Applies the contains-a-member shortcut first, then the family formulas;
// below a form's validity threshold the oracle is authoritative.
EvalResult evaluate(const PatternSet& T, const Permutation& tau, int n, EvalMethod method,
                    int jobs = 0);

}  // namespace pavoid
