#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pavoid/closedform.hpp"
#include "pavoid/enumerate.hpp"
#include "pavoid/permutation.hpp"

namespace pavoid {

// Inclusive n-range used for equivalence grouping. Two pairs land in one
// class iff their count vectors agree on every n in the window; the window
// is recorded in every report since the grouping depends on it.
struct Window {
  int lo = 7;
  int hi = 11;
  bool operator==(const Window&) const = default;
};

// |S_n(T, tau)| for n = w.lo..w.hi. Contains-a-member pairs use the base
// count, everything else the enumeration oracle. Upper bound capped at 12
// when |T| = 1 (host sets grow Catalan-fast), 13 otherwise.
std::vector<BigInt> count_vector(const PatternSet& T, const Permutation& tau,
                                 Window w, int jobs = 0);

struct TablePair {
  PatternSet set;
  Permutation tau;
  bool operator==(const TablePair&) const = default;
};

struct PairPopulation {
  std::vector<TablePair> pairs;
  std::string descriptor;
};

// All 62 nonempty T subset of S_3 (sorted by key) crossed with all 24
// tau in S_4 (lexicographic): 1488 pairs.
PairPopulation table_population();

struct WilfClass {
  PatternSet rep_set;          // lexicographically least member
  Permutation rep_tau;
  std::size_t size = 0;
  std::vector<TablePair> members;  // in population order
  std::vector<BigInt> vec;         // shared count vector on the window
  std::string formula;             // catalog name or "unrecognized"
};

struct TableDiffEntry {
  PatternSet rep_set;  // reference row representative
  Permutation rep_tau;
  std::size_t expected_size = 0;
  std::size_t computed_size = 0;
  std::string expected_formula;
  std::string matched_formula;
  std::vector<TablePair> witnesses;  // sample members of the computed class
  std::string explanation;
};

struct WilfClassReport {
  Window window;
  std::vector<WilfClass> classes;      // sorted by (rep_set key, rep_tau)
  std::vector<TableDiffEntry> table_diff;
};

// Groups the population by exact vector equality on the window.
// table_diff is left empty; table_s3_s4 fills it.
WilfClassReport partition(const PairPopulation& population, Window w, int jobs = 0);

// Named closed forms from the reference table; evaluators may throw
// DomainError outside their natural domain (treated as a non-match).
struct ReferenceSequence {
  std::string name;
  std::function<BigInt(int)> eval;
};

const std::vector<ReferenceSequence>& formula_catalog();

// First catalog entry whose values equal vec on the window, in fixed
// catalog order; "unrecognized" when none does. No fitting, only evaluation.
std::string formula_match(const std::vector<BigInt>& vec, Window w);

// One row of the embedded reference table: representative pair, claimed
// class size, claimed formula name.
struct TableRow {
  PatternSet set;
  Permutation tau;
  std::size_t size = 0;
  std::string formula;
};

// Loads the 22 reference rows shipped alongside the library.
const std::vector<TableRow>& embedded_table();

// Full audit: partitions the 1488-pair population on the window, matches
// formulas, and diffs class sizes/formulas against the reference rows.
// Rows are located by the computed class containing their representative.
// n_max >= window.hi extends the reported class vectors past the grouping
// window for display; it never affects the grouping itself.
WilfClassReport table_s3_s4(Window window = {}, int n_max = 11, int jobs = 0);

struct VerifyEntry {
  PatternSet set;
  Permutation tau;
  FormulaSpec spec;
};

struct VerifyReport {
  int k_max = 4;
  int n_max = 11;
  std::vector<VerifyEntry> entries;  // sorted by (k, set key, tau)
  std::vector<VerifyEntry> discrepancies() const;
};

// Classifies every pair (T, tau) with 2 <= |T| <= 5, tau in S_k(T) for
// k = 4..k_max, and records the oracle verdict for each closed form.
VerifyReport verify_closed_forms(int k_max = 4, int n_max = 11, int jobs = 0);

nlohmann::ordered_json report_to_json(const WilfClassReport& report);
nlohmann::ordered_json verify_to_json(const VerifyReport& report);

}  // namespace pavoid
