#include "pavoid/wilf.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pavoid/errors.hpp"
#include "pavoid/sequences.hpp"

#ifndef PAVOID_TABLE_DATA
#define PAVOID_TABLE_DATA "data/wilf_table_reference.json"
#endif

namespace pavoid {

namespace {

bool all_length3(const PatternSet& T) {
  for (const auto& p : T.patterns())
    if (p.size() != 3) return false;
  return true;
}

bool contains_member(const PatternSet& T, const Permutation& tau) {
  for (const auto& t : T.patterns())
    if (tau.contains(t)) return true;
  return false;
}

void check_window(Window w) {
  if (w.lo < 0 || w.hi < w.lo)
    throw DomainError("window must satisfy 0 <= lo <= hi");
}

BigInt pow2(int e) {
  if (e < 0) throw DomainError("negative power of two");
  return BigInt(1) << e;
}

std::string pair_label(const PatternSet& s, const Permutation& t) {
  return "({" + s.key() + "}, " + t.str() + ")";
}

}  // namespace

std::vector<BigInt> count_vector(const PatternSet& T, const Permutation& tau,
                                 Window w, int jobs) {
  if (T.empty()) throw DomainError("count_vector needs a nonempty pattern set");
  check_window(w);
  const int cap = T.size() == 1 ? 12 : 13;
  if (w.hi > cap)
    throw ResourceLimitError("count_vector capped at n = " + std::to_string(cap) +
                             " for |T| = " + std::to_string(T.size()));
  const bool shortcut = all_length3(T) && contains_member(T, tau);
  std::vector<BigInt> v;
  v.reserve(static_cast<size_t>(w.hi - w.lo + 1));
  for (int n = w.lo; n <= w.hi; ++n)
    v.push_back(shortcut ? base_count(T, n) : count_avoiders_cached(n, T, tau, jobs));
  return v;
}

PairPopulation table_population() {
  const std::vector<Permutation> s3 = enumerate_avoiders(3, PatternSet());
  const std::vector<Permutation> s4 = enumerate_avoiders(4, PatternSet());
  std::vector<PatternSet> sets;
  for (unsigned mask = 1; mask < 63; ++mask) {  // proper nonempty subsets: |T| <= 5
    std::vector<Permutation> members;
    for (int b = 0; b < 6; ++b)
      if (mask & (1u << b)) members.push_back(s3[static_cast<size_t>(b)]);
    sets.emplace_back(std::move(members));
  }
  std::sort(sets.begin(), sets.end(),
            [](const PatternSet& a, const PatternSet& b) { return a.key() < b.key(); });
  PairPopulation pop;
  pop.descriptor = "nonempty T subset of S3, |T| <= 5, crossed with tau in S4";
  pop.pairs.reserve(sets.size() * s4.size());
  for (const auto& T : sets)
    for (const auto& tau : s4) pop.pairs.push_back({T, tau});
  return pop;
}

WilfClassReport partition(const PairPopulation& population, Window w, int jobs) {
  check_window(w);
  const auto& pairs = population.pairs;
  const int count = static_cast<int>(pairs.size());
  std::vector<std::vector<BigInt>> vecs(pairs.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int i = 0; i < count; ++i)
    vecs[static_cast<size_t>(i)] =
        count_vector(pairs[static_cast<size_t>(i)].set, pairs[static_cast<size_t>(i)].tau, w, 1);

  std::map<std::vector<BigInt>, std::vector<size_t>> groups;
  for (size_t i = 0; i < pairs.size(); ++i) groups[vecs[i]].push_back(i);

  WilfClassReport report;
  report.window = w;
  for (auto& [vec, idxs] : groups) {
    WilfClass c;
    c.vec = vec;
    for (size_t i : idxs) c.members.push_back(pairs[i]);
    c.size = c.members.size();
    const TablePair* rep = &c.members.front();
    for (const auto& m : c.members) {
      auto mk = std::make_pair(m.set.key(), m.tau);
      auto rk = std::make_pair(rep->set.key(), rep->tau);
      if (mk < rk) rep = &m;
    }
    c.rep_set = rep->set;
    c.rep_tau = rep->tau;
    c.formula = formula_match(vec, w);
    report.classes.push_back(std::move(c));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const WilfClass& a, const WilfClass& b) {
              return std::make_pair(a.rep_set.key(), a.rep_tau) <
                     std::make_pair(b.rep_set.key(), b.rep_tau);
            });
  return report;
}

const std::vector<ReferenceSequence>& formula_catalog() {
  static const std::vector<ReferenceSequence> catalog = [] {
    std::vector<ReferenceSequence> v;
    v.push_back({"0 (Erdos-Szekeres)", [](int) -> BigInt { return 0; }});
    v.push_back({"c_n", [](int n) -> BigInt { return catalan(n); }});
    v.push_back({"f_{2n-2}", [](int n) -> BigInt { return fib_shifted(2 * n - 2); }});
    v.push_back({"1+(n-1)2^(n-2)",
                 [](int n) -> BigInt { return 1 + BigInt(n - 1) * pow2(n - 2); }});
    v.push_back({"3*2^(n-1)-C(n+1,2)-1",
                 [](int n) -> BigInt { return 3 * pow2(n - 1) - binomial(n + 1, 2) - 1; }});
    v.push_back({"C(n,4)+2C(n,3)+n",
                 [](int n) -> BigInt { return binomial(n, 4) + 2 * binomial(n, 3) + n; }});
    v.push_back({"gf:(1-x)^3/(1-4x+5x^2-3x^3)", [](int n) -> BigInt {
                   static const RationalGF g(IntPolynomial({1, -3, 3, -1}),
                                             IntPolynomial({1, -4, 5, -3}));
                   return expand(g, n)[static_cast<size_t>(n)];
                 }});
    v.push_back({"C(n,4)+C(n+1,4)+C(n,2)+1", [](int n) -> BigInt {
                   return binomial(n, 4) + binomial(n + 1, 4) + binomial(n, 2) + 1;
                 }});
    v.push_back({"2^(n+1)-C(n+1,3)-2n-1", [](int n) -> BigInt {
                   return pow2(n + 1) - binomial(n + 1, 3) - 2 * n - 1;
                 }});
    v.push_back({"C(n,5)+2C(n,4)+C(n,3)+C(n,2)+1", [](int n) -> BigInt {
                   return binomial(n, 5) + 2 * binomial(n, 4) + binomial(n, 3) +
                          binomial(n, 2) + 1;
                 }});
    v.push_back({"2^(n-1)", [](int n) -> BigInt { return pow2(n - 1); }});
    v.push_back({"C(n,2)+1", [](int n) -> BigInt { return binomial(n, 2) + 1; }});
    v.push_back({"2n-2", [](int n) -> BigInt { return BigInt(2) * n - 2; }});
    v.push_back({"f_{n+2}-1", [](int n) -> BigInt { return fib_std(n + 2) - 1; }});
    v.push_back({"3n-5", [](int n) -> BigInt { return BigInt(3) * n - 5; }});
    v.push_back({"t_n", [](int n) -> BigInt { return tribonacci_like(n); }});
    v.push_back({"n", [](int n) -> BigInt { return BigInt(n); }});
    v.push_back({"3", [](int) -> BigInt { return 3; }});
    v.push_back({"f_{n+1}", [](int n) -> BigInt { return fib_std(n + 1); }});
    v.push_back({"4", [](int) -> BigInt { return 4; }});
    v.push_back({"2", [](int) -> BigInt { return 2; }});
    v.push_back({"1", [](int) -> BigInt { return 1; }});
    return v;
  }();
  return catalog;
}

std::string formula_match(const std::vector<BigInt>& vec, Window w) {
  check_window(w);
  if (static_cast<int>(vec.size()) != w.hi - w.lo + 1)
    throw DomainError("vector length does not match the window");
  for (const auto& entry : formula_catalog()) {
    bool ok = true;
    for (int n = w.lo; n <= w.hi && ok; ++n) {
      try {
        if (entry.eval(n) != vec[static_cast<size_t>(n - w.lo)]) ok = false;
      } catch (const DomainError&) {
        ok = false;
      }
    }
    if (ok) return entry.name;
  }
  return "unrecognized";
}

const std::vector<TableRow>& embedded_table() {
  static const std::vector<TableRow> rows = [] {
    std::ifstream in(PAVOID_TABLE_DATA);
    if (!in)
      throw ParseError(std::string("reference table not readable: ") + PAVOID_TABLE_DATA);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
      throw ParseError(std::string("reference table malformed: ") + e.what());
    }
    std::vector<TableRow> out;
    for (const auto& row : j.at("rows")) {
      TableRow r;
      std::string joined;
      for (const auto& s : row.at("set")) {
        if (!joined.empty()) joined += ",";
        joined += s.get<std::string>();
      }
      r.set = PatternSet::parse(joined);
      r.tau = Permutation::parse(row.at("tau").get<std::string>());
      r.size = row.at("size").get<std::size_t>();
      r.formula = row.at("formula").get<std::string>();
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

WilfClassReport table_s3_s4(Window window, int n_max, int jobs) {
  PairPopulation pop = table_population();
  WilfClassReport report = partition(pop, window, jobs);
  if (n_max > window.hi) {
    Window ext{window.hi + 1, n_max};
    for (auto& c : report.classes) {
      std::vector<BigInt> extra = count_vector(c.rep_set, c.rep_tau, ext, jobs);
      c.vec.insert(c.vec.end(), extra.begin(), extra.end());
    }
  }

  std::map<std::pair<std::string, Permutation>, size_t> where;
  for (size_t ci = 0; ci < report.classes.size(); ++ci)
    for (const auto& m : report.classes[ci].members)
      where[{m.set.key(), m.tau}] = ci;

  for (const auto& row : embedded_table()) {
    auto it = where.find({row.set.key(), row.tau});
    if (it == where.end()) {
      TableDiffEntry d;
      d.rep_set = row.set;
      d.rep_tau = row.tau;
      d.expected_size = row.size;
      d.expected_formula = row.formula;
      d.explanation = "representative pair not present in the population";
      report.table_diff.push_back(std::move(d));
      continue;
    }
    const WilfClass& c = report.classes[it->second];
    const bool size_ok = c.size == row.size;
    const bool formula_ok = c.formula == row.formula;
    if (size_ok && formula_ok) continue;

    TableDiffEntry d;
    d.rep_set = row.set;
    d.rep_tau = row.tau;
    d.expected_size = row.size;
    d.computed_size = c.size;
    d.expected_formula = row.formula;
    d.matched_formula = c.formula;
    for (size_t i = 0; i < c.members.size() && i < 4; ++i)
      d.witnesses.push_back(c.members[i]);

    // Tally members by |T|, split into contains-a-member pairs (counted by
    // base count) and surviving pairs, so a size mismatch is auditable.
    std::map<std::pair<size_t, bool>, size_t> tally;
    for (const auto& m : c.members)
      ++tally[{m.set.size(), contains_member(m.set, m.tau)}];
    std::ostringstream ex;
    ex << "class of " << pair_label(row.set, row.tau) << " holds " << c.size
       << " pairs on window [" << window.lo << "," << window.hi
       << "], reference row lists " << row.size;
    if (!formula_ok)
      ex << "; matched formula \"" << c.formula << "\" vs reference \"" << row.formula
         << "\"";
    ex << "; member breakdown";
    for (const auto& [key, cnt] : tally)
      ex << " |T|=" << key.first << (key.second ? " tau-contains-member: " : " surviving: ")
         << cnt << ",";
    std::string text = ex.str();
    if (text.back() == ',') text.pop_back();
    d.explanation = text;
    report.table_diff.push_back(std::move(d));
  }
  return report;
}

std::vector<VerifyEntry> VerifyReport::discrepancies() const {
  std::vector<VerifyEntry> out;
  for (const auto& e : entries)
    if (e.spec.status.kind == VerifyStatus::Kind::discrepant_at) out.push_back(e);
  return out;
}

VerifyReport verify_closed_forms(int k_max, int n_max, int jobs) {
  if (k_max > 6) throw ResourceLimitError("verification sweep capped at k_max = 6");
  if (n_max > 11)
    throw ResourceLimitError("verification sweep capped at n_max = 11");
  VerifyReport report;
  report.k_max = k_max;
  report.n_max = n_max;

  const std::vector<Permutation> s3 = enumerate_avoiders(3, PatternSet());
  std::vector<PatternSet> sets;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<Permutation> members;
    for (int b = 0; b < 6; ++b)
      if (mask & (1u << b)) members.push_back(s3[static_cast<size_t>(b)]);
    if (members.size() < 2 || members.size() > 5) continue;
    sets.emplace_back(std::move(members));
  }
  std::sort(sets.begin(), sets.end(),
            [](const PatternSet& a, const PatternSet& b) { return a.key() < b.key(); });

  for (int k = 4; k <= k_max; ++k)
    for (const auto& T : sets)
      for (const auto& tau : enumerate_avoiders(k, T, jobs))
        report.entries.push_back({T, tau, classify(T, tau, n_max, jobs)});
  return report;
}

namespace {

nlohmann::ordered_json set_json(const PatternSet& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : s.patterns()) arr.push_back(p.str());
  return arr;
}

nlohmann::ordered_json pair_json(const PatternSet& s, const Permutation& t) {
  nlohmann::ordered_json j;
  j["T"] = set_json(s);
  j["tau"] = t.str();
  return j;
}

nlohmann::ordered_json vec_json(const std::vector<BigInt>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

nlohmann::ordered_json status_json(const VerifyStatus& st) {
  nlohmann::ordered_json j;
  switch (st.kind) {
    case VerifyStatus::Kind::unverified:
      j["kind"] = "unverified";
      break;
    case VerifyStatus::Kind::verified_to:
      j["kind"] = "verified_to";
      j["n"] = st.n;
      break;
    case VerifyStatus::Kind::discrepant_at:
      j["kind"] = "discrepant_at";
      j["n"] = st.n;
      j["printed"] = st.printed.str();
      j["true"] = st.oracle.str();
      break;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const WilfClassReport& report) {
  nlohmann::ordered_json j;
  j["window"] = {report.window.lo, report.window.hi};
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& c : report.classes) {
    nlohmann::ordered_json cj;
    cj["rep"] = pair_json(c.rep_set, c.rep_tau);
    cj["size"] = c.size;
    cj["vector"] = vec_json(c.vec);
    cj["formula"] = c.formula;
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  nlohmann::ordered_json diff = nlohmann::ordered_json::array();
  for (const auto& d : report.table_diff) {
    nlohmann::ordered_json dj;
    dj["rep"] = pair_json(d.rep_set, d.rep_tau);
    dj["expected_size"] = d.expected_size;
    dj["computed_size"] = d.computed_size;
    dj["expected_formula"] = d.expected_formula;
    dj["matched_formula"] = d.matched_formula;
    nlohmann::ordered_json wits = nlohmann::ordered_json::array();
    for (const auto& wpair : d.witnesses) wits.push_back(pair_json(wpair.set, wpair.tau));
    dj["witnesses"] = std::move(wits);
    dj["explanation"] = d.explanation;
    diff.push_back(std::move(dj));
  }
  j["table_diff"] = std::move(diff);
  return j;
}

nlohmann::ordered_json verify_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["k_max"] = report.k_max;
  j["n_max"] = report.n_max;
  j["total"] = report.entries.size();
  j["discrepant"] = report.discrepancies().size();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json ej;
    ej["T"] = set_json(e.set);
    ej["tau"] = e.tau.str();
    ej["kind"] = to_string(e.spec.kind);
    ej["provenance"] = e.spec.provenance;
    ej["validity_from"] = e.spec.validity_from;
    ej["status"] = status_json(e.spec.status);
    entries.push_back(std::move(ej));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace pavoid
