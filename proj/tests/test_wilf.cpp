#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pavoid/errors.hpp"
#include "pavoid/sequences.hpp"
#include "pavoid/wilf.hpp"

using namespace pavoid;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
PatternSet S(const char* s) { return PatternSet::parse(s); }

using PairKey = std::pair<std::string, std::string>;
PairKey key_of(const PatternSet& T, const Permutation& tau) {
  return {T.key(), tau.str()};
}

// every pair whose printed closed form disagrees with the oracle at k = 4,
// all first failing at n = 5; frozen from an independent enumeration run
const std::map<PairKey, std::tuple<long long, long long>>& known_discrepancies() {
  static const std::map<PairKey, std::tuple<long long, long long>> m = {
      // chain forms printing 11 where the count is 10
      {{"123,132", "3421"}, {11, 10}},
      {{"123,132", "4312"}, {11, 10}},
      {{"123,213", "3421"}, {11, 10}},
      {{"123,213", "4312"}, {11, 10}},
      {{"231,321", "1243"}, {11, 10}},
      {{"231,321", "2134"}, {11, 10}},
      {{"312,321", "1243"}, {11, 10}},
      {{"312,321", "2134"}, {11, 10}},
      // four-set kronecker forms, one survivor overcounted
      {{"123,132,213,231", "4312"}, {2, 1}},
      {{"123,132,213,312", "3421"}, {2, 1}},
      {{"132,231,312,321", "2134"}, {2, 1}},
      {{"213,231,312,321", "1243"}, {2, 1}},
      {{"123,132,213,231", "4321"}, {1, 0}},
      {{"123,132,213,312", "4321"}, {1, 0}},
      {{"132,231,312,321", "1234"}, {1, 0}},
      {{"213,231,312,321", "1234"}, {1, 0}},
      {{"123,132,231,312", "3214"}, {2, 1}},
      {{"123,213,231,312", "1432"}, {2, 1}},
      {{"132,213,231,321", "4123"}, {2, 1}},
      {{"132,213,312,321", "2341"}, {2, 1}},
      {{"123,132,231,312", "4321"}, {1, 0}},
      {{"123,213,231,312", "4321"}, {1, 0}},
      {{"132,213,231,321", "1234"}, {1, 0}},
      {{"132,213,312,321", "1234"}, {1, 0}},
      // five-set forms
      {{"123,132,213,231,312", "4321"}, {1, 0}},
      {{"132,213,231,312,321", "1234"}, {1, 0}},
  };
  return m;
}

}  // namespace

TEST_CASE("count_vector") {
  CHECK(count_vector(S("123"), P("1234"), {0, 6}) ==
        std::vector<BigInt>{1, 1, 2, 5, 14, 42, 132});
  CHECK(count_vector(S("123,132,231"), P("3214"), {4, 8}) ==
        std::vector<BigInt>{3, 3, 3, 3, 3});
  CHECK(count_vector(S("123,321"), P("2413"), {5, 8}) ==
        std::vector<BigInt>{0, 0, 0, 0});
  // window caps: 12 for singleton hosts, 13 otherwise
  CHECK_THROWS_AS(count_vector(S("123"), P("4321"), {0, 13}), ResourceLimitError);
  CHECK(count_vector(S("123,132"), P("3412"), {13, 13}) == std::vector<BigInt>{79});
  CHECK_THROWS_AS(count_vector(S("123,132"), P("3412"), {14, 14}),
                  ResourceLimitError);
}

TEST_CASE("formula_match") {
  Window w{7, 11};
  std::vector<BigInt> cat;
  for (int n = 7; n <= 11; ++n) cat.push_back(catalan(n));
  CHECK(formula_match(cat, w) == "c_n");
  CHECK(formula_match({0, 0, 0, 0, 0}, w) == "0 (Erdos-Szekeres)");
  CHECK(formula_match({11, 13, 15, 17}, {8, 11}) == "unrecognized");
  CHECK_THROWS_AS(formula_match({1, 2, 3}, w), DomainError);
}

TEST_CASE("formula catalog spot values") {
  const auto& cat = formula_catalog();
  CHECK(cat.size() == 22);
  auto find = [&](const std::string& name) -> const ReferenceSequence& {
    for (const auto& r : cat)
      if (r.name == name) return r;
    throw std::runtime_error("missing catalog entry " + name);
  };
  CHECK(find("c_n").eval(10) == 16796);
  CHECK(find("f_{2n-2}").eval(4) == 13);    // 13, 34, 89, ... at n = 4, 5, 6
  CHECK(find("f_{2n-2}").eval(5) == 34);
  CHECK(find("t_n").eval(5) == 13);
  CHECK(find("f_{n+1}").eval(6) == 13);
  CHECK(find("f_{n+2}-1").eval(5) == 12);
  CHECK(find("2^(n-1)").eval(8) == 128);
  CHECK(find("C(n,2)+1").eval(13) == 79);
  CHECK(find("2n-2").eval(9) == 16);
  CHECK(find("3n-5").eval(5) == 10);
  CHECK(find("n").eval(7) == 7);
  CHECK(find("gf:(1-x)^3/(1-4x+5x^2-3x^3)").eval(4) == 13);
}

TEST_CASE("population") {
  auto pop = table_population();
  CHECK(pop.pairs.size() == 1488);
  std::set<std::string> keys;
  for (const auto& pr : pop.pairs) {
    CHECK(pr.set.size() >= 1);
    CHECK(pr.set.size() <= 5);
    CHECK(pr.tau.size() == 4);
    keys.insert(pr.set.key());
  }
  CHECK(keys.size() == 62);
}

TEST_CASE("partition groups remark pairs into one class") {
  PairPopulation pop;
  pop.descriptor = "taus of length 4 against the single host {123}";
  for (const auto& tau : enumerate_avoiders(4, PatternSet()))
    pop.pairs.push_back({S("123"), tau});
  auto report = partition(pop, {0, 6});
  CHECK(report.window == Window{0, 6});
  std::size_t total = 0;
  bool found_catalan = false;
  for (const auto& c : report.classes) {
    total += c.size;
    CHECK(c.members.size() == c.size);
    if (c.vec == std::vector<BigInt>{1, 1, 2, 5, 14, 42, 132}) {
      found_catalan = true;
      // exactly the ten taus containing 123 collapse to the base count
      CHECK(c.size == 10);
      for (const auto& m : c.members) CHECK(m.tau.contains(P("123")));
    }
  }
  CHECK(total == 24);
  CHECK(found_catalan);
}

TEST_CASE("closed-form audit against the oracle") {
  auto report = verify_closed_forms(4, 11);
  CHECK(report.k_max == 4);
  CHECK(report.n_max == 11);
  CHECK(report.entries.size() == 204);

  const auto& want = known_discrepancies();
  std::map<PairKey, std::tuple<long long, long long>> got;
  for (const auto& e : report.entries) {
    CHECK(e.spec.status.kind != VerifyStatus::Kind::unverified);
    if (e.spec.status.kind == VerifyStatus::Kind::discrepant_at) {
      CHECK(e.spec.status.n == 5);
      got[key_of(e.set, e.tau)] = {
          static_cast<long long>(e.spec.status.printed),
          static_cast<long long>(e.spec.status.oracle)};
    } else {
      CHECK(e.spec.status.n == 11);
    }
  }
  CHECK(got.size() == 26);
  CHECK(got == want);
  CHECK(report.discrepancies().size() == 26);

  auto j = verify_to_json(report);
  CHECK(j["total"] == 204);
  CHECK(j["discrepant"] == 26);
  CHECK(j["entries"].size() == 204);
}

TEST_CASE("full class audit on the reference window") {
  auto report = table_s3_s4();
  CHECK(report.window == Window{7, 11});
  CHECK(report.classes.size() == 22);

  std::multiset<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& c : report.classes) {
    sizes.insert(c.size);
    total += c.size;
    CHECK(c.members.size() == c.size);
    CHECK(c.formula != "");
  }
  CHECK(total == 1488);
  CHECK(sizes == std::multiset<std::size_t>{2, 2, 4, 4, 4, 6, 6, 8, 8, 12, 12, 24,
                                            38, 46, 46, 56, 60, 118, 160, 198, 282,
                                            392});

  // no class fails to match a catalog formula on this window
  for (const auto& c : report.classes) CHECK(c.formula != "unrecognized");

  // exactly two reference rows disagree, both on class size only
  REQUIRE(report.table_diff.size() == 2);
  const auto& d0 = report.table_diff[0];
  CHECK(d0.rep_set == S("123"));
  CHECK(d0.rep_tau == P("4321"));
  CHECK(d0.expected_size == 490);
  CHECK(d0.computed_size == 392);
  CHECK(d0.expected_formula == "0 (Erdos-Szekeres)");
  CHECK(d0.matched_formula == "0 (Erdos-Szekeres)");
  CHECK(!d0.witnesses.empty());
  CHECK(d0.explanation.find("392") != std::string::npos);

  const auto& d1 = report.table_diff[1];
  CHECK(d1.rep_set == S("123,132,213,231"));
  CHECK(d1.rep_tau == P("1234"));
  CHECK(d1.expected_size == 100);
  CHECK(d1.computed_size == 198);
  CHECK(d1.matched_formula == "2");
  CHECK(!d1.explanation.empty());

  // the computed classes respect the symmetry group: the image of a class
  // under any symmetry lands inside a single class
  std::map<PairKey, std::size_t> cls;
  for (std::size_t i = 0; i < report.classes.size(); ++i)
    for (const auto& m : report.classes[i].members)
      cls[key_of(m.set, m.tau)] = i;
  CHECK(cls.size() == 1488);
  for (const auto& c : report.classes) {
    for (SymmetryTag tag : kAllSymmetries) {
      std::set<std::size_t> images;
      for (const auto& m : c.members)
        images.insert(cls.at(key_of(apply_symmetry(m.set, tag),
                                    apply_symmetry(m.tau, tag))));
      CHECK(images.size() == 1);
    }
  }

  // a wider window can only refine: every class computed on [6,11] stays
  // inside a single class from [7,11]
  auto finer = partition(table_population(), {6, 11});
  CHECK(finer.classes.size() >= report.classes.size());
  for (const auto& c : finer.classes) {
    std::set<std::size_t> coarse;
    for (const auto& m : c.members) coarse.insert(cls.at(key_of(m.set, m.tau)));
    CHECK(coarse.size() == 1);
  }

  // json rendering round-trips the vectors as decimal strings
  auto j = report_to_json(report);
  CHECK(j["window"] == nlohmann::ordered_json::array({7, 11}));
  CHECK(j["classes"].size() == 22);
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& jc = j["classes"][i];
    CHECK(jc["size"] == report.classes[i].size);
    std::vector<BigInt> back;
    for (const auto& s : jc["vector"]) back.emplace_back(s.get<std::string>());
    CHECK(back == report.classes[i].vec);
  }
  CHECK(j["table_diff"].size() == 2);
}

TEST_CASE("embedded reference table") {
  const auto& rows = embedded_table();
  CHECK(rows.size() == 22);
  CHECK(rows.front().set == S("123"));
  CHECK(rows.front().tau == P("4321"));
  CHECK(rows.front().size == 490);
  CHECK(rows.front().formula == "0 (Erdos-Szekeres)");
  CHECK(rows.back().set == S("123,132,213,231"));
  CHECK(rows.back().tau == P("4312"));
  CHECK(rows.back().formula == "1");
  std::size_t claimed = 0;
  for (const auto& r : rows) claimed += r.size;
  CHECK(claimed == 1488);  // the printed sizes still cover the population
}

TEST_CASE("verify caps") {
  CHECK_THROWS_AS(verify_closed_forms(7, 11), ResourceLimitError);
  CHECK_THROWS_AS(verify_closed_forms(4, 12), ResourceLimitError);
}
