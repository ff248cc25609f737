#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pavoid/errors.hpp"
#include "pavoid/permutation.hpp"

using namespace pavoid;

TEST_CASE("parse accepts digit and separated forms") {
  CHECK(Permutation::parse("3412").values() == std::vector<int>{3, 4, 1, 2});
  CHECK(Permutation::parse("3 4 1 2") == Permutation::parse("3412"));
  CHECK(Permutation::parse("3,4,1,2") == Permutation::parse("3412"));
  CHECK(Permutation::parse("10,9,8,7,6,5,4,3,2,1") == Permutation::decreasing(10));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Permutation::parse("3411"), ParseError);
  try {
    Permutation::parse("3411");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("repeated value 1") != std::string::npos);
  }
  CHECK_THROWS_AS(Permutation::parse("134"), ParseError);  // 2 missing, 4 out of range
  CHECK_THROWS_AS(Permutation::parse("0123"), ParseError);
  CHECK_THROWS_AS(Permutation::parse(""), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1,2,x"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("12a"), ParseError);
}

TEST_CASE("str/parse round-trip up to length 12") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 12; ++n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(v.begin(), v.end(), rng);
      Permutation p{std::vector<int>(v)};
      CHECK(Permutation::parse(p.str()) == p);
    }
  }
}

TEST_CASE("containment basics") {
  const Permutation host = Permutation::parse("3412");
  CHECK(host.contains(Permutation::parse("12")));
  CHECK(host.contains(Permutation::parse("231")));  // 3,4,1 or 3,4,2
  CHECK_FALSE(host.contains(Permutation::parse("213")));
  CHECK(host.avoids(Permutation::parse("213")));
  CHECK(host.contains(Permutation::parse("3412")));
  CHECK_FALSE(host.contains(Permutation::parse("12345")));
  // every permutation contains the empty pattern and each singleton
  CHECK(host.contains(Permutation{}));
  CHECK(host.contains(Permutation::parse("1")));
}

TEST_CASE("backtracking matcher agrees with the subset scanner") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int rep = 0; rep < 40; ++rep) {
      std::shuffle(v.begin(), v.end(), rng);
      Permutation host{std::vector<int>(v)};
      for (const char* pat :
           {"123", "132", "213", "231", "312", "321", "1234", "2143", "3412"}) {
        Permutation p = Permutation::parse(pat);
        CHECK(host.contains(p) == contains_naive(host, p));
      }
    }
  }
}

TEST_CASE("last-element matcher only reports occurrences using the last slot") {
  // 1,3,2 ends at 2: pattern 12 occurs ending there (1,2), pattern 21 too (3,2).
  CHECK(seq_contains_ending_at_last({1, 3, 2}, {1, 2}));
  CHECK(seq_contains_ending_at_last({1, 3, 2}, {2, 1}));
  // 123 occurs in 1,2,3,1? hosts need not be permutations of 1..n here.
  CHECK(seq_contains({5, 9, 7}, {1, 3, 2}));
  // pattern 123 occurs in (2,4,6,1) but no occurrence ends at the final 1
  CHECK(seq_contains({2, 4, 6, 1}, {1, 2, 3}));
  CHECK_FALSE(seq_contains_ending_at_last({2, 4, 6, 1}, {1, 2, 3}));
}

TEST_CASE("unary symmetries behave") {
  const Permutation p = Permutation::parse("3421");
  CHECK(p.reverse() == Permutation::parse("1243"));
  CHECK(p.complement() == Permutation::parse("2134"));
  CHECK(p.inverse() == Permutation::parse("4312"));
  for (const char* s : {"1", "21", "231", "3412", "45123"}) {
    Permutation q = Permutation::parse(s);
    CHECK(q.reverse().reverse() == q);
    CHECK(q.complement().complement() == q);
    CHECK(q.inverse().inverse() == q);
    // reverse-complement commutes
    CHECK(q.reverse().complement() == q.complement().reverse());
  }
}

TEST_CASE("monotone checks") {
  CHECK(Permutation::parse("1234").is_increasing());
  CHECK(Permutation::parse("4321").is_decreasing());
  CHECK(Permutation::parse("1").is_increasing());
  CHECK(Permutation::parse("1").is_decreasing());
  CHECK_FALSE(Permutation::parse("132").is_increasing());
  CHECK_FALSE(Permutation::parse("132").is_decreasing());
}

TEST_CASE("pattern sets sort, deduplicate and key") {
  PatternSet s = PatternSet::parse("132,123,132");
  CHECK(s.size() == 2);
  CHECK(s.key() == "123,132");
  CHECK(s.member(Permutation::parse("123")));
  CHECK_FALSE(s.member(Permutation::parse("321")));
  CHECK(PatternSet::parse("").empty());
  CHECK_THROWS_AS(PatternSet::parse("123,311"), ParseError);
}

TEST_CASE("set symmetries act memberwise") {
  PatternSet s = PatternSet::parse("123,132");
  CHECK(s.complement() == PatternSet::parse("321,312"));
  CHECK(s.reverse() == PatternSet::parse("321,231"));
  CHECK(s.inverse() == PatternSet::parse("123,132"));  // both self-inverse
  PatternSet t = PatternSet::parse("213,231");
  CHECK(t.reverse() == PatternSet::parse("312,132"));
}

TEST_CASE("apply_symmetry composes inverse first") {
  const Permutation p = Permutation::parse("3142");
  CHECK(apply_symmetry(p, SymmetryTag::identity) == p);
  CHECK(apply_symmetry(p, SymmetryTag::reverse) == p.reverse());
  CHECK(apply_symmetry(p, SymmetryTag::complement) == p.complement());
  CHECK(apply_symmetry(p, SymmetryTag::inverse) == p.inverse());
  CHECK(apply_symmetry(p, SymmetryTag::reverse_inverse) == p.inverse().reverse());
  CHECK(apply_symmetry(p, SymmetryTag::complement_inverse) == p.inverse().complement());
  CHECK(apply_symmetry(p, SymmetryTag::reverse_complement) == p.complement().reverse());
  CHECK(apply_symmetry(p, SymmetryTag::reverse_complement_inverse) ==
        p.inverse().complement().reverse());
}

TEST_CASE("the eight symmetries are distinct as maps and form closed images") {
  // on S_4 the 8 images of an asymmetric permutation are pairwise distinct
  const Permutation p = Permutation::parse("1342");
  std::vector<Permutation> images;
  for (SymmetryTag tag : kAllSymmetries) images.push_back(apply_symmetry(p, tag));
  std::sort(images.begin(), images.end());
  CHECK(std::unique(images.begin(), images.end()) == images.end());

  auto tuples = symmetry_images(PatternSet::parse("213,231"), Permutation::parse("1234"));
  CHECK(tuples.size() == 8);
  bool found = false;
  for (const auto& [tag, set, tau] : tuples) {
    if (tag == SymmetryTag::reverse) {
      CHECK(set == PatternSet::parse("132,312"));
      CHECK(tau == Permutation::parse("4321"));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("containment is preserved by every symmetry") {
  std::mt19937 rng(3);
  std::vector<int> v{1, 2, 3, 4, 5, 6, 7};
  for (int rep = 0; rep < 30; ++rep) {
    std::shuffle(v.begin(), v.end(), rng);
    Permutation host{std::vector<int>(v)};
    for (const char* pat : {"123", "231", "3142"}) {
      Permutation p = Permutation::parse(pat);
      for (SymmetryTag tag : kAllSymmetries) {
        CHECK(host.contains(p) ==
              apply_symmetry(host, tag).contains(apply_symmetry(p, tag)));
      }
    }
  }
}

TEST_CASE("pattern-set reduction example") {
  auto tuples = symmetry_images(PatternSet::parse("123,213"), Permutation::parse("3421"));
  // reverse_complement maps {123,213} onto {123,132} (132 and 213 swap)
  for (const auto& [tag, set, tau] : tuples) {
    if (tag == SymmetryTag::reverse_complement) {
      CHECK(set == PatternSet::parse("123,132"));
    }
  }
}
