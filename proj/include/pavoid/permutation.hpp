#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace pavoid {

// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  // Accepts "3412" (digits, n <= 9), "3 4 1 2", or "3,4,1,2".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(data_.size()); }
  int operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return data_; }

  Permutation reverse() const;
  Permutation complement() const;
  Permutation inverse() const;

  bool contains(const Permutation& pattern) const;
  bool avoids(const Permutation& pattern) const { return !contains(pattern); }

  bool is_increasing() const;
  bool is_decreasing() const;

  // Compact digits when n <= 9, else space-separated.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> data_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Order-isomorphic containment on sequences of distinct ints; host need not
// be a permutation of 1..n (enumeration works on partial prefixes).
bool seq_contains(const std::vector<int>& host, const std::vector<int>& pattern);

// Same, but the occurrence must use the last host element. Lets the
// enumeration DFS test only the newly appended element.
bool seq_contains_ending_at_last(const std::vector<int>& host,
                                 const std::vector<int>& pattern);

// Reference matcher: scans every index subset. Independent of the
// backtracking matcher above; used to cross-check it.
bool contains_naive(const Permutation& host, const Permutation& pattern);

// Finite set of forbidden patterns, kept sorted and deduplicated.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);

  // Comma-separated list, e.g. "123,132". Empty string means the empty set.
  static PatternSet parse(const std::string& text);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }
  bool member(const Permutation& p) const;

  PatternSet reverse() const;
  PatternSet complement() const;
  PatternSet inverse() const;

  // Canonical comma-joined form, e.g. "123,132"; stable map key.
  std::string key() const;

  auto operator<=>(const PatternSet&) const = default;

 private:
  std::vector<Permutation> patterns_;
};

std::ostream& operator<<(std::ostream& os, const PatternSet& s);

// The group of order 8 generated by reverse, complement, inverse acting on
// permutation matrices (reverse = flip positions, complement = flip values,
// inverse = transpose). Composite tags apply inverse first, then the
// position/value flips: reverse_inverse(p) = reverse(inverse(p)).
enum class SymmetryTag {
  identity,
  reverse,
  complement,
  reverse_complement,
  inverse,
  reverse_inverse,
  complement_inverse,
  reverse_complement_inverse,
};

inline constexpr SymmetryTag kAllSymmetries[8] = {
    SymmetryTag::identity,
    SymmetryTag::reverse,
    SymmetryTag::complement,
    SymmetryTag::reverse_complement,
    SymmetryTag::inverse,
    SymmetryTag::reverse_inverse,
    SymmetryTag::complement_inverse,
    SymmetryTag::reverse_complement_inverse,
};

std::string to_string(SymmetryTag tag);

Permutation apply_symmetry(const Permutation& p, SymmetryTag tag);
PatternSet apply_symmetry(const PatternSet& s, SymmetryTag tag);

// Orbit of (T, tau) under the full group: one entry per group element, in
// kAllSymmetries order. Entries may repeat as pairs when the pair has a
// nontrivial stabilizer.
std::vector<std::tuple<SymmetryTag, PatternSet, Permutation>> symmetry_images(
    const PatternSet& T, const Permutation& tau);

}  // namespace pavoid
