#include "pavoid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pavoid/errors.hpp"

namespace pavoid {

namespace {

void validate_one_line(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : v) {
    if (x < 1 || x > n) {
      throw ParseError("value " + std::to_string(x) + " out of range 1.." +
                       std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(x)]) {
      throw ParseError("repeated value " + std::to_string(x));
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

// Assign pattern slot j to host positions >= from, keeping relative order
// consistent with the slots already placed (sel[0..j-1]). pin_last forces
// the final slot onto the last host position.
bool match_rec(const std::vector<int>& h, const std::vector<int>& p,
               std::vector<int>& sel, int j, int from, bool pin_last) {
  const int n = static_cast<int>(h.size());
  const int k = static_cast<int>(p.size());
  if (j == k) return true;
  int lo = from;
  int hi = n - (k - j);  // leave room for the remaining slots
  if (pin_last && j == k - 1) lo = hi = n - 1;
  for (int pos = lo; pos <= hi; ++pos) {
    bool ok = true;
    for (int t = 0; t < j && ok; ++t) {
      ok = (p[static_cast<std::size_t>(t)] < p[static_cast<std::size_t>(j)]) ==
           (h[static_cast<std::size_t>(sel[static_cast<std::size_t>(t)])] <
            h[static_cast<std::size_t>(pos)]);
    }
    if (!ok) continue;
    sel[static_cast<std::size_t>(j)] = pos;
    if (match_rec(h, p, sel, j + 1, pos + 1, pin_last)) return true;
  }
  return false;
}

bool seq_match(const std::vector<int>& host, const std::vector<int>& pattern,
               bool pin_last) {
  if (pattern.empty()) return true;
  if (pattern.size() > host.size()) return false;
  std::vector<int> sel(pattern.size(), -1);
  return match_rec(host, pattern, sel, 0, 0, pin_last);
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : data_(std::move(one_line)) {
  validate_one_line(data_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  const std::string seps = " ,\t";
  std::vector<int> vals;
  try {
    if (text.find_first_of(seps) != std::string::npos) {
      std::string tok;
      std::string norm = text;
      std::replace(norm.begin(), norm.end(), ',', ' ');
      std::istringstream nin(norm);
      while (nin >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &used);
        } catch (const std::exception&) {
          throw ParseError("bad token \"" + tok + "\"");
        }
        if (used != tok.size()) throw ParseError("bad token \"" + tok + "\"");
        vals.push_back(v);
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') {
          throw ParseError(std::string("bad character '") + c + "'");
        }
        vals.push_back(c - '0');
      }
    }
    if (vals.empty()) throw ParseError("empty permutation text");
    return Permutation(std::move(vals));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in permutation \"" + text + "\"");
  }
}

Permutation Permutation::reverse() const {
  std::vector<int> v(data_.rbegin(), data_.rend());
  return Permutation(std::move(v));
}

Permutation Permutation::complement() const {
  const int n = size();
  std::vector<int> v(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) v[i] = n + 1 - data_[i];
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) {
    v[static_cast<std::size_t>(data_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(v));
}

bool Permutation::contains(const Permutation& pattern) const {
  return seq_match(data_, pattern.data_, false);
}

bool Permutation::is_increasing() const {
  return std::is_sorted(data_.begin(), data_.end());
}

bool Permutation::is_decreasing() const {
  return std::is_sorted(data_.rbegin(), data_.rend());
}

std::string Permutation::str() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(data_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.str();
}

bool seq_contains(const std::vector<int>& host, const std::vector<int>& pattern) {
  return seq_match(host, pattern, false);
}

bool seq_contains_ending_at_last(const std::vector<int>& host,
                                 const std::vector<int>& pattern) {
  return seq_match(host, pattern, true);
}

bool contains_naive(const Permutation& host, const Permutation& pattern) {
  const int n = host.size();
  const int k = pattern.size();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = a + 1; b < k && ok; ++b) {
        ok = (pattern[a] < pattern[b]) ==
             (host[idx[static_cast<std::size_t>(a)]] <
              host[idx[static_cast<std::size_t>(b)]]);
      }
    }
    if (ok) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
}

PatternSet PatternSet::parse(const std::string& text) {
  std::vector<Permutation> pats;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    const auto a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    const auto b = tok.find_last_not_of(" \t");
    pats.push_back(Permutation::parse(tok.substr(a, b - a + 1)));
  }
  return PatternSet(std::move(pats));
}

bool PatternSet::member(const Permutation& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

PatternSet PatternSet::reverse() const {
  std::vector<Permutation> out;
  out.reserve(patterns_.size());
  for (const auto& p : patterns_) out.push_back(p.reverse());
  return PatternSet(std::move(out));
}

PatternSet PatternSet::complement() const {
  std::vector<Permutation> out;
  out.reserve(patterns_.size());
  for (const auto& p : patterns_) out.push_back(p.complement());
  return PatternSet(std::move(out));
}

PatternSet PatternSet::inverse() const {
  std::vector<Permutation> out;
  out.reserve(patterns_.size());
  for (const auto& p : patterns_) out.push_back(p.inverse());
  return PatternSet(std::move(out));
}

std::string PatternSet::key() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ',';
    out += patterns_[i].str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PatternSet& s) {
  return os << '{' << s.key() << '}';
}

std::string to_string(SymmetryTag tag) {
  switch (tag) {
    case SymmetryTag::identity: return "identity";
    case SymmetryTag::reverse: return "reverse";
    case SymmetryTag::complement: return "complement";
    case SymmetryTag::reverse_complement: return "reverse-complement";
    case SymmetryTag::inverse: return "inverse";
    case SymmetryTag::reverse_inverse: return "reverse-inverse";
    case SymmetryTag::complement_inverse: return "complement-inverse";
    case SymmetryTag::reverse_complement_inverse:
      return "reverse-complement-inverse";
  }
  return "?";
}

Permutation apply_symmetry(const Permutation& p, SymmetryTag tag) {
  switch (tag) {
    case SymmetryTag::identity: return p;
    case SymmetryTag::reverse: return p.reverse();
    case SymmetryTag::complement: return p.complement();
    case SymmetryTag::reverse_complement: return p.complement().reverse();
    case SymmetryTag::inverse: return p.inverse();
    case SymmetryTag::reverse_inverse: return p.inverse().reverse();
    case SymmetryTag::complement_inverse: return p.inverse().complement();
    case SymmetryTag::reverse_complement_inverse:
      return p.inverse().complement().reverse();
  }
  return p;
}

PatternSet apply_symmetry(const PatternSet& s, SymmetryTag tag) {
  std::vector<Permutation> out;
  out.reserve(s.size());
  for (const auto& p : s.patterns()) out.push_back(apply_symmetry(p, tag));
  return PatternSet(std::move(out));
}

std::vector<std::tuple<SymmetryTag, PatternSet, Permutation>> symmetry_images(
    const PatternSet& T, const Permutation& tau) {
  std::vector<std::tuple<SymmetryTag, PatternSet, Permutation>> out;
  out.reserve(8);
  for (SymmetryTag tag : kAllSymmetries) {
    out.emplace_back(tag, apply_symmetry(T, tag), apply_symmetry(tau, tag));
  }
  return out;
}

}  // namespace pavoid
