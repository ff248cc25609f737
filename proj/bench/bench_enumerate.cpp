// Timing comparison: parallel DFS vs serial reference vs naive filter.
#include <chrono>
#include <iostream>

#include "pavoid/enumerate.hpp"
#include "pavoid/permutation.hpp"

using namespace pavoid;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double timed(const char* label, F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  auto result = fn();
  double dt = seconds_since(t0);
  std::cout << label << ": " << result << " avoiders in " << dt << " s\n";
  return dt;
}

}  // namespace

int main() {
  const PatternSet single = PatternSet::parse("123");
  const PatternSet pair = PatternSet::parse("123,132");

  std::cout << "-- S_n(123), n = 12 --\n";
  double par = timed("parallel", [&] { return enumerate_avoiders(12, single).size(); });
  double ser = timed("serial  ", [&] { return enumerate_avoiders_serial(12, single).size(); });
  std::cout << "speedup: " << ser / par << "x\n";

  std::cout << "-- S_n(123,132), n = 13 --\n";
  par = timed("parallel", [&] { return enumerate_avoiders(13, pair).size(); });
  ser = timed("serial  ", [&] { return enumerate_avoiders_serial(13, pair).size(); });
  std::cout << "speedup: " << ser / par << "x\n";

  std::cout << "-- naive reference, S_n(123), n = 8 --\n";
  timed("naive   ", [&] { return naive_enumerate(8, single).size(); });
  timed("parallel", [&] { return enumerate_avoiders(8, single).size(); });
  return 0;
}
