#pragma once

#include <map>
#include <string>
#include <vector>

namespace dblcone {

// Sweep bounds.  Ladder entries run over k / denom for
// 1 <= k <= floor(5 n denom / 2), non-increasing; the fiber shift m runs
// 0..m_max; towers take every arrow subset, every L <= min(N, L_max) and
// every L' <= L.
struct EnumBounds {
  long long n_max = 1;
  int N_max = 1;
  int L_max = 1;
  long long denom = 1;
  long long m_max = 2;
  bool condition_a = true;
};

struct EnumReport {
  long long candidates = 0;
  long long excluded = 0;
  long long input_infeasible = 0;
  std::map<std::string, long long> by_case;
  std::map<std::string, long long> by_reason;
  std::vector<std::string> escapes;  // sorted candidate encodings

  friend bool operator==(const EnumReport&, const EnumReport&) = default;
};

// Number of candidates the sweep would submit, without running any checker.
long long enumerate_dry_count(const EnumBounds& bounds);

// Run every candidate through the point checkers and tally the verdicts.
// `parallel` distributes (n, N, graph, L, L') slots across OpenMP threads
// with per-slot buffers merged in slot order; the serial path is a plain
// nested loop.  Both produce identical reports.
EnumReport enumerate_verify(const EnumBounds& bounds, bool parallel);

}  // namespace dblcone
