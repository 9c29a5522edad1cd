#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dblcone/rat.hpp"

namespace dblcone {

// Blow-up tower of a singularity: vertices 1..N are the blow-ups, with
// B_0..B_{L-1} points and B_L..B_{N-1} curves.  An arrow i -> j (i > j)
// records that B_{i-1} lies on the strict transform of E_j; the consecutive
// arrow i -> i-1 is structural and always implied.
struct ResolutionGraph {
  int N = 1;
  int L = 1;
  int L_prime = 1;       // max i <= L with B_{i-1} on the fiber transform
  std::optional<int> q;  // max i <= L with B_{i-1} on the s1 transform
  std::vector<std::pair<int, int>> extra_arrows;  // (i, j) with i >= j + 2
  std::vector<Rat> nu;   // nu_1 >= ... >= nu_N > 0

  bool has_arrow(int i, int j) const;
  void validate() const;  // throws std::invalid_argument on any violation
};

// r_N = 1, r_i = sum of r_j over arrows j -> i; equals the number of
// directed paths from vertex N to vertex i.
std::vector<long long> path_counts(const ResolutionGraph& g);

// Same recursion with sources restricted to j <= L for the point levels,
// seeded with 1 at the topmost point level; curve levels keep their full
// counts.  L = N degenerates to path_counts.
std::vector<long long> truncated_path_counts(const ResolutionGraph& g);

// Aggregates of one count vector against the ladder.
struct GraphSums {
  std::vector<long long> r;
  long long sigma0 = 0;        // sum over point levels
  long long sigma1 = 0;        // sum over curve levels
  long long sigma0_prime = 0;  // sum over levels <= L'
  Rat weighted_nu;             // sum r_i nu_i
  Rat weighted_nu_sq;          // sum r_i nu_i^2
};

GraphSums graph_sums(const ResolutionGraph& g, bool truncated = false);

// e = sum r_i nu_i - 2n Sigma0 - n Sigma1; e > 0 is the maximality test.
Rat nfi_excess(const ResolutionGraph& g, long long n);

// sum r_i nu_i > 2n Sigma0 + n Sigma1 + m Sigma0' (full counts).
bool strong_nfi_check(const ResolutionGraph& g, long long n, long long m);

// (2n Sigma0 + n Sigma1 + e)^2 / (Sigma0 + Sigma1); a lower bound for
// sum r_i nu_i^2 by Cauchy-Schwarz whenever e = nfi_excess(g, n).
Rat quadratic_lower_bound(const ResolutionGraph& g, long long n, const Rat& e);

}  // namespace dblcone
