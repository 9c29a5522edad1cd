#include "dblcone/graph.hpp"

#include <stdexcept>
#include <string>

namespace dblcone {

bool ResolutionGraph::has_arrow(int i, int j) const {
  if (i == j + 1 && i >= 2 && i <= N) return true;
  for (auto [a, b] : extra_arrows)
    if (a == i && b == j) return true;
  return false;
}

void ResolutionGraph::validate() const {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (L < 1 || L > N) throw std::invalid_argument("L out of range [1, N]");
  if (L_prime < 1 || L_prime > L)
    throw std::invalid_argument("L' out of range [1, L]");
  if (q && (*q < 1 || *q > L)) throw std::invalid_argument("q out of range [1, L]");
  for (size_t a = 0; a < extra_arrows.size(); ++a) {
    auto [i, j] = extra_arrows[a];
    if (j < 1 || i > N || i < j + 2)
      throw std::invalid_argument("arrow " + std::to_string(i) + " -> " +
                                  std::to_string(j) +
                                  " violates i >= j + 2 within [1, N]");
    for (size_t b = 0; b < a; ++b)
      if (extra_arrows[b] == extra_arrows[a])
        throw std::invalid_argument("duplicate arrow");
  }
  if ((int)nu.size() != N)
    throw std::invalid_argument("ladder length must equal N");
  for (int i = 0; i < N; ++i) {
    if (!(Rat(0) < nu[i]))
      throw std::invalid_argument("ladder entries must be positive");
    if (i > 0 && nu[i - 1] < nu[i])
      throw std::invalid_argument("ladder not non-increasing");
  }
}

namespace {

long long checked_add(long long a, long long b) {
  long long s;
  if (__builtin_add_overflow(a, b, &s))
    throw std::overflow_error("path count overflow");
  return s;
}

}  // namespace

std::vector<long long> path_counts(const ResolutionGraph& g) {
  g.validate();
  std::vector<long long> r(g.N + 1, 0);
  r[g.N] = 1;
  for (int i = g.N - 1; i >= 1; --i) {
    long long sum = r[i + 1];  // consecutive arrow
    for (auto [a, b] : g.extra_arrows)
      if (b == i) sum = checked_add(sum, r[a]);
    r[i] = sum;
  }
  return std::vector<long long>(r.begin() + 1, r.end());
}

std::vector<long long> truncated_path_counts(const ResolutionGraph& g) {
  auto r = path_counts(g);
  std::vector<long long> rh(g.N + 1, 0);
  for (int i = g.L + 1; i <= g.N; ++i) rh[i] = r[i - 1];
  rh[g.L] = 1;
  for (int i = g.L - 1; i >= 1; --i) {
    long long sum = rh[i + 1];
    for (auto [a, b] : g.extra_arrows)
      if (b == i && a <= g.L) sum = checked_add(sum, rh[a]);
    rh[i] = sum;
  }
  return std::vector<long long>(rh.begin() + 1, rh.end());
}

GraphSums graph_sums(const ResolutionGraph& g, bool truncated) {
  GraphSums s;
  s.r = truncated ? truncated_path_counts(g) : path_counts(g);
  for (int i = 1; i <= g.N; ++i) {
    long long ri = s.r[i - 1];
    if (i <= g.L)
      s.sigma0 = checked_add(s.sigma0, ri);
    else
      s.sigma1 = checked_add(s.sigma1, ri);
    if (i <= g.L_prime) s.sigma0_prime = checked_add(s.sigma0_prime, ri);
    s.weighted_nu += Rat(ri) * g.nu[i - 1];
    s.weighted_nu_sq += Rat(ri) * g.nu[i - 1].square();
  }
  return s;
}

Rat nfi_excess(const ResolutionGraph& g, long long n) {
  auto s = graph_sums(g);
  return s.weighted_nu - Rat(2 * n) * Rat(s.sigma0) - Rat(n) * Rat(s.sigma1);
}

bool strong_nfi_check(const ResolutionGraph& g, long long n, long long m) {
  auto s = graph_sums(g);
  Rat rhs = Rat(2 * n) * Rat(s.sigma0) + Rat(n) * Rat(s.sigma1) +
            Rat(m) * Rat(s.sigma0_prime);
  return rhs < s.weighted_nu;
}

Rat quadratic_lower_bound(const ResolutionGraph& g, long long n, const Rat& e) {
  auto s = graph_sums(g);
  Rat num = Rat(2 * n) * Rat(s.sigma0) + Rat(n) * Rat(s.sigma1) + e;
  return num.square() / (Rat(s.sigma0) + Rat(s.sigma1));
}

}  // namespace dblcone
