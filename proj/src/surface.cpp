#include "dblcone/surface.hpp"

#include <stdexcept>

namespace dblcone {

namespace {

// Gram matrices over the ordered bases.  HEE and GE1E2 share one form;
// HPrimeEE is its diagonalization through h' = h + e + e*.
constexpr long long kGramHEE[3][3] = {{0, 1, 1}, {1, -1, 0}, {1, 0, -1}};
constexpr long long kGramHP[3][3] = {{2, 0, 0}, {0, -1, 0}, {0, 0, -1}};
constexpr long long kGramDP2[3][3] = {{2, 1, 1}, {1, -1, 2}, {1, 2, -1}};

Rat pair_with(const long long (&gram)[3][3], const std::array<long long, 3>& u,
              const std::array<long long, 3>& v) {
  Rat acc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      acc += Rat(gram[i][j]) * Rat(u[i]) * Rat(v[j]);
  return acc;
}

void require_basis(const FibSurfaceClass& c, SurfaceBasis b,
                   const char* what) {
  if (c.basis != b)
    throw std::invalid_argument(std::string(what) +
                                ": class is in the wrong basis");
}

}  // namespace

Rat surf_pair(const FibSurfaceClass& c1, const FibSurfaceClass& c2) {
  if (c1.basis != c2.basis)
    throw std::invalid_argument("surf_pair: basis mismatch");
  if (c1.basis == SurfaceBasis::HPrimeEE) return pair_with(kGramHP, c1.c, c2.c);
  return pair_with(kGramHEE, c1.c, c2.c);
}

Rat surf_pair(const DP2Class& c1, const DP2Class& c2) {
  return pair_with(kGramDP2, {c1.n, -c1.k1, -c1.k2}, {c2.n, -c2.k1, -c2.k2});
}

FibSurfaceClass to_hprime(const FibSurfaceClass& c) {
  require_basis(c, SurfaceBasis::HEE, "to_hprime");
  // x.h + y.e + z.e* = x.h' + (y - x).e + (z - x).e*
  return {SurfaceBasis::HPrimeEE, {c.c[0], c.c[1] - c.c[0], c.c[2] - c.c[0]}};
}

FibSurfaceClass to_hee(const FibSurfaceClass& c) {
  require_basis(c, SurfaceBasis::HPrimeEE, "to_hee");
  return {SurfaceBasis::HEE, {c.c[0], c.c[0] + c.c[1], c.c[0] + c.c[2]}};
}

namespace {

// h -> h, e -> 2h - e + 2e*, e* -> e* on coordinates (x, y, z).
std::array<long long, 3> reflect(const std::array<long long, 3>& c) {
  return {c[0] + 2 * c[1], -c[1], 2 * c[1] + c[2]};
}

}  // namespace

FibSurfaceClass bertini_pullback(const FibSurfaceClass& c) {
  require_basis(c, SurfaceBasis::HEE, "bertini_pullback");
  return {SurfaceBasis::HEE, reflect(c.c)};
}

FibSurfaceClass fiber_reflection_pullback(const FibSurfaceClass& c) {
  require_basis(c, SurfaceBasis::GE1E2, "fiber_reflection_pullback");
  return {SurfaceBasis::GE1E2, reflect(c.c)};
}

std::array<Rat, 3> bertini_action_hprime(const Rat& n, const Rat& nu,
                                         const Rat& nustar) {
  return {Rat(3) * n - Rat(2) * nu, Rat(4) * n - Rat(3) * nu, nustar};
}

std::pair<long long, long long> dp2_line_degrees(const DP2Class& c) {
  return {c.n + c.k1 - 2 * c.k2, c.n - 2 * c.k1 + c.k2};
}

Rat mult_sum_bound_reducible(long long n, long long m, long long k1,
                             long long k2) {
  if (m < 0) throw std::invalid_argument("mult_sum_bound: m must be >= 0");
  auto [d1, d2] = dp2_line_degrees({n, k1, k2});
  if (d1 < 0 || d2 < 0)
    throw std::invalid_argument(
        "mult_sum_bound: marks violate effectivity (C o L < 0)");
  return dblcone::min(Rat(n + 3 * k1 - 2 * k2 + m), Rat(5 * n, 2) + Rat(m));
}

Rat mult_sum_bound_irreducible(long long n, long long m, long long k) {
  if (m < 0) throw std::invalid_argument("mult_sum_bound: m must be >= 0");
  if (2 * n - 2 * k < 0)
    throw std::invalid_argument(
        "mult_sum_bound: marks violate effectivity (C o L < 0)");
  return Rat(2 * n + m);
}

}  // namespace dblcone
