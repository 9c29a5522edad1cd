#pragma once

#include <array>
#include <utility>

#include "dblcone/rat.hpp"

namespace dblcone {

// Rank-3 Picard sublattices of the blown-up fiber surfaces.
//
//   HEE      (h, e, e*):   h^2 = 0, h.e = h.e* = 1, e^2 = e*^2 = -1, e.e* = 0
//   HPrimeEE (h', e, e*):  h' = h + e + e*, so h'^2 = 2, h'.e = h'.e* = 0
//   GE1E2    (g, e1, e2):  same form as HEE
enum class SurfaceBasis { HEE, HPrimeEE, GE1E2 };

struct FibSurfaceClass {
  SurfaceBasis basis = SurfaceBasis::HEE;
  std::array<long long, 3> c{0, 0, 0};
  friend bool operator==(const FibSurfaceClass&,
                         const FibSurfaceClass&) = default;
};

// Class n.(-K_S) - k1.L1 - k2.L2 on the degree-2 del Pezzo fiber, L1 and L2
// the two conjugate (-1)-lines of a reducible anticanonical member.
// Form: (-K)^2 = 2, (-K).Li = 1, Li^2 = -1, L1.L2 = 2.
struct DP2Class {
  long long n = 0;
  long long k1 = 0;
  long long k2 = 0;
  friend bool operator==(const DP2Class&, const DP2Class&) = default;
};

// Symmetric bilinear form; both classes must be written in the same basis.
Rat surf_pair(const FibSurfaceClass& c1, const FibSurfaceClass& c2);
Rat surf_pair(const DP2Class& c1, const DP2Class& c2);

FibSurfaceClass to_hprime(const FibSurfaceClass& c);  // HEE -> HPrimeEE
FibSurfaceClass to_hee(const FibSurfaceClass& c);     // HPrimeEE -> HEE

// Pullback of the Bertini involution of the double cover of P^2:
// h -> h, e -> 2h - e + 2e*, e* -> e*.  HEE coordinates only.
FibSurfaceClass bertini_pullback(const FibSurfaceClass& c);

// Pullback of the fiber reflection: g -> g, e1 -> 2g - e1 + 2e2, e2 -> e2.
// GE1E2 coordinates only.
FibSurfaceClass fiber_reflection_pullback(const FibSurfaceClass& c);

// Coefficient action of bertini_pullback on n.h' - nu.e - nustar.e*:
// returns (3n - 2nu, 4n - 3nu, nustar) in the same writing.
std::array<Rat, 3> bertini_action_hprime(const Rat& n, const Rat& nu,
                                         const Rat& nustar);

// (C o L1, C o L2) = (n + k1 - 2k2, n - 2k1 + k2).
std::pair<long long, long long> dp2_line_degrees(const DP2Class& c);

// Upper bound on nu + nu~ for D|_S = C + k1.L1 + k2.L2 with the two marked
// point multiplicities nu = mult C + k1, nu~ = mult C^1 + k1 + m:
// min(n + 3k1 - 2k2 + m, 5n/2 + m).  Requires both line degrees >= 0.
Rat mult_sum_bound_reducible(long long n, long long m, long long k1,
                             long long k2);

// Same bound for an irreducible anticanonical member L (L^2 = 2) and
// D|_S = C + k.L: returns 2n + m.  Requires C o L = 2n - 2k >= 0.
Rat mult_sum_bound_irreducible(long long n, long long m, long long k);

}  // namespace dblcone
