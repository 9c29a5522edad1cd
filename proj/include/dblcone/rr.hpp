#pragma once

#include "dblcone/lattice.hpp"
#include "dblcone/rat.hpp"

namespace dblcone {

// chi(O(D)) = D^3/6 + D^2(-K)/4 + D(K^2 + c2)/12 + 1; exact, and an
// integer for every integral class.
Rat chi_line_bundle(const DivisorClassV& d);

// Dimension of degree-d hypersurface sections of the quadric cone in P^4:
// monomials of degree d minus multiples of the defining quadric.
long long cone_quadric_count(long long degree = 2);

// (psi*D - nu E)^2 (psi*G - m_G E) on the blow-up of a curve of class
// s + alpha f, with D = -nK and G in |-2K| of multiplicity m_G along the
// curve.  Only alpha in {2, 3} occurs for a maximal curve that survives
// the degree gate.
Rat blowup_triple(long long n, const Rat& nu, long long alpha,
                  long long m_G = 1);

enum class GateVerdict { Admissible, ExcludedAtGate, ExcludedByBlowup };
const char* gate_verdict_name(GateVerdict v);

// Screen alpha * eps <= 4n^2 for a maximal curve of horizontal degree
// alpha and self-intersection budget eps > n^2.  alpha in {0, 1} is
// admissible; alpha in {2, 3} passing the gate falls to blowup_triple;
// everything else fails the gate outright.
GateVerdict horizontal_degree_gate(long long n, const Rat& eps,
                                   const Rat& alpha);

}  // namespace dblcone
