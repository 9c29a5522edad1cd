#include "dblcone/rr.hpp"

#include <stdexcept>

namespace dblcone {

Rat chi_line_bundle(const DivisorClassV& d) {
  DivisorClassV mk = anti_k(d.model);
  CycleClass k2_c2 = div_product_class(mk, mk) + c2_class();
  return div_triple(d, d, d) / Rat(6) + div_triple(d, d, mk) / Rat(4) +
         div_cycle_pair(d, k2_c2) / Rat(12) + Rat(1);
}

namespace {

long long binom4(long long t) {
  // C(t, 4), zero for t < 4.
  if (t < 4) return 0;
  return t * (t - 1) * (t - 2) * (t - 3) / 24;
}

}  // namespace

long long cone_quadric_count(long long degree) {
  if (degree < 0) return 0;
  return binom4(degree + 4) - binom4(degree + 2);
}

Rat blowup_triple(long long n, const Rat& nu, long long alpha, long long m_G) {
  if (alpha != 2 && alpha != 3)
    throw std::invalid_argument("alpha must be 2 or 3");
  DivisorClassV d{Model::V, n, 0};
  DivisorClassV g{Model::V, 2, 0};
  CycleClass b{1, alpha};
  Rat e3 = Rat(2) - div_cycle_pair(anti_k(), b);
  return div_triple(d, d, g) - Rat(2 * m_G) * nu * div_cycle_pair(d, b) -
         nu.square() * div_cycle_pair(g, b) - nu.square() * Rat(m_G) * e3;
}

const char* gate_verdict_name(GateVerdict v) {
  switch (v) {
    case GateVerdict::Admissible: return "admissible";
    case GateVerdict::ExcludedAtGate: return "excluded-at-gate";
    case GateVerdict::ExcludedByBlowup: return "excluded-by-blowup";
  }
  return "?";
}

GateVerdict horizontal_degree_gate(long long n, const Rat& eps,
                                   const Rat& alpha) {
  if (!(Rat(n * n) < eps))
    throw std::invalid_argument("eps must exceed n^2 for a maximal curve");
  if (!alpha.is_integer() || alpha.is_negative())
    throw std::invalid_argument("alpha must be a non-negative integer");
  if (alpha < Rat(2)) return GateVerdict::Admissible;
  // alpha >= 4 never reaches the blow-up branch: alpha*eps >= 4*eps > 4n^2.
  if (!(Rat(4 * n * n) < alpha * eps)) return GateVerdict::ExcludedByBlowup;
  return GateVerdict::ExcludedAtGate;
}

}  // namespace dblcone
