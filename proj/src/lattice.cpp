#include "dblcone/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace dblcone {

namespace {

void require_same_model(Model a, Model b) {
  if (a != b)
    throw std::invalid_argument(std::string("model mismatch: ") +
                                model_name(a) + " vs " + model_name(b));
}

}  // namespace

// Basis products in {-K, F}: (-K)^3 = 4, (-K)^2 F = 2, (-K) F^2 = F^3 = 0.
// Mirror symmetry of the two models makes the table model-independent; the
// other pencil's class -K - F then satisfies F (-K - F)^2 = 2 and
// (-K - F)^3 = -2, i.e. (F2)^2 = s1 + s2 on V.
CycleClass div_product_class(const DivisorClassV& d1,
                             const DivisorClassV& d2) {
  require_same_model(d1.model, d2.model);
  Rat n1(d1.n), m1(d1.m), n2(d2.n), m2(d2.m);
  Rat sigma = Rat(2) * n1 * n2;
  Rat phi = Rat(4) * n1 * n2 + Rat(2) * (n1 * m2 + m1 * n2);
  return {sigma, phi};
}

Rat div_cycle_pair(const DivisorClassV& d, const CycleClass& c) {
  return Rat(d.n) * c.phi + Rat(d.m) * c.sigma;
}

Rat div_triple(const DivisorClassV& d1, const DivisorClassV& d2,
               const DivisorClassV& d3) {
  require_same_model(d1.model, d3.model);
  return div_cycle_pair(d3, div_product_class(d1, d2));
}

// -n.K + m.F1 = (n+m).F1 + n.F2 on V, and symmetrically on U.
DivisorClassV model_transfer(const DivisorClassX& x, Model target) {
  long long n = target == Model::V ? x.b : x.a;
  long long m = target == Model::V ? x.a - x.b : x.b - x.a;
  if (m < 0) {
    Model alt = other_model(target);
    throw std::invalid_argument(
        "class " + std::to_string(x.a) + ".F1 + " + std::to_string(x.b) +
        ".F2 has m = " + std::to_string(m) + " on " + model_name(target) +
        "; use model " + std::string(model_name(alt)) + " with (n=" +
        std::to_string(std::min(x.a, x.b)) + ", m=" +
        std::to_string(std::max(x.a, x.b) - std::min(x.a, x.b)) + ")");
  }
  return {target, n, m};
}

Model choose_model(const DivisorClassX& x) {
  return x.a >= x.b ? Model::V : Model::U;
}

DivisorClassX expand(const DivisorClassV& d) {
  if (d.model == Model::V) return {d.n + d.m, d.n};
  return {d.n, d.n + d.m};
}

}  // namespace dblcone
