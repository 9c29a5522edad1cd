#pragma once

#include <string>

#include "dblcone/rat.hpp"

namespace dblcone {

// The double cone X has two small resolutions V and U, one per plane pencil
// on the quadric; each is a degree-2 del Pezzo fibration over P^1 and the
// two are exchanged by the regular involution of the cover.
enum class Model { V, U };

inline const char* model_name(Model m) { return m == Model::V ? "V" : "U"; }
inline Model other_model(Model m) {
  return m == Model::V ? Model::U : Model::V;
}

// Class a.F1 + b.F2 in Cl(X) = Z[F1] + Z[F2].
struct DivisorClassX {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const DivisorClassX&, const DivisorClassX&) = default;
};

// Class -n.K + m.F on a small resolution, where F is the fiber class of the
// model's fibration (F1 on V, F2 on U).  n is the adjunction threshold when
// the class comes out of model_transfer.
struct DivisorClassV {
  Model model = Model::V;
  long long n = 0;
  long long m = 0;
  friend bool operator==(const DivisorClassV&, const DivisorClassV&) = default;
};

// Element of A^2 = Q.s + Q.f: s the numerical section class (s1 and s2 agree
// numerically), f a line in a fiber.
struct CycleClass {
  Rat sigma;
  Rat phi;
  friend bool operator==(const CycleClass&, const CycleClass&) = default;

  CycleClass operator+(const CycleClass& o) const {
    return {sigma + o.sigma, phi + o.phi};
  }
};

inline DivisorClassV anti_k(Model md = Model::V) { return {md, 1, 0}; }
inline DivisorClassV fiber_class(Model md = Model::V) { return {md, 0, 1}; }
// The other pencil's class on the current model: F2 = -K - F1 on V.
inline DivisorClassV other_pencil(Model md = Model::V) { return {md, 1, -1}; }

// c2 of the tangent sheaf, as a 1-cycle class.
inline CycleClass c2_class() { return {Rat(10), Rat(24)}; }

// Trilinear extension of the basis table (-K)^3 = 4, (-K)^2 F = 2,
// (-K) F^2 = F^3 = 0.  The table is the same on V and U.
Rat div_triple(const DivisorClassV& d1, const DivisorClassV& d2,
               const DivisorClassV& d3);

// D1 o D2 as a 1-cycle: (-K)^2 = 2s + 4f, (-K) o F = 2f, F o F = 0.
CycleClass div_product_class(const DivisorClassV& d1, const DivisorClassV& d2);

// Pairing table: (-K) o s = 0, (-K) o f = 1, F o s = 1, F o f = 0.
Rat div_cycle_pair(const DivisorClassV& d, const CycleClass& c);

// Rewrites a.F1 + b.F2 as -n.K + m.F on the target model; throws when m
// would be negative, naming the other model as the valid choice.
DivisorClassV model_transfer(const DivisorClassX& x, Model target);

// The model on which the transfer has m >= 0, i.e. n = min(a, b) is
// achieved.  Prefers V when both work.
Model choose_model(const DivisorClassX& x);

// Inverse of model_transfer.
DivisorClassX expand(const DivisorClassV& d);

}  // namespace dblcone
