#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblcone/graph.hpp"
#include "dblcone/rat.hpp"

namespace dblcone {

// Position of the second center B1 when q = 1.  Lines live inside E1 and
// occur only when L = 1; points require L >= 2.
enum class B1Position { PointOffFiber, PointOnFiber, LineInFiber, LineOffFiber };

const char* b1_position_name(B1Position p);

// Caller-asserted multiplicity bookkeeping for one candidate singularity
// over a point of s1 (or in general position).  All exclusion checkers
// treat these as data to be validated, never as solved-for unknowns.
struct SingularityData {
  long long n = 1;
  long long m = 0;
  Rat alpha1 = Rat(0);  // coefficient of s1 in D1 o D2
  Rat alpha2 = Rat(0);  // coefficient of s2
  long long p = 1;      // fibers carrying maximal singularities
  Rat mh = Rat(0);      // horizontal multiplicity at B0
  Rat mv = Rat(0);      // vertical multiplicity at B0
  std::vector<Rat> mh_levels;         // horizontal mult per point level
  std::vector<Rat> d;                 // degrees of the exceptional curves
  std::vector<std::vector<Rat>> mij;  // mij[k-1][i-k-1] = m_{k,i}, k < i <= L
  std::optional<Rat> theta;           // (nu1 + nu2) / 2
  std::optional<B1Position> b1;
  bool condition_a = true;  // fibers smooth along double vertical lines
};

struct TraceLine {
  std::string name;
  Rat lhs;
  std::string rel;  // one of < <= > >= ==
  Rat rhs;
  bool holds = false;
};

enum class ExVerdict { Excluded, InputInfeasible, Escape };

const char* verdict_name(ExVerdict v);

// The trace records every inequality evaluated, in chain order, each
// re-checkable from the input alone.  `failed` names the first validation
// or hypothesis that is false on the data; for verdict "excluded" the last
// line is the chain's impossible target.
struct ExclusionCertificate {
  std::string case_label;
  std::vector<TraceLine> trace;
  std::vector<std::string> notes;
  std::vector<std::string> consequences;
  std::string failed;
  ExVerdict verdict = ExVerdict::Escape;
};

// phi(Sigma1) = (n Sigma1 - m r1)^2 / ((r1 + Sigma1) r1).
Rat phi_at(long long n, long long m, long long r1, const Rat& sigma1);

// Certified lower bound of phi at its admissible minimum,
// (2n - theta)^2 (n + m) / (theta - n).  Requires theta > n.
Rat phi_lower_bound(long long n, long long m, const Rat& theta);

// B0 in general position (not on s1 or s2): the chain drives at the
// impossible square (n Sigma1 - e)^2 < 0.
ExclusionCertificate exclusion_point_general(const SingularityData& data,
                                             const ResolutionGraph& g);

// B0 on s1: derives p = 1 and the fiber dominance Sigma0' > Sigma0 / 2,
// then hands the datum to the infinitely near dispatch.
ExclusionCertificate exclusion_point_on_s1(const SingularityData& data,
                                           const ResolutionGraph& g);

// Dispatch on q and the position of B1.  Throws std::invalid_argument when
// q is unset or a required B1 flag is missing.
ExclusionCertificate exclusion_infinitely_near(const SingularityData& data,
                                               const ResolutionGraph& g);

// Two curve centers claimed maximal at once: 2n >= nu1 + nu2 > 2n.
ExclusionCertificate two_curves_exclusion(long long n, const Rat& nu1,
                                          const Rat& nu2);

}  // namespace dblcone
