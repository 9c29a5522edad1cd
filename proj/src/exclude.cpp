#include "dblcone/exclude.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dblcone {

namespace {

constexpr const char* kNormalizationNote =
    "quadratic lower bound uses the n*Sigma1 normalization of the excess "
    "expansion";
constexpr const char* kTruncationNote =
    "point-level path counts are truncated below the top point level";

// Sequential evaluator for one exclusion chain.  Validations gate the
// input; hypotheses are the paper-side facts a genuine maximal singularity
// must satisfy; derived lines restate consequences with concrete values.
// The chain ends at its impossible target, so a run with every hypothesis
// intact can only mean a soundness gap and is reported as an escape.
struct Chain {
  ExclusionCertificate cert;
  bool stopped = false;
  bool hypo_ok = true;

  explicit Chain(std::string label) { cert.case_label = std::move(label); }

  static bool eval(const Rat& l, const std::string& rel, const Rat& r) {
    if (rel == "<") return l < r;
    if (rel == "<=") return l <= r;
    if (rel == ">") return l > r;
    if (rel == ">=") return l >= r;
    return l == r;
  }

  void push(const std::string& name, const Rat& l, const std::string& rel,
            const Rat& r, bool h) {
    cert.trace.push_back({name, l, rel, r, h});
  }

  // Always-recorded precondition; failure ends the run as infeasible.
  bool validate(const std::string& name, const Rat& l, const std::string& rel,
                const Rat& r) {
    if (stopped) return false;
    bool h = eval(l, rel, r);
    push(name, l, rel, r, h);
    if (!h) {
      stopped = true;
      cert.failed = name;
      cert.verdict = ExVerdict::InputInfeasible;
    }
    return h;
  }

  // Silent precondition, recorded only when it fails.
  bool sanity(const std::string& name, const Rat& l, const std::string& rel,
              const Rat& r) {
    if (stopped) return false;
    bool h = eval(l, rel, r);
    if (!h) {
      push(name, l, rel, r, h);
      stopped = true;
      cert.failed = name;
      cert.verdict = ExVerdict::InputInfeasible;
    }
    return h;
  }

  bool hypothesis(const std::string& name, const Rat& l,
                  const std::string& rel, const Rat& r) {
    if (stopped || !hypo_ok) return false;
    bool h = eval(l, rel, r);
    push(name, l, rel, r, h);
    if (!h) {
      hypo_ok = false;
      cert.failed = name;
    }
    return h;
  }

  // Consequence of the hypotheses so far; skipped once one has failed,
  // since its value may no longer be well defined.
  void derived(const std::string& name, const Rat& l, const std::string& rel,
               const Rat& r) {
    if (stopped || !hypo_ok) return;
    push(name, l, rel, r, eval(l, rel, r));
  }

  void target(const std::string& name, const Rat& l, const std::string& rel,
              const Rat& r) {
    if (stopped) return;
    push(name, l, rel, r, eval(l, rel, r));
    cert.verdict = hypo_ok ? ExVerdict::Escape : ExVerdict::Excluded;
  }
};

// Shared preconditions.  The horizontal capacity is 2n^2 minus whatever
// the pencil base curves already consume; on s1 only alpha1 is subtracted
// because s2 stays away from the center.
void common_validations(Chain& ch, const SingularityData& d, const Rat& e,
                        bool on_s1) {
  Rat n(d.n), m(d.m);
  ch.sanity("n-positive", n, ">=", Rat(1));
  ch.sanity("m-nonnegative", m, ">=", Rat(0));
  ch.sanity("fiber-count-positive", Rat(d.p), ">=", Rat(1));
  ch.sanity("alpha1-nonnegative", d.alpha1, ">=", Rat(0));
  ch.sanity("alpha2-nonnegative", d.alpha2, ">=", Rat(0));
  ch.sanity("horizontal-nonnegative", d.mh, ">=", Rat(0));
  ch.sanity("vertical-nonnegative", d.mv, ">=", Rat(0));
  ch.validate("excess-positive", e, ">", Rat(0));
  Rat cap2 = Rat(2 * d.n * d.n);
  ch.validate("pencil-degree-capacity", d.alpha1 + d.alpha2, "<=", cap2);
  Rat hcap = on_s1 ? cap2 - d.alpha1 : cap2 - d.alpha1 - d.alpha2;
  ch.validate("horizontal-capacity", d.mh, "<=", hcap);
  ch.validate("anticanonical-capacity", d.mh + d.mv, "<=",
              Rat(4 * d.n * d.n) + Rat(4 * d.m * d.n));
}

// Bookkeeping rows for the q = 2 and q = 1 point chains: level i of the
// tower must account for nu_i^2 through the pencil base (alpha1 on the
// first `top` levels), the horizontal and vertical multiplicities, the
// earlier exceptional curves, and the curve of degree d_i cut on E_i.
bool validate_rows(Chain& ch, const SingularityData& d,
                   const ResolutionGraph& g, int top) {
  int L = g.L;
  bool shape = d.mh_levels.size() == static_cast<size_t>(L) &&
               d.d.size() == static_cast<size_t>(L) &&
               d.mij.size() == static_cast<size_t>(L - 1);
  if (shape)
    for (int k = 1; k < L; ++k)
      shape = shape && d.mij[static_cast<size_t>(k - 1)].size() ==
                           static_cast<size_t>(L - k);
  if (!ch.validate("bookkeeping-rows", Rat(shape ? 1 : 0), "==", Rat(1)))
    return false;
  if (!ch.sanity("horizontal-level-1", d.mh_levels[0], "==", d.mh))
    return false;
  for (int i = 1; i <= L; ++i) {
    Rat row = d.mh_levels[static_cast<size_t>(i - 1)];
    if (i <= top) row = row + d.alpha1;
    if (i == 1) row = row + d.mv;
    for (int k = 1; k < i; ++k)
      row = row + d.mij[static_cast<size_t>(k - 1)][static_cast<size_t>(
                      i - k - 1)];
    Rat need = g.nu[static_cast<size_t>(i - 1)].square() +
               d.d[static_cast<size_t>(i - 1)];
    if (!ch.validate("multiplicity-row-" + std::to_string(i), row, "==",
                     need))
      return false;
    if (!ch.sanity("degree-nonnegative-" + std::to_string(i),
                   d.d[static_cast<size_t>(i - 1)], ">=", Rat(0)))
      return false;
    for (int k = 1; k < i; ++k)
      if (!ch.sanity("correction-nonnegative-" + std::to_string(k) + "-" +
                         std::to_string(i),
                     d.mij[static_cast<size_t>(k - 1)][static_cast<size_t>(
                         i - k - 1)],
                     ">=", Rat(0)))
        return false;
    if (i >= 2 &&
        !ch.sanity("horizontal-monotone-" + std::to_string(i),
                   d.mh_levels[static_cast<size_t>(i - 1)], "<=",
                   d.mh_levels[static_cast<size_t>(i - 2)]))
      return false;
  }
  return true;
}

Rat truncated_nfi_rhs(const SingularityData& d, const GraphSums& T) {
  Rat n(d.n), m(d.m);
  return Rat(2) * n * Rat(T.sigma0) + n * Rat(T.sigma1) + m * Rat(T.r[0]);
}

// q >= 3: B2 sits on the s1 transform, hence off E1, so the two leading
// counts agree and the fiber levels can never dominate.
ExclusionCertificate chain_q_high(const SingularityData& d,
                                  const ResolutionGraph& g) {
  Chain ch("q>=3");
  Rat e = nfi_excess(g, d.n);
  common_validations(ch, d, e, true);
  ch.validate("fiber-section-separation", Rat(g.L_prime), "==", Rat(1));
  long long into_bottom = 0;
  for (const auto& a : g.extra_arrows)
    if (a.second == 1) ++into_bottom;
  ch.validate("strict-transform-separation", Rat(into_bottom), "==", Rat(0));
  if (ch.stopped) return ch.cert;

  auto S = graph_sums(g, false);
  ch.derived("first-count-equality", Rat(S.r[0]), "==", Rat(S.r[1]));
  ch.derived("dominance-ratio", Rat(2 * S.sigma0_prime), "<=", Rat(S.sigma0));
  ch.hypothesis("fiber-point-dominance", Rat(S.sigma0_prime), ">",
                Rat(S.sigma0) / Rat(2));
  ch.target("Sigma0' > Sigma0/2 contradiction", Rat(S.sigma0_prime), ">",
            Rat(S.sigma0) / Rat(2));
  return ch.cert;
}

// Shared tail of the q = 2 and q = 1 point chains: annihilation, the
// truncated strong NFI, and the transfer hypothesis that the pencil
// capacity refutes through alpha1 > 2n^2.
ExclusionCertificate chain_rows(const SingularityData& d,
                                const ResolutionGraph& g,
                                const std::string& label, int top) {
  Chain ch(label);
  ch.cert.notes.push_back(kTruncationNote);
  Rat n(d.n);
  Rat e = nfi_excess(g, d.n);
  common_validations(ch, d, e, true);
  if (top == 2) {
    ch.validate("fiber-section-separation", Rat(g.L_prime), "==", Rat(1));
  } else {
    ch.validate("center-shape", Rat(g.L), ">=", Rat(2));
    ch.validate("fiber-transform-shape", Rat(g.L_prime), "==", Rat(1));
  }
  if (ch.stopped) return ch.cert;
  if (!validate_rows(ch, d, g, top)) return ch.cert;

  auto T = graph_sums(g, true);
  int L = g.L;
  ch.hypothesis("fiber-anticanonical-degree", g.nu[0], "<=", Rat(2 * d.n));
  for (int k = 1; k < L; ++k) {
    Rat carried;
    for (int i = k + 1; i <= L; ++i)
      carried = carried +
                Rat(T.r[static_cast<size_t>(i - 1)]) *
                    d.mij[static_cast<size_t>(k - 1)][static_cast<size_t>(
                        i - k - 1)];
    ch.hypothesis("annihilation-level-" + std::to_string(k), carried, "<=",
                  Rat(T.r[static_cast<size_t>(k - 1)]) *
                      d.d[static_cast<size_t>(k - 1)]);
  }
  Rat rhs = truncated_nfi_rhs(d, T);
  ch.hypothesis("strong-nfi-truncated", T.weighted_nu, ">", rhs);

  Rat levels;
  for (int i = 1; i <= L; ++i)
    levels = levels + Rat(T.r[static_cast<size_t>(i - 1)]) *
                          d.mh_levels[static_cast<size_t>(i - 1)];
  Rat r1(T.r[0]);
  Rat capacity = Rat(4 * d.n * d.n) * Rat(T.sigma0) +
                 Rat(4 * d.m * d.n) * r1;
  if (top == 2) {
    ch.cert.notes.push_back(kNormalizationNote);
    Rat quotient = rhs.square() / Rat(T.sigma0 + T.sigma1);
    ch.derived("capacity-expansion", quotient, ">=", capacity);
    ch.hypothesis("quadratic-multiplicity-transfer",
                  (r1 + Rat(T.r[1])) * d.alpha1 + levels + r1 * d.mv, ">",
                  quotient);
  } else {
    ch.hypothesis("quadratic-multiplicity-transfer",
                  r1 * d.alpha1 + levels + r1 * d.mv, ">", capacity);
  }
  ch.target("alpha1 > 2n^2 contradiction", d.alpha1, ">", Rat(2 * d.n * d.n));
  return ch.cert;
}

// N = 1 tower over a point of s1: positive excess already means
// nu1 > 2n, so the degree hypothesis can never survive.
ExclusionCertificate chain_single_tower(const SingularityData& d,
                                        const ResolutionGraph& g) {
  Chain ch("q=1-off-s1");
  Rat e = nfi_excess(g, d.n);
  common_validations(ch, d, e, true);
  if (ch.stopped) return ch.cert;
  ch.hypothesis("fiber-anticanonical-degree", g.nu[0], "<=", Rat(2 * d.n));
  ch.target("nu1 <= 2n contradiction", g.nu[0], "<=", Rat(2 * d.n));
  return ch.cert;
}

// B1 a line inside the fiber transform: the strict transform of the
// maximal curve on the fiber has anticanonical degree 2n - nu1, which the
// first-level NFI pushes below nu2.
ExclusionCertificate chain_line_in_fiber(const SingularityData& d,
                                         const ResolutionGraph& g) {
  Chain ch("q=1-on-S");
  Rat n(d.n);
  Rat e = nfi_excess(g, d.n);
  common_validations(ch, d, e, true);
  ch.validate("center-shape", Rat(g.L), "==", Rat(1));
  if (ch.stopped) return ch.cert;

  auto T = graph_sums(g, true);
  ch.hypothesis("fiber-anticanonical-degree", g.nu[0], "<=", Rat(2 * d.n));
  ch.hypothesis("first-level-nfi", T.weighted_nu, ">",
                truncated_nfi_rhs(d, T));
  ch.derived("curve-excess", g.nu[1], ">", n);
  ch.derived("pair-excess", g.nu[0] + g.nu[1], ">", Rat(2 * d.n));
  ch.hypothesis("anticanonical-curve-degree", Rat(2 * d.n) - g.nu[0], ">=",
                g.nu[1]);
  ch.target("nu1+nu2 <= 2n contradiction", g.nu[0] + g.nu[1], "<=",
            Rat(2 * d.n));
  return ch.cert;
}

// B1 on the fiber transform (an infinitely near point with L' >= 2, or a
// line meeting the fiber transform when L = 1): the theta chain.  The
// reducible-fiber lemma caps nu1 + nu2 at 5n/2, which pins phi(Sigma1)
// above the pencil capacity 2n^2 and the transfer then demands
// alpha1 > 2n^2.
ExclusionCertificate chain_theta(const SingularityData& d,
                                 const ResolutionGraph& g, bool point) {
  Chain ch("q=1-on-S");
  ch.cert.notes.push_back(kNormalizationNote);
  if (point && g.L >= 2) ch.cert.notes.push_back(kTruncationNote);
  Rat n(d.n), m(d.m);
  Rat e = nfi_excess(g, d.n);
  common_validations(ch, d, e, true);
  if (point) {
    ch.validate("center-shape", Rat(g.L), ">=", Rat(2));
    ch.validate("fiber-transform-shape", Rat(g.L_prime), ">=", Rat(2));
  } else {
    ch.validate("center-shape", Rat(g.L), "==", Rat(1));
  }
  Rat half = (g.nu[0] + g.nu[1]) / Rat(2);
  ch.validate("theta-consistency", d.theta ? *d.theta : Rat(0), "==", half);
  ch.validate("fiber-smoothness-condition", Rat(d.condition_a ? 1 : 0), "==",
              Rat(1));
  if (ch.stopped) return ch.cert;

  auto full = path_counts(g);
  auto T = graph_sums(g, true);
  Rat r1(T.r[0]);
  Rat sigma1(T.sigma1);
  Rat theta = *d.theta;

  ch.hypothesis("fiber-anticanonical-degree", g.nu[0], "<=", Rat(2 * d.n));
  Rat nfi_lhs = r1 * g.nu[0];
  for (int i = g.L + 1; i <= g.N; ++i)
    nfi_lhs = nfi_lhs +
              Rat(full[static_cast<size_t>(i - 1)]) *
                  g.nu[static_cast<size_t>(i - 1)];
  ch.hypothesis("first-level-nfi", nfi_lhs, ">",
                Rat(2 * d.n) * r1 + n * sigma1 + m * r1);
  ch.derived("curve-excess", g.nu[1], ">", n);
  ch.derived("pair-threshold", theta, ">", n);
  ch.hypothesis("pair-degree-lemma", g.nu[0] + g.nu[1], "<=", Rat(5 * d.n, 2));
  if (ch.hypo_ok && !ch.stopped) {
    // theta > n holds here: the first-level NFI forces some curve level
    // above n, and the ladder then lifts nu1 and nu2 above n as well.
    Rat sigma_star = r1 * (Rat(2 * d.n) - theta + m) / (theta - n);
    Rat phi = phi_at(d.n, d.m, T.r[0], sigma1);
    Rat bound = phi_lower_bound(d.n, d.m, theta);
    ch.derived("curve-weight-dominance", sigma1, ">=", r1);
    ch.derived("curve-weight-threshold", sigma1, ">", sigma_star);
    ch.derived("phi-lower-bound", phi, ">", bound);
    ch.derived("phi-exceeds-capacity", phi, ">", Rat(2 * d.n * d.n));
    ch.hypothesis("quadratic-multiplicity-transfer",
                  d.alpha1 + d.mh + d.mv, ">",
                  Rat(4 * d.n * d.n) + Rat(4 * d.m * d.n) + phi);
  }
  ch.target("alpha1 > 2n^2 contradiction", d.alpha1, ">", Rat(2 * d.n * d.n));
  return ch.cert;
}

}  // namespace

const char* b1_position_name(B1Position p) {
  switch (p) {
    case B1Position::PointOffFiber: return "point-off-fiber";
    case B1Position::PointOnFiber: return "point-on-fiber";
    case B1Position::LineInFiber: return "line-in-fiber";
    case B1Position::LineOffFiber: return "line-off-fiber";
  }
  return "";
}

const char* verdict_name(ExVerdict v) {
  switch (v) {
    case ExVerdict::Excluded: return "excluded";
    case ExVerdict::InputInfeasible: return "input-infeasible";
    case ExVerdict::Escape: return "escape";
  }
  return "";
}

Rat phi_at(long long n, long long m, long long r1, const Rat& sigma1) {
  if (n < 1 || m < 0 || r1 < 1)
    throw std::invalid_argument("phi requires n >= 1, m >= 0, r1 >= 1");
  if (sigma1 < Rat(0))
    throw std::invalid_argument("Sigma1 must be nonnegative");
  return (Rat(n) * sigma1 - Rat(m * r1)).square() /
         ((Rat(r1) + sigma1) * Rat(r1));
}

Rat phi_lower_bound(long long n, long long m, const Rat& theta) {
  if (n < 1 || m < 0)
    throw std::invalid_argument("phi requires n >= 1, m >= 0, r1 >= 1");
  if (theta <= Rat(n))
    throw std::invalid_argument("excess forces theta > n");
  return (Rat(2 * n) - theta).square() * Rat(n + m) / (theta - Rat(n));
}

ExclusionCertificate exclusion_point_general(const SingularityData& d,
                                             const ResolutionGraph& g) {
  g.validate();
  Chain ch("point-general");
  ch.cert.notes.push_back(kNormalizationNote);
  Rat n(d.n);
  Rat e = nfi_excess(g, d.n);
  common_validations(ch, d, e, false);
  if (ch.stopped) return ch.cert;

  auto S = graph_sums(g, false);
  Rat s0(S.sigma0), s1(S.sigma1), s0p(S.sigma0_prime);
  Rat cap2 = Rat(2 * d.n * d.n);
  ch.hypothesis("fiber-anticanonical-degree", g.nu[0], "<=", Rat(2 * d.n));
  ch.derived("cauchy-schwarz", S.weighted_nu_sq, ">=",
             quadratic_lower_bound(g, d.n, e));
  ch.hypothesis("quadratic-multiplicity-transfer", s0 * d.mh + s0p * d.mv,
                ">=", S.weighted_nu_sq);
  ch.hypothesis("supermaximal-vertical", s0p * d.mv, "<",
                s0p * (cap2 + d.alpha1 + d.alpha2) / Rat(d.p) +
                    Rat(4 * d.n) * e);
  ch.target("(n*Sigma1 - e)^2 < 0", (n * s1 - e).square(), "<", Rat(0));
  return ch.cert;
}

ExclusionCertificate exclusion_point_on_s1(const SingularityData& d,
                                           const ResolutionGraph& g) {
  g.validate();
  if (!g.q)
    throw std::invalid_argument("q is required when the center lies on s1");
  Chain ch("point-on-s1");
  ch.cert.notes.push_back(kNormalizationNote);
  Rat n(d.n);
  Rat e = nfi_excess(g, d.n);
  common_validations(ch, d, e, true);
  if (ch.stopped) return ch.cert;

  auto S = graph_sums(g, false);
  Rat s0(S.sigma0), s0p(S.sigma0_prime);
  Rat cap2 = Rat(2 * d.n * d.n);
  ch.derived("cauchy-schwarz", S.weighted_nu_sq, ">=",
             quadratic_lower_bound(g, d.n, e));
  ch.hypothesis("quadratic-multiplicity-transfer",
                d.alpha1 * s0 + s0 * d.mh + s0p * d.mv, ">=",
                S.weighted_nu_sq);
  ch.hypothesis("supermaximal-vertical", s0p * d.mv, "<",
                s0p * (cap2 + d.alpha1 + d.alpha2) / Rat(d.p) +
                    Rat(4 * d.n) * e);
  Rat per_fiber = (cap2 + d.alpha1 + d.alpha2) / Rat(d.p);
  if (!ch.hypo_ok) {
    ch.target("fiber-count-capacity", per_fiber, ">", cap2 * s0 / s0p);
    return ch.cert;
  }
  ch.derived("fiber-count-capacity", per_fiber, ">", cap2 * s0 / s0p);
  ch.cert.consequences.push_back("p = 1");
  ch.cert.consequences.push_back("Sigma0' > Sigma0/2");

  ExclusionCertificate sub = exclusion_infinitely_near(d, g);
  sub.trace.insert(sub.trace.begin(), ch.cert.trace.begin(),
                   ch.cert.trace.end());
  sub.consequences.insert(sub.consequences.begin(),
                          ch.cert.consequences.begin(),
                          ch.cert.consequences.end());
  for (const auto& note : ch.cert.notes) {
    bool dup = false;
    for (const auto& have : sub.notes) dup = dup || have == note;
    if (!dup) sub.notes.insert(sub.notes.begin(), note);
  }
  return sub;
}

ExclusionCertificate exclusion_infinitely_near(const SingularityData& d,
                                               const ResolutionGraph& g) {
  g.validate();
  if (!g.q)
    throw std::invalid_argument("q is required for the infinitely near cases");
  int q = *g.q;
  if (q >= 3) return chain_q_high(d, g);
  if (q == 2) return chain_rows(d, g, "q=2", 2);
  if (g.N == 1) return chain_single_tower(d, g);
  if (!d.b1)
    throw std::invalid_argument("B1 position flag is required when q = 1");
  switch (*d.b1) {
    case B1Position::PointOffFiber: return chain_rows(d, g, "q=1-off-s1", 1);
    case B1Position::PointOnFiber: return chain_theta(d, g, true);
    case B1Position::LineInFiber: return chain_line_in_fiber(d, g);
    case B1Position::LineOffFiber: return chain_theta(d, g, false);
  }
  throw std::logic_error("unreachable B1 position");
}

ExclusionCertificate two_curves_exclusion(long long n, const Rat& nu1,
                                          const Rat& nu2) {
  Chain ch("maximal-curve");
  ch.sanity("n-positive", Rat(n), ">=", Rat(1));
  ch.validate("both-maximal", min(nu1, nu2), ">", Rat(n));
  if (ch.stopped) return ch.cert;
  ch.hypothesis("pair-anticanonical-degree", Rat(2 * n), ">=", nu1 + nu2);
  ch.target("nu1+nu2 <= 2n contradiction", nu1 + nu2, "<=", Rat(2 * n));
  return ch.cert;
}

}  // namespace dblcone
