#include "dblcone/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "dblcone/exclude.hpp"
#include "dblcone/graph.hpp"
#include "dblcone/rat.hpp"

namespace dblcone {
namespace {

// One unit of parallel work: everything below (ladder, m, case data) is
// generated inside the slot.
struct Slot {
  long long n = 1;
  int N = 1;
  unsigned arrow_mask = 0;
  int L = 1;
  int Lp = 1;
};

std::vector<std::pair<int, int>> arrow_universe(int N) {
  std::vector<std::pair<int, int>> arrows;
  for (int i = 3; i <= N; ++i)
    for (int j = 1; j <= i - 2; ++j) arrows.emplace_back(i, j);
  return arrows;
}

template <class F>
void for_each_slot(const EnumBounds& b, F&& fn) {
  for (long long n = 1; n <= b.n_max; ++n)
    for (int N = 1; N <= b.N_max; ++N) {
      unsigned subsets = 1u << arrow_universe(N).size();
      for (unsigned mask = 0; mask < subsets; ++mask)
        for (int L = 1; L <= std::min(N, b.L_max); ++L)
          for (int Lp = 1; Lp <= L; ++Lp) fn(Slot{n, N, mask, L, Lp});
    }
}

// Non-increasing tuples in (k_1, ..., k_N), each in 1..hi.
template <class F>
void for_each_ladder(std::vector<long long>& ks, size_t idx, long long hi,
                     F&& fn) {
  if (idx == ks.size()) {
    fn(ks);
    return;
  }
  for (long long k = 1; k <= hi; ++k) {
    ks[idx] = k;
    for_each_ladder(ks, idx + 1, k, fn);
  }
}

std::vector<Rat> distinct_pair(const Rat& a, const Rat& b) {
  if (a == b) return {a};
  return {a, b};
}

struct OnS1Option {
  int q = 1;
  std::optional<B1Position> b1;
  int rows_top = 0;  // levels carrying alpha1 in the bookkeeping rows
};

// Consistent (q, B1) pairs for a tower shape: q >= 2 pins the fiber
// transform to the first level, q = 1 branches on where B1 sits.
std::vector<OnS1Option> on_s1_options(const ResolutionGraph& g) {
  std::vector<OnS1Option> opts;
  for (int q = 1; q <= g.L; ++q) {
    if (q >= 2) {
      if (g.L_prime == 1) opts.push_back({q, std::nullopt, q == 2 ? 2 : 0});
      continue;
    }
    if (g.N == 1) {
      opts.push_back({1, std::nullopt, 0});
      continue;
    }
    if (g.L == 1) {
      opts.push_back({1, B1Position::LineInFiber, 0});
      opts.push_back({1, B1Position::LineOffFiber, 0});
      continue;
    }
    if (g.L_prime == 1)
      opts.push_back({1, B1Position::PointOffFiber, 1});
    else
      opts.push_back({1, B1Position::PointOnFiber, 0});
  }
  return opts;
}

// Fill the level rows so that each multiplicity row balances exactly:
// corrections land on m_{1,i} and degrees absorb the slack.  d_1 may come
// out negative; the checker then reports the input as infeasible.
void synth_rows(SingularityData& d, const ResolutionGraph& g, int top) {
  int L = g.L;
  d.mh_levels.assign(L, d.mh);
  d.d.assign(L, Rat(0));
  d.mij.assign(L > 0 ? L - 1 : 0, {});
  for (int k = 1; k < L; ++k) d.mij[k - 1].assign(L - k, Rat(0));
  for (int i = 1; i <= L; ++i) {
    Rat base = d.mh;
    if (i <= top) base = base + d.alpha1;
    if (i == 1) base = base + d.mv;
    Rat nusq = g.nu[i - 1] * g.nu[i - 1];
    if (i == 1) {
      d.d[0] = base - nusq;
    } else {
      Rat need = nusq - base;
      Rat m1i = need > Rat(0) ? need : Rat(0);
      d.mij[0][i - 2] = m1i;
      d.d[i - 1] = base + m1i - nusq;
    }
  }
}

template <class F>
void emit_general(const EnumBounds& b, const ResolutionGraph& g, long long n,
                  long long m, F&& fn) {
  Rat pencil_cap(2 * n * n);
  Rat antik_cap(4 * n * n + 4 * m * n);
  Rat nn(n * n);
  for (const Rat& a1 : {Rat(0), nn, pencil_cap}) {
    Rat a2_top = pencil_cap - a1 < nn ? pencil_cap - a1 : nn;
    for (const Rat& a2 : distinct_pair(Rat(0), a2_top))
      for (const Rat& mh : distinct_pair(Rat(0), pencil_cap - a1 - a2))
        for (const Rat& mv : distinct_pair(Rat(0), antik_cap - mh))
          for (long long p : {1LL, 2LL}) {
            SingularityData d;
            d.n = n;
            d.m = m;
            d.alpha1 = a1;
            d.alpha2 = a2;
            d.p = p;
            d.mh = mh;
            d.mv = mv;
            d.condition_a = b.condition_a;
            fn(g, d, false);
          }
  }
}

template <class F>
void emit_on_s1(const EnumBounds& b, const ResolutionGraph& g, long long n,
                long long m, F&& fn) {
  Rat pencil_cap(2 * n * n);
  Rat antik_cap(4 * n * n + 4 * m * n);
  Rat nn(n * n);
  for (const OnS1Option& opt : on_s1_options(g)) {
    ResolutionGraph gq = g;
    gq.q = opt.q;
    for (const Rat& a1 : {Rat(0), nn, pencil_cap})
      for (const Rat& mh : distinct_pair(Rat(0), pencil_cap - a1))
        for (const Rat& mv : distinct_pair(Rat(0), antik_cap - mh))
          for (long long p : {1LL, 2LL}) {
            SingularityData d;
            d.n = n;
            d.m = m;
            d.alpha1 = a1;
            d.p = p;
            d.mh = mh;
            d.mv = mv;
            d.b1 = opt.b1;
            d.condition_a = b.condition_a;
            if (g.N >= 2) d.theta = (g.nu[0] + g.nu[1]) / Rat(2);
            if (opt.rows_top > 0) synth_rows(d, gq, opt.rows_top);
            fn(gq, d, true);
          }
  }
}

template <class F>
void for_each_candidate_in_slot(const EnumBounds& b, const Slot& s, F&& fn) {
  ResolutionGraph base;
  base.N = s.N;
  base.L = s.L;
  base.L_prime = s.Lp;
  auto universe = arrow_universe(s.N);
  for (size_t i = 0; i < universe.size(); ++i)
    if (s.arrow_mask >> i & 1u) base.extra_arrows.push_back(universe[i]);
  long long kmax = 5 * s.n * b.denom / 2;
  std::vector<long long> ks(static_cast<size_t>(s.N), 1);
  for_each_ladder(ks, 0, kmax, [&](const std::vector<long long>& kk) {
    ResolutionGraph g = base;
    g.nu.clear();
    g.nu.reserve(kk.size());
    for (long long k : kk) g.nu.emplace_back(k, b.denom);
    for (long long m = 0; m <= b.m_max; ++m) {
      emit_general(b, g, s.n, m, fn);
      emit_on_s1(b, g, s.n, m, fn);
    }
  });
}

std::string encode(const ResolutionGraph& g, const SingularityData& d,
                   bool on_s1) {
  std::ostringstream os;
  os << "n=" << d.n << " m=" << d.m << " N=" << g.N << " L=" << g.L
     << " L'=" << g.L_prime << " arrows=";
  if (g.extra_arrows.empty()) os << "-";
  for (size_t i = 0; i < g.extra_arrows.size(); ++i) {
    if (i) os << ",";
    os << g.extra_arrows[i].first << ">" << g.extra_arrows[i].second;
  }
  os << " ladder=";
  for (size_t i = 0; i < g.nu.size(); ++i) {
    if (i) os << ",";
    os << g.nu[i].str();
  }
  os << " center=" << (on_s1 ? "on-s1" : "general");
  if (g.q) os << " q=" << *g.q;
  if (d.b1) os << " b1=" << b1_position_name(*d.b1);
  if (d.theta) os << " theta=" << d.theta->str();
  os << " p=" << d.p << " a1=" << d.alpha1.str() << " a2=" << d.alpha2.str()
     << " mh=" << d.mh.str() << " mv=" << d.mv.str();
  return os.str();
}

void submit(EnumReport& rep, const ResolutionGraph& g,
            const SingularityData& d, bool on_s1) {
  ++rep.candidates;
  ExclusionCertificate cert;
  try {
    cert = on_s1 ? exclusion_point_on_s1(d, g) : exclusion_point_general(d, g);
  } catch (const std::exception& ex) {
    rep.escapes.push_back(encode(g, d, on_s1) +
                          std::string(" exception: ") + ex.what());
    return;
  }
  ++rep.by_case[cert.case_label];
  switch (cert.verdict) {
    case ExVerdict::Excluded:
      ++rep.excluded;
      ++rep.by_reason[cert.failed];
      break;
    case ExVerdict::InputInfeasible:
      ++rep.input_infeasible;
      ++rep.by_reason[cert.failed];
      break;
    case ExVerdict::Escape:
      rep.escapes.push_back(encode(g, d, on_s1));
      break;
  }
}

void merge_into(EnumReport& dst, const EnumReport& src) {
  dst.candidates += src.candidates;
  dst.excluded += src.excluded;
  dst.input_infeasible += src.input_infeasible;
  for (const auto& [key, count] : src.by_case) dst.by_case[key] += count;
  for (const auto& [key, count] : src.by_reason) dst.by_reason[key] += count;
  dst.escapes.insert(dst.escapes.end(), src.escapes.begin(),
                     src.escapes.end());
}

}  // namespace

long long enumerate_dry_count(const EnumBounds& bounds) {
  long long count = 0;
  for_each_slot(bounds, [&](const Slot& s) {
    for_each_candidate_in_slot(
        bounds, s,
        [&](const ResolutionGraph&, const SingularityData&, bool) {
          ++count;
        });
  });
  return count;
}

EnumReport enumerate_verify(const EnumBounds& bounds, bool parallel) {
  EnumReport rep;
  if (!parallel) {
    for_each_slot(bounds, [&](const Slot& s) {
      for_each_candidate_in_slot(
          bounds, s,
          [&](const ResolutionGraph& g, const SingularityData& d,
              bool on_s1) { submit(rep, g, d, on_s1); });
    });
  } else {
    std::vector<Slot> slots;
    for_each_slot(bounds, [&](const Slot& s) { slots.push_back(s); });
    std::vector<EnumReport> bufs(slots.size());
    const long long total = static_cast<long long>(slots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < total; ++i) {
      const size_t at = static_cast<size_t>(i);
      for_each_candidate_in_slot(
          bounds, slots[at],
          [&](const ResolutionGraph& g, const SingularityData& d,
              bool on_s1) { submit(bufs[at], g, d, on_s1); });
    }
    for (const EnumReport& buf : bufs) merge_into(rep, buf);
  }
  std::sort(rep.escapes.begin(), rep.escapes.end());
  return rep;
}

}  // namespace dblcone
