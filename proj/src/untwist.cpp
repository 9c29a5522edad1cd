#include "dblcone/untwist.hpp"

#include <stdexcept>

namespace dblcone {

const char* mark_kind_name(MarkKind k) {
  switch (k) {
    case MarkKind::SectionPair: return "section_pair";
    case MarkKind::S1: return "s1";
    case MarkKind::S2: return "s2";
  }
  return "?";
}

void MarkedSystem::validate() const {
  if (cls.n < 0) throw std::invalid_argument("threshold n must be nonnegative");
  if (m_known && cls.m < 0)
    throw std::invalid_argument("m must be nonnegative when known");
  for (size_t i = 0; i < marks.size(); ++i) {
    const CurveMark& mk = marks[i];
    for (size_t j = 0; j < i; ++j)
      if (marks[j].id == mk.id)
        throw std::invalid_argument("mark ids must be unique: " + mk.id);
    if (mk.kind != MarkKind::SectionPair) {
      for (size_t j = 0; j < i; ++j)
        if (marks[j].kind == mk.kind)
          throw std::invalid_argument(std::string("duplicate ") +
                                      mark_kind_name(mk.kind) + " mark");
    }
    if (mk.kind == MarkKind::SectionPair && mk.on_ramification)
      throw std::invalid_argument(
          "section pair must avoid the ramification divisor: " + mk.id);
    if (mk.cls.sigma != Rat(1) ||
        (mk.cls.phi != Rat(0) && mk.cls.phi != Rat(1)))
      throw std::invalid_argument(
          "curve class must be s + alpha f with alpha in {0, 1}: " + mk.id);
  }
}

const CurveMark* MarkedSystem::find(const std::string& id) const {
  for (auto& mk : marks)
    if (mk.id == id) return &mk;
  return nullptr;
}

const CurveMark* MarkedSystem::find(MarkKind kind) const {
  for (auto& mk : marks)
    if (mk.kind == kind) return &mk;
  return nullptr;
}

std::string generator_name(const Generator& g) {
  switch (g.kind) {
    case Generator::Tau1: return "tau_1";
    case Generator::Tau2: return "tau_2";
    case Generator::TauL: return "tau_l(" + g.id + ")";
  }
  return "?";
}

bool is_maximal(const MarkedSystem& sys, const CurveMark& mark) {
  return Rat(sys.cls.n) < mark.mult;
}

namespace {

// n' = 3n - 2nu; integrality of the threshold needs 2nu integral, and
// nu > 3n/2 cannot come from an effective system.
long long descend_threshold(long long n, const Rat& nu) {
  Rat twice = Rat(2) * nu;
  if (!twice.is_integer())
    throw std::invalid_argument(
        "multiplicity must be half-integral to keep the threshold integral");
  long long next = 3 * n - twice.num();
  if (next < 0)
    throw std::invalid_argument(
        "threshold would become negative (nu > 3n/2 signals corrupt input)");
  return next;
}

}  // namespace

MarkedSystem apply_tau_l(const MarkedSystem& sys, const std::string& id) {
  MarkedSystem out = sys;
  CurveMark* target = nullptr;
  for (auto& mk : out.marks)
    if (mk.id == id && mk.kind == MarkKind::SectionPair) target = &mk;
  if (!target)
    throw std::invalid_argument("no section pair mark with id " + id);
  long long n = sys.cls.n;
  out.cls.n = descend_threshold(n, target->mult);
  target->mult = Rat(4 * n) - Rat(3) * target->mult;
  out.m_known = false;  // the class formula does not determine m
  return out;
}

namespace {

MarkedSystem apply_tau_section(const MarkedSystem& sys, MarkKind which) {
  MarkedSystem out = sys;
  CurveMark* target = nullptr;
  for (auto& mk : out.marks)
    if (mk.kind == which) target = &mk;
  if (!target) {
    out.marks.push_back({mark_kind_name(which), which, CycleClass{1, 0},
                         Rat(0), Rat(0), false});
    target = &out.marks.back();
  }
  long long n = sys.cls.n;
  out.cls.n = descend_threshold(n, target->mult);
  target->mult = Rat(4 * n) - Rat(3) * target->mult;
  return out;  // m and the other section's multiplicity are untouched
}

}  // namespace

MarkedSystem apply_tau_1(const MarkedSystem& sys) {
  return apply_tau_section(sys, MarkKind::S1);
}

MarkedSystem apply_tau_2(const MarkedSystem& sys) {
  return apply_tau_section(sys, MarkKind::S2);
}

MarkedSystem apply_generator(const MarkedSystem& sys, const Generator& g) {
  switch (g.kind) {
    case Generator::Tau1: return apply_tau_1(sys);
    case Generator::Tau2: return apply_tau_2(sys);
    case Generator::TauL: return apply_tau_l(sys, g.id);
  }
  throw std::invalid_argument("unknown generator");
}

UntwistWord free_reduce(const UntwistWord& w) {
  UntwistWord out;
  for (auto& g : w) {
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

MarkedSystem replay(const MarkedSystem& sys, const UntwistWord& w) {
  MarkedSystem cur = sys;
  for (auto& g : w) cur = apply_generator(cur, g);
  return cur;
}

UntwistResult untwist(const MarkedSystem& sys) {
  sys.validate();
  UntwistResult res;
  res.terminal = sys;
  bool noted_unknown = false;
  while (res.terminal.cls.n > 0) {
    const CurveMark* hit = nullptr;
    for (auto& mk : res.terminal.marks) {
      if (!is_maximal(res.terminal, mk)) continue;
      if (hit)
        throw std::invalid_argument(
            "two simultaneously maximal curve marks: " + hit->id + ", " +
            mk.id +
            " (no system has maximal singularities along two curves at "
            "once)");
      hit = &mk;
    }
    if (!hit) break;
    if (hit->kind == MarkKind::SectionPair) {
      if (res.terminal.m_known && res.terminal.cls.m == 0)
        throw std::invalid_argument(
            "maximal section pair " + hit->id +
            " with m = 0 (maximal curves of such a system are the "
            "anticanonical sections only)");
      if (!res.terminal.m_known && !noted_unknown) {
        res.notes.push_back("untwisting section pair " + hit->id +
                            " with undetermined fiber coefficient");
        noted_unknown = true;
      }
    }
    Generator g;
    switch (hit->kind) {
      case MarkKind::S1: g = {Generator::Tau1, ""}; break;
      case MarkKind::S2: g = {Generator::Tau2, ""}; break;
      case MarkKind::SectionPair: g = {Generator::TauL, hit->id}; break;
    }
    long long before = res.terminal.cls.n;
    res.terminal = apply_generator(res.terminal, g);
    res.word.push_back(g);
    res.steps.push_back("n: " + std::to_string(before) + " -> " +
                        std::to_string(res.terminal.cls.n) + " via " +
                        generator_name(g));
  }
  if (res.terminal.cls.n == 0 && !res.word.empty()) {
    res.pencil = true;
    res.notes.push_back(
        "threshold reached 0: the system is composed with a fiber pencil");
  }
  res.word = free_reduce(res.word);
  return res;
}

}  // namespace dblcone
