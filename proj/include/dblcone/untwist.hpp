#pragma once

#include <string>
#include <vector>

#include "dblcone/lattice.hpp"
#include "dblcone/rat.hpp"

namespace dblcone {

enum class MarkKind { SectionPair, S1, S2 };

const char* mark_kind_name(MarkKind k);

// A curve the caller asserts multiplicity data along.  Section pairs carry
// the conjugate multiplicity as well; s1/s2 ignore conj_mult.
struct CurveMark {
  std::string id;
  MarkKind kind = MarkKind::SectionPair;
  CycleClass cls{1, 0};
  Rat mult;
  Rat conj_mult;
  bool on_ramification = false;
};

// Linear system |nD + mF1| with curve marks.  m_known is dropped by tau_l,
// whose class formula does not determine the fiber coefficient.
struct MarkedSystem {
  DivisorClassV cls{Model::V, 1, 0};
  std::vector<CurveMark> marks;
  bool m_known = true;

  void validate() const;  // throws std::invalid_argument
  const CurveMark* find(const std::string& id) const;
  const CurveMark* find(MarkKind kind) const;
};

struct Generator {
  enum Kind { TauL, Tau1, Tau2 };
  Kind kind = Tau1;
  std::string id;  // section pair id, TauL only
  bool operator==(const Generator&) const = default;
};

std::string generator_name(const Generator& g);

using UntwistWord = std::vector<Generator>;

// Maximality of a curve center: excess nu - n with weight 1, so nu > n.
// The conjugate multiplicity never participates.
bool is_maximal(const MarkedSystem& sys, const CurveMark& mark);

// Coefficient actions.  Each throws std::invalid_argument when 2*nu is not
// integral (the threshold must stay integral) or when 3n - 2nu < 0.
MarkedSystem apply_tau_l(const MarkedSystem& sys, const std::string& id);
MarkedSystem apply_tau_1(const MarkedSystem& sys);
MarkedSystem apply_tau_2(const MarkedSystem& sys);
MarkedSystem apply_generator(const MarkedSystem& sys, const Generator& g);

// Cancel adjacent equal letters until none remain; no other relations.
UntwistWord free_reduce(const UntwistWord& w);

// Apply a word left to right.
MarkedSystem replay(const MarkedSystem& sys, const UntwistWord& w);

struct UntwistResult {
  MarkedSystem terminal;
  UntwistWord word;
  std::vector<std::string> steps;  // "n: 3 -> 1 via tau_l(l0)"
  std::vector<std::string> notes;
  bool pencil = false;  // threshold reached 0
};

// Descend while a mark is maximal.  Throws on two simultaneously maximal
// marks, and on a maximal section pair when m is known to be 0; a maximal
// section pair with m unknown proceeds with a note.
UntwistResult untwist(const MarkedSystem& sys);

}  // namespace dblcone
