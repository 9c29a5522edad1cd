#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dblcone/enumerate.hpp"
#include "dblcone/exclude.hpp"
#include "dblcone/graph.hpp"
#include "dblcone/rat.hpp"
#include "dblcone/untwist.hpp"

namespace dblcone {

// One operation, as read from a job file.  `kind` selects the payload:
//   untwist        -> system
//   exclude        -> center ("general" | "on-s1" | "two-curves"),
//                     graph + data, or data.n/nu1/nu2 for two-curves
//   enumerate      -> bounds
//   chi            -> cls (divisor class on V or U)
//   lattice-query  -> op ("pair" | "triple" | "transfer") with operands
// Rationals travel as strings, "p" or "p/q"; decimal forms are rejected.
struct JobFile {
  int schema = 1;
  std::string kind;

  MarkedSystem system;

  std::string center;
  ResolutionGraph graph;
  SingularityData data;
  Rat nu1, nu2;

  EnumBounds bounds;

  DivisorClassV cls{Model::V, 0, 0};

  std::string op;
  std::vector<DivisorClassV> classes;
  CycleClass cycle{Rat(0), Rat(0)};
  DivisorClassX x_class;
  Model target = Model::V;
};

JobFile parse_job(const std::string& text);

// Canonical form: keys sorted, two-space indent, one trailing newline.
std::string serialize_job(const JobFile& job);

// Certificates embed the job under "input", so a verifier can re-run the
// operation and compare bytes.
std::string emit_certificate(const JobFile& job,
                             const ExclusionCertificate& cert);
std::string emit_certificate(const JobFile& job, const UntwistResult& result);
std::string emit_certificate(const JobFile& job, const EnumReport& report);

// Re-parse the embedded input, re-run the operation, compare byte for byte,
// then re-check the recorded reasoning: every exclusion trace line is
// re-evaluated from its printed sides, untwist words are replayed onto the
// initial system, enumeration counts must partition.  Empty means verified.
std::vector<std::string> verify_certificate(const std::string& cert_text);

// CLI entry point.  Exit codes: 0 success (excluded, terminal untwist,
// clean sweep, verification passed), 1 escape or verification mismatch,
// 2 input error (malformed job, infeasible data, over the work limit).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace dblcone
