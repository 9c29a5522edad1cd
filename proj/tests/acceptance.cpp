// Acceptance gate: one pass/fail line per criterion, each with a wall-clock
// budget.  Criteria 1, 7 and 9 drive the installed CLI binary (argv[1]);
// the rest exercise the library against independent oracles.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dblcone/cert.hpp"
#include "dblcone/enumerate.hpp"
#include "dblcone/exclude.hpp"
#include "dblcone/graph.hpp"
#include "dblcone/lattice.hpp"
#include "dblcone/rr.hpp"
#include "dblcone/surface.hpp"
#include "dblcone/untwist.hpp"

using namespace dblcone;

namespace {

std::string cli_path;
int failures = 0;

struct CliRun {
  int rc = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliRun r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.rc = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion(int idx, const char* label, double budget_s,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  bool in_time = dt.count() <= budget_s;
  if (ok && !in_time)
    detail = "exceeded " + std::to_string(budget_s) + "s budget";
  bool pass = ok && in_time;
  std::printf("%s criterion-%d %s [%.2fs]%s%s\n", pass ? "PASS" : "FAIL", idx,
              label, dt.count(), detail.empty() ? "" : ": ",
              detail.c_str());
  if (!pass) ++failures;
}

// ---- criterion 3 helpers -------------------------------------------------

bool involution_checks(std::string& detail) {
  std::mt19937_64 rng(414213562);
  auto coord = [&] { return static_cast<long long>(rng() % 201) - 100; };
  for (int t = 0; t < 10000; ++t) {
    FibSurfaceClass a{SurfaceBasis::HEE, {coord(), coord(), coord()}};
    FibSurfaceClass b{SurfaceBasis::HEE, {coord(), coord(), coord()}};
    if (!(bertini_pullback(bertini_pullback(a)) == a)) {
      detail = "bertini pullback does not square to the identity";
      return false;
    }
    if (surf_pair(bertini_pullback(a), bertini_pullback(b)) !=
        surf_pair(a, b)) {
      detail = "bertini pullback does not preserve the form";
      return false;
    }
    FibSurfaceClass ga{SurfaceBasis::GE1E2, {coord(), coord(), coord()}};
    FibSurfaceClass gb{SurfaceBasis::GE1E2, {coord(), coord(), coord()}};
    if (!(fiber_reflection_pullback(fiber_reflection_pullback(ga)) == ga)) {
      detail = "fiber reflection does not square to the identity";
      return false;
    }
    if (surf_pair(fiber_reflection_pullback(ga),
                  fiber_reflection_pullback(gb)) != surf_pair(ga, gb)) {
      detail = "fiber reflection does not preserve the form";
      return false;
    }
  }
  for (long long n = 0; n <= 50; ++n)
    for (long long v = 0; v <= 50; ++v)
      for (long long w = 0; w <= 50; ++w) {
        std::array<Rat, 3> act = bertini_action_hprime(Rat(n), Rat(v), Rat(w));
        if (act[0] != Rat(3 * n - 2 * v) || act[1] != Rat(4 * n - 3 * v) ||
            act[2] != Rat(w)) {
          detail = "coefficient action mismatch at n=" + std::to_string(n) +
                   " nu=" + std::to_string(v) + " nu*=" + std::to_string(w);
          return false;
        }
        // Independent path: write the class in HEE, push through the
        // lattice involution, read the coefficients back off.
        FibSurfaceClass hee{SurfaceBasis::HEE, {n, n - v, n - w}};
        FibSurfaceClass hp = to_hprime(bertini_pullback(hee));
        if (hp.c[0] != 3 * n - 2 * v || hp.c[1] != -(4 * n - 3 * v) ||
            hp.c[2] != -w) {
          detail = "matrix action disagrees with the coefficient action";
          return false;
        }
      }
  return true;
}

// ---- criterion 5 helpers -------------------------------------------------

bool marks_equal(const MarkedSystem& a, const MarkedSystem& b) {
  if (a.cls.n != b.cls.n || a.cls.model != b.cls.model) return false;
  if (a.m_known && b.m_known && a.cls.m != b.cls.m) return false;
  if (a.marks.size() != b.marks.size()) return false;
  for (size_t i = 0; i < a.marks.size(); ++i) {
    const CurveMark &x = a.marks[i], &y = b.marks[i];
    if (x.id != y.id || x.kind != y.kind || !(x.mult == y.mult)) return false;
    if (x.kind == MarkKind::SectionPair && !(x.conj_mult == y.conj_mult))
      return false;
  }
  return true;
}

bool untwist_trials(std::string& detail) {
  std::mt19937_64 rng(20260814);
  int accepted = 0;
  for (int attempt = 0; attempt < 40000 && accepted < 1000; ++attempt) {
    long long n = 1 + static_cast<long long>(rng() % 12);
    long long m = static_cast<long long>(rng() % 4);
    Rat nu1(static_cast<long long>(rng() % (3 * n + 1)), 2);
    Rat nu2(static_cast<long long>(rng() % (3 * n + 1)), 2);
    Rat nul(static_cast<long long>(rng() % (3 * n + 1)), 2);
    MarkedSystem sys;
    sys.cls = {Model::V, n, m};
    sys.marks = {
        {"s1", MarkKind::S1, CycleClass{Rat(1), Rat(0)}, nu1, Rat(0), false},
        {"s2", MarkKind::S2, CycleClass{Rat(1), Rat(0)}, nu2, Rat(0), false},
        {"l", MarkKind::SectionPair, CycleClass{Rat(1), Rat(1)}, nul, Rat(0),
         false}};
    UntwistResult r;
    try {
      r = untwist(sys);
    } catch (const std::invalid_argument&) {
      continue;  // inadmissible sample: competing maximal marks
    }
    ++accepted;
    if (r.word.size() > static_cast<size_t>(n)) {
      detail = "descent took more steps than the starting degree";
      return false;
    }
    MarkedSystem cur = sys;
    long long prev = cur.cls.n;
    for (const Generator& g : r.word) {
      cur = apply_generator(cur, g);
      if (cur.cls.n >= prev) {
        detail = "degree did not strictly decrease along the word";
        return false;
      }
      prev = cur.cls.n;
    }
    if (!marks_equal(cur, r.terminal)) {
      detail = "forward replay does not reach the terminal system";
      return false;
    }
    UntwistWord back(r.word.rbegin(), r.word.rend());
    if (!marks_equal(replay(r.terminal, back), sys)) {
      detail = "reverse replay does not restore the input";
      return false;
    }
  }
  if (accepted < 1000) {
    detail = "only " + std::to_string(accepted) + " admissible samples";
    return false;
  }
  return true;
}

// ---- criterion 6 helpers -------------------------------------------------

std::vector<long long> brute_force_paths(const ResolutionGraph& g) {
  std::vector<std::vector<int>> out(g.N + 1);
  for (int i = 2; i <= g.N; ++i) out[i].push_back(i - 1);
  for (auto [i, j] : g.extra_arrows) out[i].push_back(j);
  std::vector<long long> count(g.N + 1, 0);
  std::function<void(int)> dfs = [&](int v) {
    ++count[v];
    for (int w : out[v]) dfs(w);
  };
  dfs(g.N);
  std::vector<long long> r(g.N);
  for (int i = 1; i <= g.N; ++i) r[i - 1] = count[i];
  return r;
}

bool path_count_sweep(std::string& detail) {
  long long graphs = 0;
  for (int N = 1; N <= 6; ++N) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 3; i <= N; ++i)
      for (int j = 1; j <= i - 2; ++j) slots.push_back({i, j});
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      ResolutionGraph g;
      g.N = N;
      g.L = N;
      g.L_prime = 1;
      g.nu.assign(N, Rat(1));
      for (size_t k = 0; k < slots.size(); ++k)
        if (mask & (1u << k)) g.extra_arrows.push_back(slots[k]);
      g.validate();
      ++graphs;
      if (path_counts(g) != brute_force_paths(g)) {
        detail = "path count mismatch at N=" + std::to_string(N);
        return false;
      }
    }
  }
  if (graphs != 1100) {
    detail = "expected 1100 graphs, saw " + std::to_string(graphs);
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-dblcone-cli>\n");
    return 2;
  }
  cli_path = argv[1];

  criterion(1, "euler characteristic and quadric count", 1.0,
            [](std::string& detail) {
              CliRun chi = run_cli("chi --n 2 --m 0");
              if (chi.rc != 0 || chi.out != "15\n") {
                detail = "chi --n 2 --m 0 printed '" + chi.out + "'";
                return false;
              }
              if (cone_quadric_count(2) != 14) {
                detail = "quadric count is not 14";
                return false;
              }
              return true;
            });

  criterion(2, "triple product closed forms", 1.0, [](std::string& detail) {
    for (long long n = 0; n <= 20; ++n)
      for (long long m = 0; m <= 20; ++m) {
        DivisorClassV d{Model::V, n, m};
        if (div_triple(d, d, other_pencil()) != Rat(2 * n * n + 4 * m * n)) {
          detail = "D.D.F2 mismatch at n=" + std::to_string(n) +
                   " m=" + std::to_string(m);
          return false;
        }
        if (div_triple(d, d, anti_k()) != Rat(4 * n * n + 4 * m * n)) {
          detail = "D.D.(-K) mismatch at n=" + std::to_string(n) +
                   " m=" + std::to_string(m);
          return false;
        }
      }
    return true;
  });

  criterion(3, "surface involutions and coefficient action", 5.0,
            involution_checks);

  criterion(4, "blow-up triple coefficients and negativity", 5.0,
            [](std::string& detail) {
              for (long long n = 1; n <= 10; ++n)
                for (long long alpha : {2LL, 3LL}) {
                  Rat f0 = blowup_triple(n, Rat(0), alpha);
                  Rat f1 = blowup_triple(n, Rat(1), alpha);
                  Rat f2 = blowup_triple(n, Rat(2), alpha);
                  Rat c2 = (f2 - f1 - f1 + f0) / Rat(2);
                  Rat c1 = f1 - f0 - c2;
                  Rat e2 = alpha == 2 ? Rat(-4) : Rat(-5);
                  Rat e1 = alpha == 2 ? Rat(-4 * n) : Rat(-6 * n);
                  if (f0 != Rat(8 * n * n) || c1 != e1 || c2 != e2) {
                    detail = "coefficients differ at n=" + std::to_string(n) +
                             " alpha=" + std::to_string(alpha);
                    return false;
                  }
                  for (long long den = 1; den <= 8; ++den)
                    for (long long k = n * den + 1; k <= 3 * n * den; ++k)
                      if (!(blowup_triple(n, Rat(k, den), alpha) < Rat(0))) {
                        detail = "not negative at nu=" + Rat(k, den).str();
                        return false;
                      }
                }
              return true;
            });

  criterion(5, "randomized untwisting descents", 10.0, untwist_trials);

  criterion(6, "path counts against exhaustive DFS", 60.0, path_count_sweep);

  criterion(7, "full enumeration sweep has no escapes", 600.0,
            [](std::string& detail) {
              CliRun r = run_cli("enumerate --N 3 --L 3 --n 3 --denom 2");
              if (r.rc != 0) {
                detail = "exit code " + std::to_string(r.rc);
                return false;
              }
              const std::string tail = "0 escapes\n";
              if (r.out.size() < tail.size() ||
                  r.out.substr(r.out.size() - tail.size()) != tail) {
                detail = "summary does not end with '0 escapes'";
                return false;
              }
              return true;
            });

  criterion(8, "multiplicity sum bound capped at 5n/2 + m", 5.0,
            [](std::string& detail) {
              bool equality_seen = false;
              for (long long n = 1; n <= 12; ++n)
                for (long long m = 0; m <= 6; ++m)
                  for (long long k1 = 0; 2 * k1 <= 3 * n; ++k1)
                    for (long long k2 = 0; k2 <= n + k1; ++k2) {
                      if (n + k1 - 2 * k2 < 0 || n - 2 * k1 + k2 < 0) continue;
                      Rat bound = mult_sum_bound_reducible(n, m, k1, k2);
                      Rat cap = Rat(5 * n, 2) + Rat(m);
                      if (bound > cap) {
                        detail = "bound exceeds cap at n=" + std::to_string(n);
                        return false;
                      }
                      if (bound == cap) equality_seen = true;
                    }
              if (!equality_seen) {
                detail = "cap never attained";
                return false;
              }
              for (long long n = 1; n <= 12; ++n)
                for (long long m = 0; m <= 6; ++m)
                  for (long long k = 0; k <= n; ++k)
                    if (mult_sum_bound_irreducible(n, m, k) !=
                        Rat(2 * n + m)) {
                      detail = "irreducible bound is not 2n + m";
                      return false;
                    }
              return true;
            });

  criterion(9, "certificates re-verify byte-identically", 5.0,
            [](std::string& detail) {
              std::string jobs = std::string(TESTS_DIR) + "/jobs";
              std::string golden = std::string(TESTS_DIR) + "/golden";

              CliRun a = run_cli("exclude " + jobs + "/exclude_q2.json");
              CliRun b = run_cli("exclude " + jobs + "/exclude_q2.json");
              if (a.rc != 0 || a.out != b.out) {
                detail = "exclusion certificate unstable across runs";
                return false;
              }
              if (a.out != slurp(golden + "/exclude_q2.cert.json")) {
                detail = "exclusion certificate differs from the golden file";
                return false;
              }
              CliRun u1 = run_cli("untwist " + jobs + "/untwist_tau_l.json");
              CliRun u2 = run_cli("untwist " + jobs + "/untwist_tau_l.json");
              if (u1.rc != 0 || u1.out != u2.out) {
                detail = "untwist certificate unstable across runs";
                return false;
              }
              if (u1.out != slurp(golden + "/untwist_tau_l.cert.json")) {
                detail = "untwist certificate differs from the golden file";
                return false;
              }
              if (!verify_certificate(a.out).empty() ||
                  !verify_certificate(u1.out).empty()) {
                detail = "library verification reported issues";
                return false;
              }
              std::ofstream tmp("acceptance_cert.json", std::ios::binary);
              tmp << a.out;
              tmp.close();
              CliRun v = run_cli("verify acceptance_cert.json");
              if (v.rc != 0 || v.out != "verified\n") {
                detail = "CLI verification failed";
                return false;
              }
              return true;
            });

  if (failures == 0) {
    std::printf("all 9 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
