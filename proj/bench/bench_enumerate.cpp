// Compares the OpenMP slot sweep against the serial reference on one fixed
// bound set.  Reports wall times only; the sole hard assertion is that both
// paths produce the identical report.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dblcone/enumerate.hpp"

using namespace dblcone;

namespace {

double timed(const EnumBounds& b, bool parallel, EnumReport& rep) {
  auto t0 = std::chrono::steady_clock::now();
  rep = enumerate_verify(b, parallel);
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count();
}

}  // namespace

int main(int argc, char** argv) {
  EnumBounds b;
  b.n_max = argc > 1 ? std::atoll(argv[1]) : 3;
  b.N_max = 3;
  b.L_max = 3;
  b.denom = 2;

  std::cout << "bounds: n <= " << b.n_max << ", N <= " << b.N_max << ", L <= "
            << b.L_max << ", denom " << b.denom << ", m <= " << b.m_max
            << "\n";
  std::cout << "candidates: " << enumerate_dry_count(b) << "\n";
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif

  EnumReport serial, parallel;
  double ts = timed(b, false, serial);
  double tp = timed(b, true, parallel);
  std::cout << "serial:   " << ts << "s\n";
  std::cout << "parallel: " << tp << "s\n";
  std::cout << "ratio:    " << (tp > 0 ? ts / tp : 0.0) << "x\n";

  if (!(serial == parallel)) {
    std::cerr << "FAIL: serial and parallel reports differ\n";
    return 1;
  }
  std::cout << "reports identical (" << serial.candidates << " candidates, "
            << serial.escapes.size() << " escapes)\n";
  return 0;
}
