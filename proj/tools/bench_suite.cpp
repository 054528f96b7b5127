// Benchmark comparing serial reference execution of the check suite with
// the OpenMP-parallel path, asserting the reports match byte for byte.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "braidkit/harness.hpp"

int main(int argc, char** argv) {
  using namespace braidkit;
  using Clock = std::chrono::steady_clock;

  SuiteOptions opts;
  opts.n_lo = 5;
  opts.n_hi = argc > 1 ? std::atoi(argv[1]) : 8;
  opts.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0;
  opts.samples = argc > 3 ? std::atoi(argv[3]) : 100;

  opts.threads = 1;
  auto t0 = Clock::now();
  Report serial = run_suite(opts);
  auto t1 = Clock::now();
  double serial_s = std::chrono::duration<double>(t1 - t0).count();

  opts.threads = 0;
  t0 = Clock::now();
  Report parallel = run_suite(opts);
  t1 = Clock::now();
  double parallel_s = std::chrono::duration<double>(t1 - t0).count();

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::string a = emit_json(serial);
  std::string b = emit_json(parallel);
  std::cout << "checks:    " << serial.results.size() << "\n";
  std::cout << "serial:    " << serial_s << " s\n";
  std::cout << "parallel:  " << parallel_s << " s  (" << threads
            << " threads)\n";
  std::cout << "speedup:   " << (parallel_s > 0 ? serial_s / parallel_s : 0)
            << "x\n";
  std::cout << "identical: " << (a == b ? "yes" : "NO") << "\n";
  return a == b ? report_exit_code(serial) : 1;
}
