// serial vs parallel sweep timing; also asserts both produce identical rows
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "lisstoric/sweep.hpp"

using namespace lisstoric;
using Clock = std::chrono::steady_clock;

static double run_ms(const SweepSpec& spec, SweepResult& out) {
  auto start = Clock::now();
  out = run_sweep(spec);
  auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

int main(int argc, char** argv) {
  SweepSpec spec;
  spec.N = argc > 1 ? std::atoi(argv[1]) : 4;
  spec.q = argc > 2 ? std::atoi(argv[2]) : 7;
  spec.p_min = 1;
  spec.p_max = argc > 3 ? std::atoi(argv[3]) : 40;

  SweepResult serial;
  SweepResult parallel;
  double t_serial = 0, t_parallel = 0;
  try {
    spec.parallel = false;
    t_serial = run_ms(spec, serial);
    spec.parallel = true;
    t_parallel = run_ms(spec, parallel);
  } catch (const std::exception& e) {
    std::cerr << "usage: bench_sweep [N] [q] [p_max]  (" << e.what() << ")\n";
    return 2;
  }

  std::cout << "sweep N=" << spec.N << " q=" << spec.q << " p=1.." << spec.p_max
            << " (" << serial.rows.size() << " rows)\n";
  std::cout << "serial:   " << t_serial << " ms\n";
  std::cout << "parallel: " << t_parallel << " ms\n";
  std::cout << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x\n";

  if (to_tsv(serial.rows) != to_tsv(parallel.rows) ||
      serial.skipped != parallel.skipped) {
    std::cerr << "MISMATCH: serial and parallel sweeps disagree\n";
    return 1;
  }
  std::cout << "outputs identical\n";
  return 0;
}
