#pragma once

#include <string>
#include <vector>

#include "lisstoric/symbolic.hpp"

namespace lisstoric {

struct SweepRow {
  int N, q, p, d;
  std::size_t braid_len;
  std::string jones;
  std::string flags;
  std::string verify_status;
};

struct SweepSpec {
  int N;
  int q;
  int p_min;
  int p_max;
  bool parallel = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ascending p, one per admissible value
  int skipped = 0;             // p values dropped for gcd(N,p) != 1
};

SweepRow sweep_row(int N, int q, int p);

// Serial reference and OpenMP implementations; identical output by contract
// (rows are pure functions of (N,q,p) and are assembled in index order).
SweepResult run_sweep_serial(const SweepSpec& spec);
SweepResult run_sweep_parallel(const SweepSpec& spec);
SweepResult run_sweep(const SweepSpec& spec);

// Compact classification summary, e.g. "ribbon,genus_bound=0,quasipositive";
// "-" when nothing applies.
std::string flags_string(const Classification& c);

// Fixed column order: N, q, p, d, braid_len, jones, flags, verify_status.
std::string to_tsv(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<SweepRow>& rows);

}  // namespace lisstoric
