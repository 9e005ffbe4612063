#include "lisstoric/sweep.hpp"

#include <exception>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "lisstoric/invariants.hpp"
#include "lisstoric/oracle.hpp"

namespace lisstoric {

std::string flags_string(const Classification& c) {
  std::vector<std::string> parts;
  if (c.ribbon)
    parts.push_back("ribbon");
  else
    parts.push_back("periodic=" + std::to_string(c.periodic_d));
  parts.push_back("genus_bound=" + std::to_string(c.genus_bound));
  if (c.quasipositive_case) parts.push_back("quasipositive");
  if (c.amphicheiral) parts.push_back("amphicheiral");
  if (c.trivial_family)
    parts.push_back(std::string("trivial=") + trivial_family_name(*c.trivial_family));
  if (parts.empty()) return "-";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
  return out;
}

SweepRow sweep_row(int N, int q, int p) {
  SweepRow row;
  row.N = N;
  row.q = q;
  row.p = p;
  BraidWord symbolic = lissajous_braid(N, q, p);
  row.d = normalize_params(N, q, p).d;
  row.braid_len = symbolic.letters().size();
  row.jones = jones_polynomial(symbolic).str();
  row.flags = flags_string(classify(N, q, p));
  BraidWord exact = enumerate_braid(N, q, p);
  row.verify_status = verdict_name(compare_up_to_mirror(symbolic, exact));
  return row;
}

static std::vector<int> admissible_ps(const SweepSpec& spec, int& skipped) {
  if (spec.N < 2 || spec.q < 1 || std::gcd(spec.N, spec.q) != 1)
    throw std::domain_error("sweep: need N>=2, q>=1, gcd(N,q)=1");
  std::vector<int> ps;
  skipped = 0;
  for (int p = std::max(1, spec.p_min); p <= spec.p_max; ++p) {
    if (std::gcd(spec.N, p) != 1)
      ++skipped;
    else
      ps.push_back(p);
  }
  return ps;
}

SweepResult run_sweep_serial(const SweepSpec& spec) {
  SweepResult result;
  std::vector<int> ps = admissible_ps(spec, result.skipped);
  result.rows.reserve(ps.size());
  for (int p : ps) result.rows.push_back(sweep_row(spec.N, spec.q, p));
  return result;
}

SweepResult run_sweep_parallel(const SweepSpec& spec) {
  SweepResult result;
  std::vector<int> ps = admissible_ps(spec, result.skipped);
  result.rows.resize(ps.size());
  std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(ps.size()); ++i) {
    try {
      result.rows[i] = sweep_row(spec.N, spec.q, ps[i]);
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return result;
}

SweepResult run_sweep(const SweepSpec& spec) {
  return spec.parallel ? run_sweep_parallel(spec) : run_sweep_serial(spec);
}

std::string to_tsv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "N\tq\tp\td\tbraid_len\tjones\tflags\tverify_status\n";
  for (const SweepRow& r : rows)
    os << r.N << '\t' << r.q << '\t' << r.p << '\t' << r.d << '\t' << r.braid_len
       << '\t' << r.jones << '\t' << r.flags << '\t' << r.verify_status << '\n';
  return os.str();
}

std::string to_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    nlohmann::ordered_json obj;
    obj["N"] = r.N;
    obj["q"] = r.q;
    obj["p"] = r.p;
    obj["d"] = r.d;
    obj["braid_len"] = r.braid_len;
    obj["jones"] = r.jones;
    obj["flags"] = r.flags;
    obj["verify_status"] = r.verify_status;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace lisstoric
