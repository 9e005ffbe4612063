// command-line front end: construction, verification, classification,
// parameter sweeps and rendering for Lissajous-toric knot braids
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lisstoric/invariants.hpp"
#include "lisstoric/oracle.hpp"
#include "lisstoric/render.hpp"
#include "lisstoric/sweep.hpp"
#include "lisstoric/symbolic.hpp"

using nlohmann::ordered_json;
using namespace lisstoric;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitIo = 4;

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return kExitIo;
  }
  return 0;
}

ordered_json params_json(const BraidParams& params) {
  ordered_json j;
  j["N"] = params.N;
  j["q"] = params.q;
  j["p"] = params.p;
  j["d"] = params.d;
  j["q_base"] = params.q_base;
  j["p_base"] = params.p_base;
  j["swapped"] = params.swapped;
  return j;
}

int cmd_braid(int N, int q, int p, const std::string& method,
              const std::string& phase, const std::string& format) {
  BraidParams params = normalize_params(N, q, p);
  BraidWord word(N);
  ordered_json extra;
  if (method == "symbolic") {
    word = lissajous_braid(N, q, p);
    BraidParams base = normalize_params(N, params.q_base, params.p_base);
    BezoutPair bez = bezout_coefficients(N, base.q_base);
    auto [alpha, beta] = alpha_beta_blocks(base, bez);
    ordered_json blocks;
    blocks["alpha"] = alpha.str();
    blocks["beta"] = beta.str();
    blocks["bezout"] = {{"A", bez.A}, {"B", bez.B}};
    ordered_json lambdas = ordered_json::array();
    for (int k = 1; k <= 2 * base.q_base; ++k)
      lambdas.push_back(k % base.q_base == 0 ? 1 : lambda_sign(base, bez, k));
    blocks["block_exponents"] = std::move(lambdas);
    extra["blocks"] = std::move(blocks);
  } else if (method == "exact") {
    PhaseSpec spec = default_phase(N, q, p);
    if (!phase.empty()) spec.phi = parse_rational(phase);
    word = enumerate_braid(N, q, p, spec);
    extra["phase"] = {{"phi", rational_str(spec.phi)}, {"eta", rational_str(spec.eta)}};
    ordered_json events = ordered_json::array();
    for (const Rational& t : crossing_values(N, q, spec))
      for (const CrossingEvent& ev : crossings_at_value(t, N, q, p, spec))
        events.push_back({{"t", rational_str(ev.t)},
                          {"m", ev.m},
                          {"s", ev.s},
                          {"d", ev.d},
                          {"i", ev.gen_index},
                          {"sign", ev.sign}});
    extra["events"] = std::move(events);
  } else {  // float
    double phi = phase.empty()
                     ? static_cast<double>(default_phase(N, q, p).phi)
                     : static_cast<double>(parse_rational(phase));
    word = detect_braid_float(N, q, p, phi);
    extra["phase"] = {{"phi", phi}};
  }
  if (format == "text") {
    std::cout << word.str() << "\n";
  } else {
    ordered_json j = params_json(params);
    j["method"] = method;
    j["strands"] = word.strands();
    j["length"] = word.letters().size();
    j["word"] = word.str();
    for (auto& [key, value] : extra.items()) j[key] = std::move(value);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(int N, int q, int p, int phases) {
  BraidWord symbolic = lissajous_braid(N, q, p);
  PhaseSpec spec = default_phase(N, q, p);
  BraidWord exact = enumerate_braid(N, q, p, spec);
  BraidWord floated = detect_braid_float(N, q, p, static_cast<double>(spec.phi));
  CompareVerdict se = compare_up_to_mirror(symbolic, exact);
  CompareVerdict ef = compare_up_to_mirror(exact, floated);
  std::cout << "symbolic: " << symbolic.str() << "\n";
  std::cout << "exact:    " << exact.str() << "\n";
  std::cout << "float:    " << floated.str() << "\n";
  std::cout << "symbolic-vs-exact: " << verdict_name(se) << "\n";
  std::cout << "exact-vs-float: " << verdict_name(ef) << "\n";
  bool failed = se == CompareVerdict::Distinct || ef == CompareVerdict::Distinct;
  if (phases > 1) {
    // step over whole periods of the critical-phase lattice so every probe
    // keeps the same safety margin to the nearest critical phase
    int d = normalize_params(N, q, p).d;
    Rational spacing(static_cast<long long>(N) * d, 2LL * p * q);
    std::vector<LaurentPoly> values;
    for (int j = 0; j < phases; ++j) {
      PhaseSpec shifted = spec;
      shifted.phi += spacing * j;
      BraidWord w = enumerate_braid(N, q, p, shifted);
      CompareVerdict v = compare_up_to_mirror(symbolic, w);
      std::cout << "phase " << rational_str(shifted.phi) << ": "
                << verdict_name(v) << "\n";
      if (v == CompareVerdict::Distinct) failed = true;
      LaurentPoly jw = jones_polynomial(w);
      bool known = false;
      for (const LaurentPoly& seen : values) known = known || seen == jw;
      if (!known) values.push_back(std::move(jw));
    }
    bool ok = values.size() <= 2;
    if (values.size() == 2) ok = values[0] == values[1].reciprocal();
    std::cout << "phase-sweep jones values: " << values.size()
              << (ok ? " (consistent)" : " (INCONSISTENT)") << "\n";
    if (!ok) failed = true;
  }
  return failed ? kExitVerifyFailed : 0;
}

int cmd_classify(int N, int q, int p) {
  Classification c = classify(N, q, p);
  std::cout << "N=" << N << " q=" << q << " p=" << p << "\n";
  std::cout << "d: " << c.d << "\n";
  std::cout << "ribbon: " << (c.ribbon ? "yes" : "no") << "\n";
  std::cout << "periodic_d: " << c.periodic_d << "\n";
  std::cout << "genus_bound: " << c.genus_bound << "\n";
  std::cout << "quasipositive: " << (c.quasipositive_case ? "yes" : "no") << "\n";
  if (c.exact_genus)
    std::cout << "exact_genus: " << *c.exact_genus << "\n";
  else
    std::cout << "exact_genus: -\n";
  std::cout << "amphicheiral: " << (c.amphicheiral ? "yes" : "no") << "\n";
  if (c.trivial_family) {
    std::cout << "trivial_family: " << trivial_family_name(*c.trivial_family) << "\n";
    LaurentPoly v = jones_polynomial(lissajous_braid(N, q, p));
    std::cout << "jones_trivial: " << (v.is_one() ? "yes" : "NO (" + v.str() + ")")
              << "\n";
  } else {
    std::cout << "trivial_family: -\n";
  }
  return 0;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path,
              const std::string& format) {
  SweepResult result = run_sweep(spec);
  std::string table = format == "json" ? to_json(result.rows) : to_tsv(result.rows);
  if (out_path.empty()) {
    std::cout << table;
    return 0;
  }
  int rc = write_file(out_path, table);
  if (rc != 0) return rc;
  std::cout << "wrote " << result.rows.size() << " rows (skipped " << result.skipped
            << ") to " << out_path << "\n";
  return 0;
}

int cmd_render(int N, int q, int p, const std::string& svg_path,
               const std::string& coords_path, int samples,
               const std::string& phase) {
  normalize_params(N, q, p);
  if (!coords_path.empty()) {
    double phi = phase.empty() ? 0.0 : static_cast<double>(parse_rational(phase));
    int rc = write_file(coords_path,
                        space_curve_csv(N, q, p, phi, samples > 0 ? samples : 2000));
    if (rc != 0) return rc;
    std::cout << "wrote space curve to " << coords_path << "\n";
  }
  if (!svg_path.empty()) {
    double phi = phase.empty()
                     ? static_cast<double>(default_phase(N, q, p).phi)
                     : static_cast<double>(parse_rational(phase));
    int rc = write_file(svg_path,
                        braid_svg(N, q, p, phi, samples > 0 ? samples : 600));
    if (rc != 0) return rc;
    std::cout << "wrote braid diagram to " << svg_path << "\n";
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Braids, invariants and diagrams of Lissajous-toric knots K(N,q,p)"};
  app.require_subcommand(1);

  int N = 0, q = 0, p = 0;
  std::string method = "symbolic", phase, format = "text";
  auto* braid = app.add_subcommand("braid", "Print the braid word of K(N,q,p)");
  braid->add_option("N", N, "number of strands / rotations")->required();
  braid->add_option("q", q, "radial frequency")->required();
  braid->add_option("p", p, "vertical frequency")->required();
  braid->add_option("--method", method, "construction: symbolic, exact or float")
      ->check(CLI::IsMember({"symbolic", "exact", "float"}));
  braid->add_option("--phase", phase,
                    "phase as a rational, e.g. -33/32 (exact/float methods; "
                    "float uses the window offset of the default phase)");
  braid->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int phases = 1;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check the closed-form word against both crossing oracles");
  verify->add_option("N", N, "")->required();
  verify->add_option("q", q, "")->required();
  verify->add_option("p", p, "")->required();
  verify->add_option("--phases", phases, "also re-enumerate at this many phases")
      ->check(CLI::PositiveNumber);

  auto* classify_cmd =
      app.add_subcommand("classify", "Arithmetic classification of the knot");
  classify_cmd->add_option("N", N, "")->required();
  classify_cmd->add_option("q", q, "")->required();
  classify_cmd->add_option("p", p, "")->required();

  SweepSpec sweep_spec;
  std::string out_path, sweep_format = "tsv";
  auto* sweep =
      app.add_subcommand("sweep", "Tabulate braids and invariants over a p range");
  sweep->add_option("--N", sweep_spec.N, "")->required();
  sweep->add_option("--q", sweep_spec.q, "")->required();
  sweep->add_option("--p-min", sweep_spec.p_min, "")->required();
  sweep->add_option("--p-max", sweep_spec.p_max, "")->required();
  sweep->add_option("--out", out_path, "output path (default: stdout)");
  sweep->add_option("--format", sweep_format, "table format")
      ->check(CLI::IsMember({"tsv", "json"}));
  sweep->add_flag("--parallel", sweep_spec.parallel, "compute rows in parallel");

  std::string svg_path, coords_path;
  int samples = 0;
  auto* render = app.add_subcommand("render", "Emit the space curve or a braid SVG");
  render->add_option("N", N, "")->required();
  render->add_option("q", q, "")->required();
  render->add_option("p", p, "")->required();
  render->add_option("--svg", svg_path, "write a braid diagram SVG here");
  render->add_option("--coords", coords_path, "write the space curve CSV here");
  render->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  render->add_option("--phase", phase, "phase as a rational");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (braid->parsed()) return cmd_braid(N, q, p, method, phase, format);
  if (verify->parsed()) return cmd_verify(N, q, p, phases);
  if (classify_cmd->parsed()) return cmd_classify(N, q, p);
  if (sweep->parsed()) return cmd_sweep(sweep_spec, out_path, sweep_format);
  if (render->parsed()) {
    if (svg_path.empty() && coords_path.empty()) {
      std::cerr << "error: render needs --svg and/or --coords\n";
      return kExitInvalid;
    }
    return cmd_render(N, q, p, svg_path, coords_path, samples, phase);
  }
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const critical_phase_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
