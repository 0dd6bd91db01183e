#include "djring/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "djring/errors.hpp"
#include "djring/field_io.hpp"
#include "djring/function_file.hpp"
#include "djring/optical_run.hpp"
#include "djring/optics.hpp"
#include "djring/program_text.hpp"
#include "djring/quantum_ref.hpp"
#include "djring/report.hpp"
#include "djring/sweep.hpp"
#include "djring/tree_core.hpp"

namespace djring::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBiased = 2;

constexpr double kAbstractTolerance = 1e-12;
constexpr double kOpticalTolerance = 1e-6;
constexpr int kMaxGeometryRounds = 20;

struct OpticsFlags {
  optics::OpticsParams params;
  double epsilon = kDefaultEpsilon;

  void attach(CLI::App* cmd) {
    cmd->add_option("--spacing", params.spacing, "Initial spot spacing d")->capture_default_str();
    cmd->add_option("--spot-size", params.spot_radius, "Gaussian spot radius delta")
        ->capture_default_str();
    cmd->add_option("--grid", params.grid_size, "Samples per axis (power of two >= 64)")
        ->capture_default_str();
    cmd->add_option("--window", params.window, "Physical width of the sampled plane")
        ->capture_default_str();
    cmd->add_option("--loss", params.loss, "Per-round amplitude transmission in (0, 1]")
        ->capture_default_str();
  }
};

const std::map<std::string, Mode> kModes{{"abstract", Mode::Abstract}, {"optical", Mode::Optical}};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

// ---- classify -------------------------------------------------------------

struct ClassifyOptions {
  std::string function_file;
  std::string program_file;
  Mode mode = Mode::Abstract;
  int max_n = 24;
  std::string dump_prefix;
  OpticsFlags optics;
};

int cmd_classify(const ClassifyOptions& opt, std::ostream& out) {
  tree::GateProgram program;
  if (!opt.function_file.empty()) {
    program = oracle::load_function_file(opt.function_file, opt.max_n).compile();
  } else {
    program = tree::parse_program(read_file(opt.program_file));
  }
  if (program.n > opt.max_n) {
    throw ResourceError("n = " + std::to_string(program.n) + " exceeds the bound " +
                        std::to_string(opt.max_n));
  }
  const auto state = tree::run_program(program);
  const auto table = oracle::table_from_leaves(state, program.global_phase);

  RunReport report;
  report.mode = opt.mode;
  report.n = program.n;
  report.function_class = oracle::classify_table(table);
  report.readout = tree::readout_amplitude(state);
  report.global_phase = program.global_phase;
  report.epsilon = opt.optics.epsilon;
  report.rounds = program.n;
  report.resolvable_rounds =
      optics::resolvable_rounds(opt.optics.params.spacing, opt.optics.params.spot_radius);
  report.resolvable = report.rounds <= report.resolvable_rounds;

  if (opt.mode == Mode::Abstract) {
    report.ratio = std::norm(report.readout);
  } else {
    optics::OpticalBench bench(opt.optics.params, opt.optics.epsilon);
    std::vector<double> weights;
    weights.reserve(state.size());
    for (int s : tree::leaf_signs(state)) weights.push_back(program.global_phase ? -s : s);
    report.optical = bench.run_weights(program.n, weights);
    report.ratio = report.optical->ratio;
    report.warnings = report.optical->warnings;
    if (!opt.dump_prefix.empty()) {
      const auto field = optics::synthesize_field(bench.lattice(program.n), weights, bench.params());
      const auto ft = optics::lens_fourier(field);
      optics::save_field_csv(opt.dump_prefix + "_field.csv", field);
      optics::save_field_csv(opt.dump_prefix + "_fourier.csv", ft);
      optics::save_intensity_pgm(opt.dump_prefix + "_field.pgm", field);
      optics::save_intensity_pgm(opt.dump_prefix + "_fourier.pgm", ft);
    }
  }
  report.verdict = verdict_from_ratio(report.ratio, report.epsilon);
  print_report(out, report);
  return report.verdict == Verdict::Biased ? kExitBiased : kExitOk;
}

// ---- compile --------------------------------------------------------------

struct CompileOptions {
  std::string function_file;
  std::string out_file;
};

int cmd_compile(const CompileOptions& opt, std::ostream& out) {
  const auto spec = oracle::load_function_file(opt.function_file);
  write_text(opt.out_file, tree::program_to_text(spec.compile()), out);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string function_file;
  int n = 0;
  std::uint64_t seed = 1;
  int n_limit = 16;
  bool optical = false;
  OpticsFlags optics;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  std::optional<oracle::TruthTable> table;
  if (!opt.function_file.empty()) {
    table = oracle::load_function_file(opt.function_file, opt.n_limit).to_table();
  } else {
    if (opt.n < 1) throw ContractViolation("verify needs --function or --n");
    if (opt.n > opt.n_limit) {
      throw ResourceError("n = " + std::to_string(opt.n) + " exceeds --n-limit " +
                          std::to_string(opt.n_limit));
    }
    std::mt19937_64 rng(opt.seed);
    table = oracle::random_table(opt.n, rng);
  }
  const auto& t = *table;
  const auto program = oracle::compile_general(t);
  const auto state = tree::run_program(program);

  const double qref = qref::dj_output(t).amps[0].real();
  const double closed = qref::zero_amplitude_closed_form(t);
  const auto readout = tree::readout_amplitude(state) * (program.global_phase ? -1.0 : 1.0);

  const double abstract_err = std::max(
      {std::abs(readout - std::complex<double>(qref, 0.0)), std::abs(closed - qref)});
  bool pass = abstract_err <= kAbstractTolerance;

  out << "n = " << t.n() << '\n';
  out << "class = " << oracle::to_string(oracle::classify_table(t).tag) << '\n';
  out << "qref_zero_amplitude = " << format_number(qref) << '\n';
  out << "closed_form_zero_amplitude = " << format_number(closed) << '\n';
  out << "tree_readout_re = " << format_number(readout.real()) << '\n';
  out << "tree_readout_im = " << format_number(readout.imag()) << '\n';
  out << "abstract_discrepancy = " << format_number(abstract_err) << '\n';
  out << "abstract_tolerance = " << format_number(kAbstractTolerance) << '\n';
  if (opt.optical) {
    optics::OpticalBench bench(opt.optics.params, opt.optics.epsilon);
    const auto optical = bench.run(t);
    const double optical_err = std::abs(optical.ratio - qref * qref);
    pass = pass && optical_err <= kOpticalTolerance;
    out << "optical_ratio = " << format_number(optical.ratio) << '\n';
    out << "predicted_ratio = " << format_number(qref * qref) << '\n';
    out << "optical_discrepancy = " << format_number(optical_err) << '\n';
    out << "optical_tolerance = " << format_number(kOpticalTolerance) << '\n';
  }
  out << "result = " << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitError;
}

// ---- sweep ----------------------------------------------------------------

struct SweepOptions {
  int n = 2;
  Mode mode = Mode::Abstract;
  std::size_t samples = 4;
  std::uint64_t seed = 1;
  std::string out_file;
  OpticsFlags optics;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
  const auto rows = bias_sweep(opt.n, opt.mode, opt.optics.params, opt.samples, opt.seed);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_text(opt.out_file, csv.str(), out);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.abs_err);
  if (!opt.out_file.empty() && opt.out_file != "-") {
    out << "rows = " << rows.size() << '\n';
    out << "max_abs_err = " << format_number(worst) << '\n';
  }
  return kExitOk;
}

// ---- geometry -------------------------------------------------------------

struct GeometryOptions {
  int rounds = 6;
  std::string out_file;
  OpticsFlags optics;
};

int cmd_geometry(const GeometryOptions& opt, std::ostream& out) {
  if (opt.rounds < 1) throw ContractViolation("--rounds must be >= 1");
  if (opt.rounds > kMaxGeometryRounds) {
    throw ResourceError("--rounds is limited to " + std::to_string(kMaxGeometryRounds));
  }
  const auto& params = opt.optics.params;
  const int resolvable = optics::resolvable_rounds(params.spacing, params.spot_radius);
  std::ostringstream csv;
  csv << "round,spots,spacing,extent,phi,prism_setting,resolvable\n";
  auto lat = optics::initial_lattice(params);
  for (int k = 1; k <= opt.rounds; ++k) {
    if (k > 1) lat = optics::round_trip_lattice(lat, params);
    const auto angles = optics::dove_rotation_angle(k);
    csv << k << ',' << lat.count() << ',' << format_number(optics::min_pair_distance(lat.positions))
        << ',' << format_number(optics::lattice_extent(lat)) << ',' << format_number(angles.phi)
        << ',' << format_number(angles.prism_setting) << ',' << (k <= resolvable ? "true" : "false")
        << '\n';
  }
  write_text(opt.out_file, csv.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ring-cavity Deutsch-Jozsa simulator"};
  app.require_subcommand(1);

  ClassifyOptions classify;
  auto* c = app.add_subcommand("classify", "Classify a function as constant, balanced or biased");
  auto* c_fn = c->add_option("--function", classify.function_file, "Function file")
                   ->check(CLI::ExistingFile);
  auto* c_prog = c->add_option("--program", classify.program_file, "Gate program file")
                     ->check(CLI::ExistingFile);
  c_fn->excludes(c_prog);
  c->add_option("--mode", classify.mode, "abstract or optical")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  c->add_option("--max-n", classify.max_n, "Largest register size accepted")->capture_default_str();
  c->add_option("--epsilon", classify.optics.epsilon, "Classification threshold")
      ->capture_default_str();
  c->add_option("--dump", classify.dump_prefix,
                "Optical mode: write PREFIX_{field,fourier}.{csv,pgm}");
  classify.optics.attach(c);

  CompileOptions compile;
  auto* k = app.add_subcommand("compile", "Compile a function file into a gate program");
  k->add_option("--function", compile.function_file, "Function file")
      ->required()
      ->check(CLI::ExistingFile);
  k->add_option("--out", compile.out_file, "Output program file (stdout if omitted)");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Cross-check tree, quantum reference and optics");
  auto* v_fn = v->add_option("--function", verify.function_file, "Function file")
                   ->check(CLI::ExistingFile);
  auto* v_n = v->add_option("--n", verify.n, "Register size for a random table");
  v_fn->excludes(v_n);
  v->add_option("--seed", verify.seed, "Seed for the random table")->capture_default_str();
  v->add_option("--n-limit", verify.n_limit, "Largest register size accepted")
      ->capture_default_str();
  v->add_flag("--optical", verify.optical, "Include the optical layer");
  v->add_option("--epsilon", verify.optics.epsilon, "Classification threshold")
      ->capture_default_str();
  verify.optics.attach(v);

  SweepOptions sweep;
  auto* s = app.add_subcommand("sweep", "Bias level versus on-axis intensity table");
  s->add_option("--n", sweep.n, "Register size")->required();
  s->add_option("--mode", sweep.mode, "abstract or optical")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  s->add_option("--samples", sweep.samples, "Tables per bias level")->capture_default_str();
  s->add_option("--seed", sweep.seed, "Sampling seed")->capture_default_str();
  s->add_option("--out", sweep.out_file, "Output CSV (stdout if omitted)");
  sweep.optics.attach(s);

  GeometryOptions geometry;
  auto* g = app.add_subcommand("geometry", "Spot lattice geometry per round trip");
  g->add_option("--rounds", geometry.rounds, "Number of rounds")->capture_default_str();
  g->add_option("--out", geometry.out_file, "Output CSV (stdout if omitted)");
  geometry.optics.attach(g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (c->parsed()) {
      if (classify.function_file.empty() && classify.program_file.empty()) {
        throw ContractViolation("classify needs --function or --program");
      }
      return cmd_classify(classify, out);
    }
    if (k->parsed()) return cmd_compile(compile, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (s->parsed()) return cmd_sweep(sweep, out);
    if (g->parsed()) return cmd_geometry(geometry, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run_cli(int argc, char** argv) { return run_cli(argc, argv, std::cout, std::cerr); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage(args);
  std::vector<char*> argv;
  argv.reserve(storage.size() + 1);
  for (auto& a : storage) argv.push_back(a.data());
  argv.push_back(nullptr);
  return run_cli(static_cast<int>(storage.size()), argv.data(), out, err);
}

}  // namespace djring::cli
