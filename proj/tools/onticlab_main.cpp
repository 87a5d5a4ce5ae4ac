// Command-line front end: builds family documents, verifies and synthesizes
// anti-distinguishing measurements, audits ontological models, sweeps the
// analytic bounds, and runs the overlap maximization programs. Exit codes:
// 0 for a pass or optimal result, 1 for a substantive negative verdict (failed
// audit, ontic classification, infeasible program, failed verification), 2 for
// usage or IO errors with a single-line diagnostic on stderr.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "onticlab/bounds.hpp"
#include "onticlab/constructions.hpp"
#include "onticlab/errors.hpp"
#include "onticlab/json_io.hpp"
#include "onticlab/ontomodel.hpp"
#include "onticlab/overlap_lp.hpp"
#include "onticlab/povm_synth.hpp"
#include "onticlab/scenario.hpp"
#include "onticlab/tolerances.hpp"

namespace {

using namespace onticlab;

std::string single_line(std::string msg) {
  for (char& c : msg)
    if (c == '\n' || c == '\r') c = ' ';
  return msg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("cannot write " + path);
}

// Reports go to stdout unless an output path was given.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

// Tolerance overrides ride the same path as ONTICLAB_TOLERANCE_FILE: the
// name=value pairs are merged over any existing override file into a
// temporary one, the variable is pointed at it, and the set is reloaded.
void apply_cli_tolerances(const std::vector<std::string>& pairs) {
  if (pairs.empty()) return;
  nlohmann::ordered_json merged = nlohmann::ordered_json::object();
  if (const char* existing = std::getenv("ONTICLAB_TOLERANCE_FILE");
      existing != nullptr && *existing != '\0') {
    merged = nlohmann::ordered_json::parse(read_file(existing), nullptr, false);
    if (!merged.is_object()) throw InvalidInput("tolerance file must hold a JSON object");
  }
  for (const std::string& pair : pairs) {
    const std::size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
      throw InvalidInput("tolerance overrides take the form name=value: " + pair);
    const nlohmann::ordered_json value =
        nlohmann::ordered_json::parse(pair.substr(eq + 1), nullptr, false);
    if (!value.is_number())
      throw InvalidInput("tolerance override value must be a number: " + pair);
    merged[pair.substr(0, eq)] = value;
  }
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() /
      ("onticlab_tol_" + std::to_string(::getpid()) + ".json");
  write_file(path.string(), merged.dump(2) + "\n");
  ::setenv("ONTICLAB_TOLERANCE_FILE", path.c_str(), 1);
  reload_tolerances();
}

int generator_dim(double raw, const char* flag) {
  if (!(raw >= 2.0) || raw > 1e6 || std::nearbyint(raw) != raw)
    throw InvalidInput(std::string(flag) + " dimension must be a small positive integer");
  return static_cast<int>(raw);
}

// The canonical triple the synthesized measurement excludes, in element
// order: element i never fires on state i.
std::vector<LabeledState> thm1_triple_states(double alpha, int d) {
  const Thm1Family fam = build_thm1(alpha, d);
  return {{"ket0", fam.basis.vectors[0]}, {"phi", fam.phi}, {"psi", fam.psi}};
}

int cmd_construct(int theorem, std::optional<double> alpha, std::optional<double> alpha_sq,
                  int d, const std::string& out) {
  if (!alpha.has_value() && !alpha_sq.has_value())
    throw InvalidInput("construct needs --alpha or --alpha-sq");
  const double a = alpha.has_value() ? *alpha : std::sqrt(*alpha_sq);
  const std::string text =
      theorem == 1 ? family_to_json(build_thm1(a, d)) : family_to_json(build_thm2(a, d));
  emit(out, text);
  return 0;
}

int cmd_check_antidist(const std::string& povm_path, const std::string& states_path,
                       const std::vector<double>& thm1_args, int d, const std::string& out) {
  const Povm povm = povm_from_json(read_file(povm_path));
  std::vector<StateVector> states;
  if (!states_path.empty()) {
    for (const LabeledState& s : states_from_json(read_file(states_path)))
      states.push_back(s.state);
  } else if (!thm1_args.empty()) {
    for (const LabeledState& s : thm1_triple_states(thm1_args[0], d)) states.push_back(s.state);
  } else {
    throw InvalidInput("check-antidist needs --states or --thm1");
  }
  const AntidistReport report = verify_antidistinguishing(povm, states);
  emit(out, antidist_report_to_json(report, tol().antidist_pass));
  return report.pass ? 0 : 1;
}

int cmd_synth_povm(const std::string& states_path, const std::vector<double>& thm1_args, int d,
                   int max_iters, double eps, const std::string& out) {
  std::vector<LabeledState> labeled;
  if (!states_path.empty()) {
    labeled = states_from_json(read_file(states_path));
  } else if (!thm1_args.empty()) {
    labeled = thm1_triple_states(thm1_args[0], d);
  } else {
    throw InvalidInput("synth-povm needs --states or --thm1");
  }
  std::vector<StateVector> states;
  for (const LabeledState& s : labeled) states.push_back(s.state);
  SynthesisResult result;
  try {
    result = synthesize_antidistinguishing(states, max_iters, eps);
  } catch (const NoConvergence& e) {
    std::cerr << single_line(e.what()) << "\n";
    return 1;
  }
  for (std::size_t i = 0; i < labeled.size(); ++i)
    result.povm.labels[i] = "not_" + labeled[i].label;
  const AntidistReport verify = verify_antidistinguishing(result.povm, states);
  emit(out, synthesis_to_json(result, verify, tol().antidist_pass));
  return verify.pass ? 0 : 1;
}

// States outside the scenario's named basis get classified against it; a
// partially named basis (unnamed kets) offers nothing to classify against.
std::vector<std::pair<std::string, SuperpositionReport>> scenario_classifications(
    const OnticModel& model, const Scenario& sc) {
  std::vector<std::pair<std::string, SuperpositionReport>> out;
  if (sc.basis_states.empty()) return out;
  for (const std::string& b : sc.basis_states)
    if (b.empty()) return out;
  for (const LabeledState& s : sc.states) {
    bool in_basis = false;
    for (const std::string& b : sc.basis_states) in_basis = in_basis || b == s.label;
    if (!in_basis)
      out.emplace_back(s.label, classify_superposition(model, s.label, sc.basis_states));
  }
  return out;
}

int cmd_audit(const std::string& model_path, const std::string& scenario_path,
              std::optional<double> epsilon, const std::string& out) {
  const OnticModel model = model_from_json(read_file(model_path));
  Scenario sc = scenario_from_json(read_file(scenario_path));
  if (epsilon.has_value()) sc.epsilon = *epsilon;
  const AuditReport report = audit_model(model, sc);
  emit(out, audit_to_json(report, sc.epsilon, scenario_classifications(model, sc)));
  return report.pass ? 0 : 1;
}

int cmd_classify(const std::string& model_path, const std::string& state,
                 const std::vector<std::string>& basis, const std::string& out) {
  const OnticModel model = model_from_json(read_file(model_path));
  const SuperpositionReport report = classify_superposition(model, state, basis);
  emit(out, classification_to_json(state, basis, report));
  return report.verdict == SuperpositionVerdict::Epistemic ? 0 : 1;
}

int cmd_bounds_table(int d, double epsilon, const std::string& format, const std::string& out) {
  const std::vector<SweepRow> rows = improvement_region(d, epsilon);
  emit(out, format == "csv" ? sweep_to_csv(rows) : sweep_to_json(rows));
  return 0;
}

int cmd_lp(const std::string& scenario_path, const std::vector<double>& thm1_args,
           const std::vector<double>& thm2_args, std::vector<std::string> pair,
           std::optional<double> epsilon, bool asymmetric, bool epistemic,
           const std::string& witness_path, const std::string& out) {
  const int sources = (scenario_path.empty() ? 0 : 1) + (thm1_args.empty() ? 0 : 1) +
                      (thm2_args.empty() ? 0 : 1);
  if (sources != 1)
    throw InvalidInput("lp-max-overlap needs exactly one of --scenario, --thm1, --thm2");

  LpReport report;
  Scenario sc;
  if (!thm1_args.empty()) {
    const int d = generator_dim(thm1_args[1], "--thm1");
    sc = thm1_scenario(thm1_args[0], d, epsilon.value_or(0.0));
    report.thm1 = thm1_bound(thm1_args[0]);
  } else if (!thm2_args.empty()) {
    const int d = generator_dim(thm2_args[1], "--thm2");
    sc = thm2_scenario(thm2_args[0], d, epsilon.value_or(0.0));
    report.thm2 = thm2_bound(thm2_args[0], d);
  } else {
    sc = scenario_from_json(read_file(scenario_path));
    if (epsilon.has_value()) sc.epsilon = *epsilon;
    if (pair.empty()) throw InvalidInput("lp-max-overlap needs --pair with --scenario");
  }
  if (pair.empty()) pair = {"ket0", "psi"};

  const StateVector& s1 = sc.states[static_cast<std::size_t>(sc.state_index(pair[0]))].state;
  const StateVector& s2 = sc.states[static_cast<std::size_t>(sc.state_index(pair[1]))].state;
  report.pair_first = pair[0];
  report.pair_second = pair[1];
  report.epsilon = sc.epsilon;
  report.overlap_sq = std::norm(inner_product(s1, s2));
  report.asym_trivial = asym_trivial_bound(report.overlap_sq);
  report.sym_trivial = symmetric_trivial_bound(report.overlap_sq);

  const bool run_asymmetric = asymmetric || epistemic;
  if (!witness_path.empty() && run_asymmetric)
    throw InvalidInput("--witness needs the symmetric program");

  LpStatus status = LpStatus::Infeasible;
  if (run_asymmetric) {
    report.program = epistemic ? "asymmetric-epistemic" : "asymmetric";
    AsymmetricOptions options;
    options.epistemic = epistemic;
    const AsymmetricOverlapResult res =
        max_asymmetric_overlap_upper(sc, pair[0], pair[1], options);
    status = res.status;
    if (status == LpStatus::Optimal) report.value = res.value;
  } else {
    report.program = "symmetric";
    const SymmetricOverlapResult res = max_symmetric_overlap(sc, pair[0], pair[1]);
    status = res.status;
    if (status == LpStatus::Optimal) {
      report.value = res.value;
      if (!witness_path.empty()) {
        write_file(witness_path, model_to_json(res.model));
        report.witness_path = witness_path;
      }
    }
  }
  report.status = status == LpStatus::Optimal ? "optimal" : "infeasible";
  emit(out, lp_report_to_json(report));
  return status == LpStatus::Optimal ? 0 : 1;
}

int cmd_toy_bit(const std::string& out_model, const std::string& out_scenario,
                const std::string& out) {
  const ToyBit toy = spekkens_toy_bit();
  if (!out_model.empty()) write_file(out_model, model_to_json(toy.model));
  if (!out_scenario.empty()) write_file(out_scenario, scenario_to_json(toy.scenario));
  if (!out.empty() || (out_model.empty() && out_scenario.empty()))
    emit(out, toy_bit_to_json(toy));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "State families, anti-distinguishing measurements, analytic overlap "
      "bounds, and ontological-model overlap programs"};
  app.require_subcommand(1);

  unsigned seed = 42;  // reserved: no current subcommand draws randomness
  std::vector<std::string> tolerance_pairs;
  app.add_option("--seed", seed, "random seed (default 42)");
  app.add_option("--tolerance", tolerance_pairs,
                 "tolerance override name=value (repeatable)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a state family document");
  int theorem = 1;
  std::optional<double> alpha;
  std::optional<double> alpha_sq;
  int family_d = 4;
  std::string construct_out;
  construct->add_option("--theorem", theorem, "family shape: 1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  auto* alpha_opt = construct->add_option("--alpha", alpha, "overlap amplitude alpha");
  construct->add_option("--alpha-sq", alpha_sq, "squared overlap alpha^2")
      ->excludes(alpha_opt)
      ->check(CLI::PositiveNumber);
  construct->add_option("--d", family_d, "Hilbert space dimension (default 4)");
  construct->add_option("--out", construct_out, "output path (default stdout)");
  construct->add_option("--format", "output format")->check(CLI::IsMember({"json"}));

  // check-antidist
  auto* check = app.add_subcommand("check-antidist",
                                   "Verify a measurement excludes each state in a list");
  std::string check_povm_path;
  std::string check_states_path;
  std::vector<double> check_thm1;
  int check_d = 4;
  std::string check_out;
  check->add_option("--povm", check_povm_path, "POVM document path")->required();
  check->add_option("--states", check_states_path, "states document path");
  check->add_option("--thm1", check_thm1, "use the family triple for this alpha")
      ->expected(1);
  check->add_option("--d", check_d, "dimension for --thm1 (default 4)");
  check->add_option("--out", check_out, "output path (default stdout)");
  check->add_option("--format", "output format")->check(CLI::IsMember({"json"}));

  // synth-povm
  auto* synth = app.add_subcommand("synth-povm",
                                   "Synthesize an anti-distinguishing measurement");
  std::string synth_states_path;
  std::vector<double> synth_thm1;
  int synth_d = 4;
  int synth_max_iters = tol().synth_max_iters;
  double synth_eps = tol().synth_tol;
  std::string synth_out;
  synth->add_option("--states", synth_states_path, "states document path (three states)");
  synth->add_option("--thm1", synth_thm1, "use the family triple for this alpha")
      ->expected(1);
  synth->add_option("--d", synth_d, "dimension for --thm1 (default 4)");
  synth->add_option("--max-iters", synth_max_iters, "projection iteration cap");
  synth->add_option("--tol", synth_eps, "residual target");
  synth->add_option("--out", synth_out, "output path (default stdout)");
  synth->add_option("--format", "output format")->check(CLI::IsMember({"json"}));

  // audit
  auto* audit = app.add_subcommand("audit",
                                   "Check a model reproduces a scenario's Born table");
  std::string audit_model_path;
  std::string audit_scenario_path;
  std::optional<double> audit_epsilon;
  std::string audit_out;
  audit->add_option("--model", audit_model_path, "model document path")->required();
  audit->add_option("--scenario", audit_scenario_path, "scenario document path")->required();
  audit->add_option("--epsilon", audit_epsilon, "deviation allowance override");
  audit->add_option("--out", audit_out, "output path (default stdout)");
  audit->add_option("--format", "output format")->check(CLI::IsMember({"json"}));

  // classify
  auto* classify = app.add_subcommand("classify",
                                      "Classify a superposition as epistemic or ontic");
  std::string classify_model_path;
  std::string classify_state;
  std::vector<std::string> classify_basis;
  std::string classify_out;
  classify->add_option("--model", classify_model_path, "model document path")->required();
  classify->add_option("--state", classify_state, "state to classify")->required();
  classify->add_option("--basis", classify_basis, "basis state names")
      ->required()
      ->expected(-1);
  classify->add_option("--out", classify_out, "output path (default stdout)");
  classify->add_option("--format", "output format")->check(CLI::IsMember({"json"}));

  // bounds-table
  auto* bounds = app.add_subcommand("bounds-table",
                                    "Sweep the analytic bounds over the default grid");
  int bounds_d = 0;
  double bounds_epsilon = 1e-9;
  std::string bounds_format = "csv";
  std::string bounds_out;
  bounds->add_option("--d", bounds_d, "Hilbert space dimension")->required();
  bounds->add_option("--epsilon", bounds_epsilon, "measurement error allowance")
      ->check(CLI::NonNegativeNumber);
  bounds->add_option("--format", bounds_format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", bounds_out, "output path (default stdout)");

  // lp-max-overlap
  auto* lp = app.add_subcommand("lp-max-overlap",
                                "Maximize a preparation overlap over vertex models");
  std::string lp_scenario_path;
  std::vector<double> lp_thm1;
  std::vector<double> lp_thm2;
  std::vector<std::string> lp_pair;
  std::optional<double> lp_epsilon;
  bool lp_asymmetric = false;
  bool lp_epistemic = false;
  std::string lp_witness;
  std::string lp_out;
  lp->add_option("--scenario", lp_scenario_path, "scenario document path");
  lp->add_option("--thm1", lp_thm1, "single-companion scenario: alpha d")->expected(2);
  lp->add_option("--thm2", lp_thm2, "general-d scenario: alpha d")->expected(2);
  lp->add_option("--pair", lp_pair, "the two state labels")->expected(2);
  lp->add_option("--epsilon", lp_epsilon, "Born deviation allowance");
  lp->add_flag("--asymmetric", lp_asymmetric,
               "bound the mass of the second state's preparation in the first's support");
  lp->add_flag("--epistemic-constraint", lp_epistemic,
               "add the basis-support covering constraint (implies --asymmetric)");
  lp->add_option("--witness", lp_witness, "write the optimal model here (symmetric only)");
  lp->add_option("--out", lp_out, "output path (default stdout)");
  lp->add_option("--format", "output format")->check(CLI::IsMember({"json"}));

  // toy-bit
  auto* toy = app.add_subcommand("toy-bit", "Emit the bundled toy bit model and scenario");
  std::string toy_out_model;
  std::string toy_out_scenario;
  std::string toy_out;
  toy->add_option("--out-model", toy_out_model, "write the model document here");
  toy->add_option("--out-scenario", toy_out_scenario, "write the scenario document here");
  toy->add_option("--out", toy_out, "combined document path (default stdout)");
  toy->add_option("--format", "output format")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << single_line(e.what()) << "\n";
    return 2;
  }

  try {
    apply_cli_tolerances(tolerance_pairs);
    if (app.got_subcommand(construct))
      return cmd_construct(theorem, alpha, alpha_sq, family_d, construct_out);
    if (app.got_subcommand(check))
      return cmd_check_antidist(check_povm_path, check_states_path, check_thm1, check_d,
                                check_out);
    if (app.got_subcommand(synth))
      return cmd_synth_povm(synth_states_path, synth_thm1, synth_d, synth_max_iters,
                            synth_eps, synth_out);
    if (app.got_subcommand(audit))
      return cmd_audit(audit_model_path, audit_scenario_path, audit_epsilon, audit_out);
    if (app.got_subcommand(classify))
      return cmd_classify(classify_model_path, classify_state, classify_basis, classify_out);
    if (app.got_subcommand(bounds))
      return cmd_bounds_table(bounds_d, bounds_epsilon, bounds_format, bounds_out);
    if (app.got_subcommand(lp))
      return cmd_lp(lp_scenario_path, lp_thm1, lp_thm2, lp_pair, lp_epsilon, lp_asymmetric,
                    lp_epistemic, lp_witness, lp_out);
    if (app.got_subcommand(toy)) return cmd_toy_bit(toy_out_model, toy_out_scenario, toy_out);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << single_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << single_line(e.what()) << "\n";
    return 2;
  }
}
