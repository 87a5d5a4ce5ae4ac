#include "onticlab/tolerances.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "onticlab/errors.hpp"

namespace onticlab {

namespace {

std::map<std::string, double Tolerances::*> double_fields() {
  return {
      {"unit_norm", &Tolerances::unit_norm},
      {"orthonormal", &Tolerances::orthonormal},
      {"hermitian", &Tolerances::hermitian},
      {"eig_offdiag", &Tolerances::eig_offdiag},
      {"eig_reconstruct", &Tolerances::eig_reconstruct},
      {"unitary_residual", &Tolerances::unitary_residual},
      {"inner_match", &Tolerances::inner_match},
      {"degenerate_perp", &Tolerances::degenerate_perp},
      {"phase_only", &Tolerances::phase_only},
      {"born_row_sum", &Tolerances::born_row_sum},
      {"born_imag", &Tolerances::born_imag},
      {"state_equality", &Tolerances::state_equality},
      {"criterion_slack", &Tolerances::criterion_slack},
      {"povm_hermitian", &Tolerances::povm_hermitian},
      {"povm_psd", &Tolerances::povm_psd},
      {"povm_completeness", &Tolerances::povm_completeness},
      {"antidist_pass", &Tolerances::antidist_pass},
      {"synth_tol", &Tolerances::synth_tol},
      {"helstrom_identical", &Tolerances::helstrom_identical},
      {"dist_norm", &Tolerances::dist_norm},
      {"response_norm", &Tolerances::response_norm},
      {"stochastic_norm", &Tolerances::stochastic_norm},
      {"support", &Tolerances::support},
      {"map_renorm", &Tolerances::map_renorm},
      {"classify_epistemic", &Tolerances::classify_epistemic},
      {"born_clamp", &Tolerances::born_clamp},
      {"lp_feas", &Tolerances::lp_feas},
      {"lp_pivot", &Tolerances::lp_pivot},
      {"usable_mass", &Tolerances::usable_mass},
      {"analytic_slack", &Tolerances::analytic_slack},
  };
}

Tolerances load_from_env() {
  Tolerances t;
  const char* path = std::getenv("ONTICLAB_TOLERANCE_FILE");
  if (path != nullptr && *path != '\0') {
    std::ifstream in(path);
    if (!in) throw InvalidInput(std::string("cannot open tolerance file ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_tolerance_overrides(t, buf.str());
  }
  return t;
}

Tolerances& mutable_tol() {
  static Tolerances t = load_from_env();
  return t;
}

}  // namespace

void apply_tolerance_overrides(Tolerances& t, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("tolerance file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("tolerance file must hold a JSON object");
  auto fields = double_fields();
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "eig_max_sweeps") {
      t.eig_max_sweeps = it.value().get<int>();
    } else if (it.key() == "synth_max_iters") {
      t.synth_max_iters = it.value().get<int>();
    } else if (it.key() == "vertex_guard") {
      t.vertex_guard = it.value().get<std::size_t>();
    } else {
      auto f = fields.find(it.key());
      if (f == fields.end()) throw InvalidInput("unknown tolerance key " + it.key());
      if (!it.value().is_number()) throw InvalidInput("tolerance " + it.key() + " must be a number");
      t.*(f->second) = it.value().get<double>();
    }
  }
}

const Tolerances& tol() { return mutable_tol(); }

void reload_tolerances() { mutable_tol() = load_from_env(); }

}  // namespace onticlab
