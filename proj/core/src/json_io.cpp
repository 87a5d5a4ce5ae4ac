#include "onticlab/json_io.hpp"

#include <array>
#include <charconv>
#include <cstddef>

#include "json.hpp"
#include "onticlab/errors.hpp"
#include "onticlab/tolerances.hpp"

namespace onticlab {

namespace {

using json = nlohmann::ordered_json;

std::string dump2(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string(what) + " is not valid JSON: " + e.what());
  }
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InvalidInput(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw InvalidInput(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

// Typed extraction with a shape diagnostic instead of the library's.
template <typename T>
T as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(what + " has the wrong shape");
  }
}

double as_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw InvalidInput(what + " must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return j.get<int>();
}

// -- complex payloads -----------------------------------------------------------------

json amplitudes_doc(const StateVector& v) {
  json a = json::array();
  for (const cplx& z : v.amp) a.push_back(json::array({z.real(), z.imag()}));
  return a;
}

std::vector<cplx> complex_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw InvalidInput(what + " entries must be [re, im] pairs");
    out.emplace_back(as_number(entry[0], what), as_number(entry[1], what));
  }
  return out;
}

json state_doc(const StateVector& v) {
  json doc;
  doc["dim"] = v.dim();
  doc["amplitudes"] = amplitudes_doc(v);
  return doc;
}

StateVector state_from_doc(const json& j, const char* what) {
  const int dim = as_int(field(j, "dim", what), std::string(what) + " dim");
  StateVector v(complex_list(field(j, "amplitudes", what), std::string(what) + " amplitudes"));
  if (v.dim() != dim)
    throw InvalidInput(std::string(what) + " dim does not match the amplitude count");
  check_state(v);
  return v;
}

json matrix_doc(const Operator& e) {
  json rows = json::array();
  for (int r = 0; r < e.dim; ++r) {
    json row = json::array();
    for (int c = 0; c < e.dim; ++c)
      row.push_back(json::array({e.at(r, c).real(), e.at(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Operator matrix_from_doc(const json& j, int dim, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw InvalidInput(what + " must be a " + std::to_string(dim) + "-row matrix");
  Operator e(dim);
  for (int r = 0; r < dim; ++r) {
    const std::vector<cplx> row = complex_list(j[static_cast<std::size_t>(r)], what);
    if (static_cast<int>(row.size()) != dim)
      throw InvalidInput(what + " rows must have " + std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c) e.at(r, c) = row[static_cast<std::size_t>(c)];
  }
  return e;
}

json povm_doc(const Povm& p) {
  json doc;
  doc["dim"] = p.dim();
  doc["labels"] = p.labels;
  json elements = json::array();
  for (const Operator& e : p.elements) elements.push_back(matrix_doc(e));
  doc["elements"] = std::move(elements);
  return doc;
}

Povm povm_from_doc(const json& j, const char* what) {
  const int dim = as_int(field(j, "dim", what), std::string(what) + " dim");
  Povm p;
  p.labels = as<std::vector<std::string>>(field(j, "labels", what),
                                          std::string(what) + " labels");
  const json& elements = field(j, "elements", what);
  if (!elements.is_array())
    throw InvalidInput(std::string(what) + " elements must be an array");
  for (std::size_t k = 0; k < elements.size(); ++k)
    p.elements.push_back(
        matrix_from_doc(elements[k], dim, std::string(what) + " element " + std::to_string(k)));
  if (p.labels.size() != p.elements.size())
    throw InvalidInput(std::string(what) + " needs one label per element");
  check_povm(p);
  return p;
}

json labeled_state_doc(const LabeledState& s) {
  json doc;
  doc["label"] = s.label;
  doc["dim"] = s.state.dim();
  doc["amplitudes"] = amplitudes_doc(s.state);
  return doc;
}

std::vector<LabeledState> labeled_states_from_doc(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<LabeledState> out;
  for (const json& entry : j) {
    LabeledState s;
    s.label = as<std::string>(field(entry, "label", what), std::string(what) + " label");
    s.state = state_from_doc(entry, what);
    out.push_back(std::move(s));
  }
  return out;
}

// -- family documents -----------------------------------------------------------------

json coefficients_doc(const FamilyCoefficients& c) {
  json doc;
  doc["alpha"] = c.alpha;
  doc["beta"] = c.beta;
  doc["gamma_c"] = c.gamma_c;
  doc["delta"] = c.delta;
  doc["eta"] = c.eta;
  doc["kappa"] = c.kappa;
  return doc;
}

json basis_doc(const Onb& basis) {
  // Element 0 is the construction's |0>; the rest are the primed vectors.
  json doc;
  for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
    const std::string name = k == 0 ? "ket0" : "ket" + std::to_string(k) + "p";
    doc[name] = state_doc(basis.vectors[k]);
  }
  return doc;
}

json inner_product_entry(const std::string& bra_label, const StateVector& bra,
                         const std::string& ket_label, const StateVector& ket) {
  const cplx ip = inner_product(bra, ket);
  json doc;
  doc["bra"] = bra_label;
  doc["ket"] = ket_label;
  doc["inner_product"] = json::array({ip.real(), ip.imag()});
  doc["abs_sq"] = std::norm(ip);
  return doc;
}

json triples_doc(const std::vector<CriterionTriple>& triples) {
  json doc = json::array();
  for (const CriterionTriple& t : triples) {
    json entry;
    entry["states"] = t.states;
    entry["overlaps"] = json::array({t.a, t.b, t.c});
    entry["anti_distinguishable"] = t.pass;
    doc.push_back(std::move(entry));
  }
  return doc;
}

// -- scenario and model documents -----------------------------------------------------

json scenario_doc(const Scenario& sc) {
  json doc;
  doc["epsilon"] = sc.epsilon;
  json states = json::array();
  for (const LabeledState& s : sc.states) states.push_back(labeled_state_doc(s));
  doc["states"] = std::move(states);
  json measurements = json::array();
  for (const LabeledPovm& m : sc.measurements) {
    json entry;
    entry["label"] = m.label;
    entry["povm"] = povm_doc(m.povm);
    measurements.push_back(std::move(entry));
  }
  doc["measurements"] = std::move(measurements);
  doc["born"] = sc.born;
  json links = json::array();
  for (const PrepLink& link : sc.links) {
    json entry;
    entry["invariant"] = link.invariant;
    entry["source"] = link.source;
    entry["image"] = link.image;
    links.push_back(std::move(entry));
  }
  doc["links"] = std::move(links);
  doc["basis_measurement"] = sc.basis_measurement;
  doc["basis_states"] = sc.basis_states;
  return doc;
}

Scenario scenario_from_doc(const json& j) {
  const char* what = "scenario document";
  Scenario sc;
  sc.epsilon = as_number(field(j, "epsilon", what), "scenario epsilon");
  if (sc.epsilon < 0.0) throw InvalidInput("scenario epsilon must be nonnegative");
  sc.states = labeled_states_from_doc(field(j, "states", what), "scenario state");
  const json& measurements = field(j, "measurements", what);
  if (!measurements.is_array()) throw InvalidInput("scenario measurements must be an array");
  for (const json& entry : measurements) {
    LabeledPovm m;
    m.label = as<std::string>(field(entry, "label", what), "scenario measurement label");
    m.povm = povm_from_doc(field(entry, "povm", what), "scenario measurement");
    sc.measurements.push_back(std::move(m));
  }
  for (const LabeledState& s : sc.states)
    if (!sc.states.empty() && s.state.dim() != sc.states.front().state.dim())
      throw DimensionMismatch("scenario states must share one dimension");
  for (const LabeledPovm& m : sc.measurements)
    if (!sc.states.empty() && m.povm.dim() != sc.states.front().state.dim())
      throw DimensionMismatch("scenario measurement dimension does not match the states");

  if (j.contains("born") && !j["born"].is_null()) {
    sc.born = as<std::vector<std::vector<std::vector<double>>>>(j["born"], "scenario born");
    if (sc.born.size() != sc.states.size())
      throw InvalidInput("scenario born needs one block per state");
    for (std::size_t s = 0; s < sc.born.size(); ++s) {
      if (sc.born[s].size() != sc.measurements.size())
        throw InvalidInput("scenario born needs one row per measurement");
      for (std::size_t m = 0; m < sc.born[s].size(); ++m) {
        const std::vector<double>& row = sc.born[s][m];
        if (static_cast<int>(row.size()) != sc.measurements[m].povm.arity())
          throw InvalidInput("scenario born rows must match the measurement arity");
        double total = 0.0;
        for (double p : row) {
          if (p < 0.0 || p > 1.0) throw InvalidInput("scenario born entries must lie in [0, 1]");
          total += p;
        }
        if (std::abs(total - 1.0) > tol().born_row_sum)
          throw InvalidInput("scenario born rows must sum to 1");
      }
    }
  } else {
    // Recompute with the builders' clamping so exact zeros stay exact.
    sc.born.resize(sc.states.size());
    for (std::size_t s = 0; s < sc.states.size(); ++s) {
      sc.born[s].resize(sc.measurements.size());
      for (std::size_t m = 0; m < sc.measurements.size(); ++m) {
        const Povm& povm = sc.measurements[m].povm;
        std::vector<double> row(povm.elements.size(), 0.0);
        double total = 0.0;
        for (std::size_t k = 0; k < row.size(); ++k) {
          double p = expectation(sc.states[s].state, povm.elements[k]).real();
          if (p < tol().born_clamp) p = 0.0;
          row[k] = p;
          total += p;
        }
        if (total <= 0.0) throw NumericalFailure("Born row vanished after clamping");
        for (double& p : row) p /= total;
        sc.born[s][m] = std::move(row);
      }
    }
  }

  if (j.contains("links")) {
    const json& links = j["links"];
    if (!links.is_array()) throw InvalidInput("scenario links must be an array");
    for (const json& entry : links) {
      PrepLink link;
      link.invariant = as<std::string>(field(entry, "invariant", what), "scenario link invariant");
      link.source = as<std::string>(field(entry, "source", what), "scenario link source");
      link.image = as<std::string>(field(entry, "image", what), "scenario link image");
      (void)sc.state_index(link.invariant);
      (void)sc.state_index(link.source);
      (void)sc.state_index(link.image);
      sc.links.push_back(std::move(link));
    }
  }
  if (j.contains("basis_measurement")) {
    sc.basis_measurement =
        as<std::string>(j["basis_measurement"], "scenario basis_measurement");
    if (!sc.basis_measurement.empty()) (void)sc.measurement_index(sc.basis_measurement);
  }
  if (j.contains("basis_states")) {
    sc.basis_states = as<std::vector<std::string>>(j["basis_states"], "scenario basis_states");
    for (const std::string& s : sc.basis_states)
      if (!s.empty()) (void)sc.state_index(s);
  }
  return sc;
}

json model_doc(const OnticModel& m) {
  json doc;
  doc["space"] = m.space.labels;
  json preps = json::object();
  for (const auto& [name, dists] : m.preparations) {
    json list = json::array();
    for (const PrepDistribution& d : dists) list.push_back(d.weights);
    preps[name] = std::move(list);
  }
  doc["preparations"] = std::move(preps);
  json responses = json::object();
  for (const auto& [name, funcs] : m.responses) {
    json list = json::array();
    for (const ResponseFunction& r : funcs) list.push_back(r.probs);
    responses[name] = std::move(list);
  }
  doc["responses"] = std::move(responses);
  json transforms = json::object();
  for (const auto& [name, maps] : m.transforms) {
    json list = json::array();
    for (const StochasticMap& g : maps) list.push_back(g.kernel);
    transforms[name] = std::move(list);
  }
  doc["transforms"] = std::move(transforms);
  return doc;
}

OnticModel model_from_doc(const json& j) {
  const char* what = "model document";
  OnticModel m;
  m.space.labels =
      as<std::vector<std::string>>(field(j, "space", what), "model space");
  const json& preps = field(j, "preparations", what);
  if (!preps.is_object()) throw InvalidInput("model preparations must be an object");
  for (auto it = preps.begin(); it != preps.end(); ++it) {
    std::vector<PrepDistribution> dists;
    for (const auto& w : as<std::vector<std::vector<double>>>(
             it.value(), "model preparation " + it.key()))
      dists.push_back(PrepDistribution{w});
    m.preparations[it.key()] = std::move(dists);
  }
  const json& responses = field(j, "responses", what);
  if (!responses.is_object()) throw InvalidInput("model responses must be an object");
  for (auto it = responses.begin(); it != responses.end(); ++it) {
    std::vector<ResponseFunction> funcs;
    for (const auto& probs : as<std::vector<std::vector<std::vector<double>>>>(
             it.value(), "model response " + it.key()))
      funcs.push_back(ResponseFunction{probs});
    m.responses[it.key()] = std::move(funcs);
  }
  if (j.contains("transforms")) {
    const json& transforms = j["transforms"];
    if (!transforms.is_object()) throw InvalidInput("model transforms must be an object");
    for (auto it = transforms.begin(); it != transforms.end(); ++it) {
      std::vector<StochasticMap> maps;
      for (const auto& kernel : as<std::vector<std::vector<std::vector<double>>>>(
               it.value(), "model transform " + it.key()))
        maps.push_back(StochasticMap{kernel});
      m.transforms[it.key()] = std::move(maps);
    }
  }
  validate_model(m);
  return m;
}

json antidist_doc(const AntidistReport& r, double tolerance) {
  json doc;
  doc["pass"] = r.pass;
  doc["max_error"] = r.max_error;
  doc["tolerance"] = tolerance;
  return doc;
}

const char* verdict_name(SuperpositionVerdict v) {
  return v == SuperpositionVerdict::Epistemic ? "epistemic" : "ontic";
}

}  // namespace

// -- public emitters and parsers ------------------------------------------------------

std::string state_to_json(const StateVector& v) { return dump2(state_doc(v)); }

StateVector state_from_json(const std::string& text) {
  return state_from_doc(parse_text(text, "state document"), "state document");
}

std::string povm_to_json(const Povm& p) { return dump2(povm_doc(p)); }

Povm povm_from_json(const std::string& text) {
  return povm_from_doc(parse_text(text, "POVM document"), "POVM document");
}

std::string states_to_json(const std::vector<LabeledState>& states) {
  json doc;
  json list = json::array();
  for (const LabeledState& s : states) list.push_back(labeled_state_doc(s));
  doc["states"] = std::move(list);
  return dump2(doc);
}

std::vector<LabeledState> states_from_json(const std::string& text) {
  const json j = parse_text(text, "states document");
  return labeled_states_from_doc(field(j, "states", "states document"), "states document");
}

std::string family_to_json(const Thm1Family& f) {
  json doc;
  doc["theorem"] = 1;
  doc["alpha"] = f.alpha;
  doc["alpha_sq"] = f.alpha * f.alpha;
  doc["d"] = static_cast<int>(f.basis.vectors.size());
  doc["coefficients"] = coefficients_doc(f.coeffs);
  json states;
  states["psi"] = state_doc(f.psi);
  states["phi"] = state_doc(f.phi);
  doc["states"] = std::move(states);
  doc["basis"] = basis_doc(f.basis);
  const StateVector& ket0 = f.basis.vectors[0];
  json table = json::array();
  table.push_back(inner_product_entry("ket0", ket0, "psi", f.psi));
  table.push_back(inner_product_entry("ket0", ket0, "phi", f.phi));
  table.push_back(inner_product_entry("psi", f.psi, "phi", f.phi));
  doc["inner_products"] = std::move(table);
  doc["triples"] = triples_doc(thm1_triples(f));
  return dump2(doc);
}

std::string family_to_json(const Thm2Family& f) {
  json doc;
  doc["theorem"] = 2;
  doc["alpha"] = f.alpha;
  doc["alpha_sq"] = f.alpha * f.alpha;
  doc["d"] = static_cast<int>(f.basis.vectors.size());
  doc["coefficients"] = coefficients_doc(f.coeffs);
  json states;
  states["psi"] = state_doc(f.psi);
  for (std::size_t i = 0; i < f.phis.size(); ++i)
    states["phi" + std::to_string(i + 3)] = state_doc(f.phis[i]);
  doc["states"] = std::move(states);
  doc["basis"] = basis_doc(f.basis);
  const StateVector& ket0 = f.basis.vectors[0];
  json table = json::array();
  table.push_back(inner_product_entry("ket0", ket0, "psi", f.psi));
  for (std::size_t i = 0; i < f.phis.size(); ++i)
    table.push_back(
        inner_product_entry("ket0", ket0, "phi" + std::to_string(i + 3), f.phis[i]));
  for (std::size_t i = 0; i < f.phis.size(); ++i)
    table.push_back(
        inner_product_entry("psi", f.psi, "phi" + std::to_string(i + 3), f.phis[i]));
  for (std::size_t i = 0; i < f.phis.size(); ++i)
    for (std::size_t k = i + 1; k < f.phis.size(); ++k)
      table.push_back(inner_product_entry("phi" + std::to_string(i + 3), f.phis[i],
                                          "phi" + std::to_string(k + 3), f.phis[k]));
  doc["inner_products"] = std::move(table);
  doc["triples"] = triples_doc(thm2_triples(f));
  return dump2(doc);
}

std::string scenario_to_json(const Scenario& sc) { return dump2(scenario_doc(sc)); }

Scenario scenario_from_json(const std::string& text) {
  return scenario_from_doc(parse_text(text, "scenario document"));
}

std::string model_to_json(const OnticModel& m) { return dump2(model_doc(m)); }

OnticModel model_from_json(const std::string& text) {
  return model_from_doc(parse_text(text, "model document"));
}

std::string antidist_report_to_json(const AntidistReport& r, double tolerance) {
  return dump2(antidist_doc(r, tolerance));
}

std::string synthesis_to_json(const SynthesisResult& r, const AntidistReport& verify,
                              double tolerance) {
  json doc;
  doc["iterations"] = r.iterations;
  doc["residual"] = r.residual;
  doc["verify"] = antidist_doc(verify, tolerance);
  doc["povm"] = povm_doc(r.povm);
  return dump2(doc);
}

std::string audit_to_json(
    const AuditReport& report, double epsilon,
    const std::vector<std::pair<std::string, SuperpositionReport>>& classifications) {
  json doc;
  doc["pass"] = report.pass;
  doc["epsilon"] = epsilon;
  doc["max_deviation"] = report.max_deviation;
  json entries = json::array();
  for (const AuditEntry& e : report.entries) {
    json entry;
    entry["state"] = e.state;
    entry["prep_index"] = e.prep_index;
    entry["measurement"] = e.measurement;
    entry["response_index"] = e.response_index;
    entry["outcome"] = e.outcome;
    entry["predicted"] = e.predicted;
    entry["expected"] = e.expected;
    entry["deviation"] = e.deviation;
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  json classified = json::array();
  for (const auto& [state, rep] : classifications) {
    json entry;
    entry["state"] = state;
    entry["verdict"] = verdict_name(rep.verdict);
    entry["residual"] = rep.residual;
    classified.push_back(std::move(entry));
  }
  doc["classifications"] = std::move(classified);
  return dump2(doc);
}

std::string classification_to_json(const std::string& state,
                                   const std::vector<std::string>& basis,
                                   const SuperpositionReport& report) {
  json doc;
  doc["state"] = state;
  doc["basis"] = basis;
  doc["verdict"] = verdict_name(report.verdict);
  doc["residual"] = report.residual;
  return dump2(doc);
}

namespace {

// Shortest round-trip decimal form, locale independent.
std::string fmt_double(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw NumericalFailure("could not format a double");
  return std::string(buf.data(), end);
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "alpha_sq,d,epsilon,eq6,thm1,thm2,thm3,eq16,improves\n";
  for (const SweepRow& r : rows) {
    out += fmt_double(r.alpha_sq) + "," + std::to_string(r.d) + "," + fmt_double(r.epsilon) +
           "," + fmt_double(r.eq6) + "," + fmt_double(r.thm1) + "," + fmt_double(r.thm2) +
           "," + fmt_double(r.thm3) + "," + fmt_double(r.eq16) + "," +
           (r.improves ? "true" : "false") + "\n";
  }
  return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  json doc;
  json list = json::array();
  for (const SweepRow& r : rows) {
    json entry;
    entry["alpha_sq"] = r.alpha_sq;
    entry["d"] = r.d;
    entry["epsilon"] = r.epsilon;
    entry["eq6"] = r.eq6;
    entry["thm1"] = r.thm1;
    entry["thm2"] = r.thm2;
    entry["thm3"] = r.thm3;
    entry["eq16"] = r.eq16;
    entry["improves"] = r.improves;
    list.push_back(std::move(entry));
  }
  doc["rows"] = std::move(list);
  return dump2(doc);
}

std::string lp_report_to_json(const LpReport& r) {
  json doc;
  doc["program"] = r.program;
  doc["status"] = r.status;
  doc["value"] = r.value.has_value() ? json(*r.value) : json(nullptr);
  doc["pair"] = json::array({r.pair_first, r.pair_second});
  doc["epsilon"] = r.epsilon;
  json analytic;
  analytic["overlap_sq"] = r.overlap_sq;
  analytic["asym_trivial"] = r.asym_trivial;
  analytic["sym_trivial"] = r.sym_trivial;
  if (r.thm1.has_value()) analytic["thm1"] = *r.thm1;
  if (r.thm2.has_value()) analytic["thm2"] = *r.thm2;
  doc["analytic"] = std::move(analytic);
  doc["witness_model"] = r.witness_path.has_value() ? json(*r.witness_path) : json(nullptr);
  return dump2(doc);
}

std::string toy_bit_to_json(const ToyBit& tb) {
  json doc;
  doc["model"] = model_doc(tb.model);
  doc["scenario"] = scenario_doc(tb.scenario);
  return dump2(doc);
}

}  // namespace onticlab
