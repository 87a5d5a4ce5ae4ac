// JSON and CSV documents for everything the tools exchange: states, POVMs,
// state families, scenarios, ontological models, and the report formats the
// command-line front end emits. Emitters produce two-space-indented JSON with
// keys in a fixed order and a trailing newline, so equal inputs serialize to
// identical bytes. Parsers throw InvalidInput on malformed or misshapen text
// and run the relevant domain validators on what they build.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onticlab/bounds.hpp"
#include "onticlab/constructions.hpp"
#include "onticlab/ontomodel.hpp"
#include "onticlab/povm_synth.hpp"
#include "onticlab/scenario.hpp"

namespace onticlab {

// {"dim": n, "amplitudes": [[re, im], ...]}. The parser rejects non-unit
// vectors via check_state.
std::string state_to_json(const StateVector& v);
StateVector state_from_json(const std::string& text);

// {"dim": n, "labels": [...], "elements": [...]} with each element a
// row-major matrix of [re, im] entries. The parser runs check_povm.
std::string povm_to_json(const Povm& p);
Povm povm_from_json(const std::string& text);

// {"states": [{"label": ..., "dim": ..., "amplitudes": ...}, ...]}: the input
// format for synthesis and verification runs over explicit state lists.
std::string states_to_json(const std::vector<LabeledState>& states);
std::vector<LabeledState> states_from_json(const std::string& text);

// Family documents: theorem tag, coefficient record, the named member states
// and primed basis, the pairwise inner-product table, and the criterion
// verdict for every triple the construction relies on.
std::string family_to_json(const Thm1Family& f);
std::string family_to_json(const Thm2Family& f);

// Full scenario document: states, measurements, Born table, epsilon, links,
// and the basis metadata. When "born" is omitted the parser recomputes the
// table from the states and measurements with the builders' clamping; when
// present, rows must sum to 1 within tol().born_row_sum.
std::string scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const std::string& text);

// {"space": [...], "preparations": {...}, "responses": {...},
//  "transforms": {...}} with one list of assignments per label. The parser
// runs validate_model.
std::string model_to_json(const OnticModel& m);
OnticModel model_from_json(const std::string& text);

// Verification verdict for a POVM against a state list.
std::string antidist_report_to_json(const AntidistReport& r, double tolerance);

// Synthesis outcome: iteration count, final residual, the verification
// verdict, and the synthesized POVM itself.
std::string synthesis_to_json(const SynthesisResult& r, const AntidistReport& verify,
                              double tolerance);

// Audit verdict plus the superposition classifications the scenario's basis
// metadata makes possible (one entry per classified state).
std::string audit_to_json(
    const AuditReport& report, double epsilon,
    const std::vector<std::pair<std::string, SuperpositionReport>>& classifications);

// Classification of one state against a named basis.
std::string classification_to_json(const std::string& state,
                                   const std::vector<std::string>& basis,
                                   const SuperpositionReport& report);

// Bound-sweep table. CSV columns are alpha_sq, d, epsilon, eq6, thm1, thm2,
// thm3, eq16, improves with comma delimiters, '.' decimals, LF line endings;
// the JSON form carries the same records under "rows".
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

// Report emitted by the overlap-maximization front end. The analytic fields
// carry the closed-form ceilings evaluated for the paired states; thm1/thm2
// are present only when the scenario came from the matching generator.
struct LpReport {
  std::string program;          // symmetric | asymmetric | asymmetric-epistemic
  std::string status;           // optimal | infeasible
  std::optional<double> value;  // present iff status is optimal
  std::string pair_first;
  std::string pair_second;
  double epsilon = 0.0;
  double overlap_sq = 0.0;      // |<s2|s1>|^2 for the paired states
  double asym_trivial = 0.0;    // Born-overlap ceiling on the asymmetric program
  double sym_trivial = 0.0;     // minimum-error ceiling on the symmetric program
  std::optional<double> thm1;   // single-companion analytic bound
  std::optional<double> thm2;   // general-d analytic bound
  std::optional<std::string> witness_path;  // where the witness model was written
};

std::string lp_report_to_json(const LpReport& r);

// {"model": ..., "scenario": ...}: the bundled toy bit in one document.
std::string toy_bit_to_json(const ToyBit& tb);

}  // namespace onticlab
