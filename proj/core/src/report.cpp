#include "dehn/report.hpp"

#include <sstream>

#include <json.hpp>

#include "dehn/blowup.hpp"
#include "dehn/errors.hpp"
#include "dehn/homology.hpp"

namespace dehn {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : sep) + i;
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisReport analyze(const GradedLieAlgebra& g) {
  AnalysisReport r;
  r.name = g.name();
  r.dim = g.dim();
  r.weight_dim = g.weight_dim();
  r.a_rank = g.a_rank();

  WeightSet ws = weight_set(g);
  for (const auto& e : ws.entries) {
    WeightRow row{e.weight, {}, e.fields, e.principal_multiplicity};
    for (auto i : g.indices_of_weight(e.weight)) row.basis.push_back(g.basis()[i].name);
    r.weights.push_back(std::move(row));
    if (e.principal()) r.principal_weights.push_back(to_string(e.weight));
  }
  r.tameness = tameness_flags(ws);
  r.compacting_functional = compacting_functional(ws);
  r.one_tame = is_1_tame(g).holds;
  r.doubly_one_tame = is_doubly_1_tame(g).holds;
  r.relatively_perfect_degree_zero = is_relatively_perfect_degree_zero(g);
  r.nilpotency_length = descending_central_series(g).nilpotency_length;

  if (!boundary_composition_vanishes(g)) throw InternalCheckFailure("boundary maps do not square to zero");
  H2Result h2 = h2_degree_zero(g);
  r.lambda2_dim = h2.lambda2_dim;
  r.lambda3_dim = h2.lambda3_dim;
  r.h2_dim = h2.dim;
  r.h2_per_field = h2.per_field;
  for (const auto& z : h2.representatives) r.h2_representatives.push_back(format_chain(g, h2.chains, z));
  H2TameResult tame = h2_tame(g);
  r.lambda2_tame_dim = tame.lambda2_dim;
  r.lambda3_tame_dim = tame.lambda3_dim;
  r.h2_tame_dim = tame.dim;
  r.h2_tame_onto = tame.maps_onto_h2;
  r.kill_dim = killing_degree_zero(g).dim;
  r.kill_tame_dim = killing_tame_degree_zero(g).dim;
  r.prop_six = prop_six_check(g);

  BlowUpResult bu = blow_up(g);
  BlowUpCheck chk = verify_blow_up(bu);
  if (!chk.ok()) throw InternalCheckFailure("blow-up check failed: " + join(chk.failures, "; "));
  r.blow_up_kernel_dim = bu.kernel_dim;

  try {
    r.classification = classify(g);
  } catch (const InvalidInput& e) {
    r.classification_error = e.what();
  }
  return r;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "algebra " << r.name << ": dim " << r.dim << ", weight_dim " << r.weight_dim << ", a_rank " << r.a_rank
      << "\n\nweights:\n";
  std::size_t width = 0;
  for (const auto& w : r.weights) width = std::max(width, to_string(w.weight).size());
  for (const auto& w : r.weights) {
    std::string ws = to_string(w.weight);
    out << "  " << ws << std::string(width - ws.size() + 2, ' ') << join(w.basis) << "  [" << join(w.fields) << "]";
    if (w.principal_multiplicity) out << "  principal x" << w.principal_multiplicity;
    out << "\n";
  }
  out << "\ntame: " << yes_no(r.tameness.tame) << "   2-tame: " << yes_no(r.tameness.two_tame)
      << "   stably 2-tame: " << yes_no(r.tameness.stably_two_tame) << "\n";
  if (r.compacting_functional) out << "compacting functional: " << to_string(*r.compacting_functional) << "\n";
  out << "1-tame: " << yes_no(r.one_tame) << "   doubly 1-tame: " << yes_no(r.doubly_one_tame)
      << "   relatively perfect in degree 0: " << yes_no(r.relatively_perfect_degree_zero) << "\n";
  out << "nilpotency length: "
      << (r.nilpotency_length ? std::to_string(*r.nilpotency_length) : std::string("not nilpotent")) << "\n\n";
  out << "dim (g^g)_0 = " << r.lambda2_dim << ", dim (g^g^g)_0 = " << r.lambda3_dim << "\n";
  out << "nonzero-weight part: dim (g'^g')_0 = " << r.lambda2_tame_dim << ", dim (g'^g'^g')_0 = " << r.lambda3_tame_dim
      << "\n";
  out << "dim H_2(g)_0 = " << r.h2_dim;
  if (!r.h2_per_field.empty()) {
    out << "  (per field:";
    for (const auto& [f, d] : r.h2_per_field) out << " " << f << "=" << d;
    out << ")";
  }
  out << "\n";
  for (const auto& z : r.h2_representatives) out << "  cycle: " << z << "\n";
  out << "dim H_2 tame part = " << r.h2_tame_dim << (r.h2_tame_onto ? " (onto H_2(g)_0)" : " (not onto H_2(g)_0)")
      << "\n";
  out << "dim Kill(g)_0 = " << r.kill_dim << ", tame part " << r.kill_tame_dim << "\n";
  out << "tame 2-cycles are boundaries: " << yes_no(r.prop_six) << "\n";
  out << "blow-up kernel dimension: " << r.blow_up_kernel_dim << "\n\n";
  if (r.classification) {
    const auto& c = *r.classification;
    out << "verdict: " << to_string(c.verdict) << " (" << c.qualifier << ")\n";
    for (const auto& j : c.justification) out << "  - " << j.rule << ": " << j.condition << "\n";
    for (const auto& w : c.warnings) out << "warning: " << w << "\n";
    for (const auto& cv : c.caveats) out << "note: " << cv << "\n";
  } else {
    out << "verdict: unavailable (" << r.classification_error << ")\n";
  }
  return out.str();
}

std::string report_json(const AnalysisReport& r) {
  using json = nlohmann::json;
  json j;
  j["name"] = r.name;
  j["dim"] = r.dim;
  j["weight_dim"] = r.weight_dim;
  j["a_rank"] = r.a_rank;
  json weights = json::array();
  for (const auto& w : r.weights) {
    json coords = json::array();
    for (const auto& c : w.weight.coords) coords.push_back(to_string(c));
    weights.push_back({{"weight", coords},
                       {"basis", w.basis},
                       {"fields", w.fields},
                       {"principal_multiplicity", w.principal_multiplicity}});
  }
  j["weights"] = weights;
  j["tameness"] = {{"tame", r.tameness.tame},
                   {"two_tame", r.tameness.two_tame},
                   {"stably_two_tame", r.tameness.stably_two_tame},
                   {"one_tame", r.one_tame},
                   {"doubly_one_tame", r.doubly_one_tame},
                   {"relatively_perfect_degree_zero", r.relatively_perfect_degree_zero}};
  if (r.compacting_functional) {
    json f = json::array();
    for (const auto& c : *r.compacting_functional) f.push_back(to_string(c));
    j["compacting_functional"] = f;
  } else {
    j["compacting_functional"] = nullptr;
  }
  j["nilpotency_length"] = r.nilpotency_length ? json(*r.nilpotency_length) : json(nullptr);
  j["homology"] = {{"lambda2_dim", r.lambda2_dim},
                   {"lambda3_dim", r.lambda3_dim},
                   {"lambda2_tame_dim", r.lambda2_tame_dim},
                   {"lambda3_tame_dim", r.lambda3_tame_dim},
                   {"h2_dim", r.h2_dim},
                   {"h2_per_field", r.h2_per_field},
                   {"h2_representatives", r.h2_representatives},
                   {"h2_tame_dim", r.h2_tame_dim},
                   {"h2_tame_onto", r.h2_tame_onto},
                   {"kill_dim", r.kill_dim},
                   {"kill_tame_dim", r.kill_tame_dim},
                   {"tame_cycles_are_boundaries", r.prop_six}};
  j["blow_up_kernel_dim"] = r.blow_up_kernel_dim;
  if (r.classification) {
    const auto& c = *r.classification;
    json just = json::array();
    for (const auto& x : c.justification) just.push_back({{"rule", x.rule}, {"condition", x.condition}});
    j["classification"] = {{"verdict", to_string(c.verdict)},
                           {"qualifier", c.qualifier},
                           {"justification", just},
                           {"warnings", c.warnings},
                           {"caveats", c.caveats},
                           {"flags",
                            {{"sol", c.flags.sol},
                             {"sol_non_archimedean", c.flags.sol_non_archimedean},
                             {"homological", c.flags.homological},
                             {"homological_non_archimedean", c.flags.homological_non_archimedean},
                             {"kill_zero_vanishes", c.flags.kill_zero_vanishes}}}};
  } else {
    j["classification"] = {{"error", r.classification_error}};
  }
  return j.dump(2) + "\n";
}

}  // namespace dehn
