#include "dehn/classifier.hpp"

#include "dehn/errors.hpp"
#include "dehn/homology.hpp"

namespace dehn {

namespace {

std::string pair_text(const std::vector<Weight>& ws, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::string s;
  for (const auto& [i, j] : pairs) {
    if (!s.empty()) s += ", ";
    s += "{" + to_string(ws[i]) + ", " + to_string(ws[j]) + "}";
  }
  return s;
}

struct Evidence {
  ObstructionFlags flags;
  TamenessFlags tameness;
  std::string sol_pairs, sol_na_pairs;
  std::vector<std::string> h2_fields, h2_na_fields;
  std::size_t kill0 = 0;
  bool zero_principal = false;
};

Evidence gather(const GradedLieAlgebra& g) {
  Evidence e;
  WeightSet ws = weight_set(g);
  e.zero_principal = ws.has_zero_principal();
  auto principal = ws.principal_nonzero();
  auto pairs = quasi_opposite_pairs(principal);
  e.flags.sol = !pairs.empty();
  e.sol_pairs = pair_text(principal, pairs);
  auto na = ws.principal_non_archimedean_nonzero();
  auto na_pairs = quasi_opposite_pairs(na);
  e.flags.sol_non_archimedean = !na_pairs.empty();
  e.sol_na_pairs = pair_text(na, na_pairs);
  for (const auto& f : g.fields()) {
    std::size_t d = h2_degree_zero_dim(field_component(g, f.id));
    if (d == 0) continue;
    std::string item = f.id + " (dim " + std::to_string(d) + ")";
    e.h2_fields.push_back(item);
    if (f.kind == FieldKind::non_archimedean) e.h2_na_fields.push_back(item);
  }
  e.flags.homological = !e.h2_fields.empty();
  e.flags.homological_non_archimedean = !e.h2_na_fields.empty();
  e.kill0 = killing_degree_zero(g).dim;
  e.flags.kill_zero_vanishes = e.kill0 == 0;
  e.tameness = tameness_flags(ws);
  return e;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
  return s;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Linear: return "Linear";
    case Verdict::Quadratic: return "Quadratic";
    case Verdict::PolyAtMostCubic: return "PolyAtMostCubic";
    case Verdict::ExponentialDehn: return "ExponentialDehn";
    case Verdict::NotCompactlyPresented: return "NotCompactlyPresented";
  }
  return "?";
}

ObstructionFlags obstruction_flags(const GradedLieAlgebra& g) { return gather(g).flags; }

Classification classify(const GradedLieAlgebra& g) {
  if (g.a_rank() < 1) throw InvalidInput("a_rank must be at least 1");
  auto rep = validate(g);
  if (!rep.ok) throw InvalidInput("invalid algebra: " + rep.violations.front().message);

  Evidence e = gather(g);
  Classification c;
  c.flags = e.flags;
  c.tameness = e.tameness;
  if (e.zero_principal)
    c.warnings.push_back("0 is a principal weight; it is ignored when pairing principal weights");

  std::vector<Justification> triggered;
  if (e.flags.sol_non_archimedean)
    triggered.push_back({"non-Archimedean SOL obstruction",
                         "quasi-opposite principal weights in non-Archimedean components: " + e.sol_na_pairs});
  if (e.flags.homological_non_archimedean)
    triggered.push_back({"non-Archimedean 2-homological obstruction",
                         "H_2(u_j)_0 != 0 for non-Archimedean components: " + join(e.h2_na_fields)});
  if (e.flags.sol)
    triggered.push_back({"SOL obstruction", "quasi-opposite principal weights: " + e.sol_pairs});
  if (e.flags.homological)
    triggered.push_back({"2-homological obstruction", "H_2(u_j)_0 != 0 for components: " + join(e.h2_fields)});

  if (e.flags.sol_non_archimedean || e.flags.homological_non_archimedean) {
    c.verdict = Verdict::NotCompactlyPresented;
    c.qualifier = "not compactly presented";
  } else if (e.flags.sol || e.flags.homological) {
    c.verdict = Verdict::ExponentialDehn;
    c.qualifier = "compactly presented with exponential Dehn function";
  } else if (g.a_rank() == 1) {
    c.verdict = Verdict::Linear;
    c.qualifier = "Gromov-hyperbolic, linear Dehn function";
    triggered.push_back({"rank one without obstructions",
                         "a_rank = 1 and no quasi-opposite principal weights or degree-zero H_2"});
  } else {
    if (e.tameness.tame)
      triggered.push_back({"tame", "0 lies outside the convex hull of the weights"});
    if (e.tameness.stably_two_tame)
      triggered.push_back({"stably 2-tame", "no two weights are quasi-opposite"});
    if (e.flags.kill_zero_vanishes)
      triggered.push_back({"vanishing Killing module", "Kill(u)_0 = 0"});
    if (e.tameness.tame || e.tameness.stably_two_tame || e.flags.kill_zero_vanishes) {
      c.verdict = Verdict::Quadratic;
      c.qualifier = "quadratic Dehn function (at most quadratic; exactly quadratic since a_rank >= 2)";
    } else {
      c.verdict = Verdict::PolyAtMostCubic;
      c.qualifier = "Dehn function bounded by a cubic polynomial";
      triggered.push_back({"general polynomial bound",
                           "no obstruction; Kill(u)_0 has dimension " + std::to_string(e.kill0) +
                               " and quadratic criteria do not apply"});
    }
  }
  c.justification = std::move(triggered);

  if (c.verdict == Verdict::Quadratic && !e.tameness.tame && !e.tameness.stably_two_tame)
    c.caveats.push_back(
        "The Kill(u)_0 = 0 criterion assumes the fields have infinite transcendence degree over Q; this is not "
        "checked");
  if (g.a_nonabelian())
    c.caveats.push_back(
        "A is marked nonabelian: only the weights of its split torus were supplied, so the verdict is for the "
        "group obtained after replacing A by that torus");
  c.caveats.push_back(
      "The verdict applies to the standard solvable group defined by these data; for a real triangulable group, "
      "first pass to the standard solvable group of the same quasi-isometry type, whose weights may differ from "
      "those of a naive grading");
  return c;
}

}  // namespace dehn
