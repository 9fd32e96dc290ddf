#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dehn/algebra_io.hpp"
#include "dehn/blowup.hpp"
#include "dehn/corpus.hpp"
#include "dehn/diagram.hpp"
#include "dehn/errors.hpp"
#include "dehn/report.hpp"
#include "dehn/stokes.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailure = 2;

dehn::GradedLieAlgebra load(const std::string& source) {
  const std::string prefix = "example:";
  if (source.rfind(prefix, 0) == 0) return dehn::corpus_algebra(source.substr(prefix.size()));
  return dehn::load_algebra(source);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw dehn::InvalidInput("cannot write \"" + path + "\"");
  out << text;
}

int run_validate(const std::string& source) {
  auto g = load(source);
  auto rep = dehn::validate(g);
  if (!rep.ok) {
    for (const auto& v : rep.violations) std::cerr << "violation: " << v.message << "\n";
    return kInputError;
  }
  std::cout << g.name() << ": valid (dim " << g.dim() << ")\n";
  return kOk;
}

int run_analyze(const std::string& source, const std::string& format) {
  auto g = load(source);
  dehn::require_valid(g);
  auto report = dehn::analyze(g);
  std::cout << (format == "json" ? dehn::report_json(report) : dehn::report_text(report));
  return report.classification ? kOk : kInputError;
}

int run_blowup(const std::string& source, const std::string& output) {
  auto g = load(source);
  dehn::require_valid(g);
  auto result = dehn::blow_up(g);
  auto check = dehn::verify_blow_up(result);
  if (!check.ok()) {
    for (const auto& f : check.failures) std::cerr << "check failed: " << f << "\n";
    return kCheckFailure;
  }
  write_file(output, dehn::serialize_algebra(result.blown_up));
  std::cout << "blow-up of " << g.name() << ": dim " << result.blown_up.dim() << ", kernel dim "
            << result.kernel_dim << " -> " << output << "\n";
  return kOk;
}

int run_diagram(const std::string& source, const std::string& output, bool ascii) {
  auto g = load(source);
  auto text = dehn::render_diagram(g, ascii ? dehn::DiagramFormat::ascii : dehn::DiagramFormat::svg);
  write_file(output, text);
  return kOk;
}

dehn::SolModel parse_model(const std::string& model, const std::string& l1, const std::string& l2) {
  dehn::NormModel k1 = dehn::NormModel::real(), k2 = dehn::NormModel::real();
  if (model.rfind("padic:", 0) == 0) {
    std::string rest = model.substr(6);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw dehn::InvalidInput("expected --model padic:p,q");
    k1 = dehn::NormModel::padic(std::stol(rest.substr(0, comma)));
    k2 = dehn::NormModel::padic(std::stol(rest.substr(comma + 1)));
  } else if (model != "real") {
    throw dehn::InvalidInput("unknown model \"" + model + "\"");
  }
  return dehn::SolModel(k1, k2, dehn::parse_rational(l1), dehn::parse_rational(l2));
}

int run_stokes(const std::string& model, const std::string& l1, const std::string& l2, int k, int nmax,
               const std::string& format) {
  auto m = parse_model(model, l1, l2);
  auto table = dehn::lower_bound_table(m, k, nmax);
  bool real = table.variant == dehn::IntegrandVariant::real;
  if (format == "json") {
    nlohmann::json j;
    j["model"] = model;
    j["l1"] = dehn::to_string(m.l1());
    j["l2"] = dehn::to_string(m.l2());
    j["k"] = k;
    j["variant"] = real ? "real" : "ultrametric";
    j["relator_radius"] = table.relator_radius;
    j["triangle_bound"] = dehn::to_string(table.triangle_bound);
    j["asymptotically_infinite_area"] = table.asymptotically_infinite_area;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
      nlohmann::json row{{"n", r.n}, {"value", dehn::to_string(r.value)}, {"exceeds_triangle_bound", r.exceeds_triangle_bound}};
      row["area_lower_bound"] = r.area_lower_bound ? nlohmann::json(dehn::to_string(*r.area_lower_bound)) : nlohmann::json(nullptr);
      rows.push_back(row);
    }
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "model " << model << "  l1 = " << dehn::to_string(m.l1()) << "  l2 = " << dehn::to_string(m.l2())
            << "  k = " << k << "  integrands: " << (real ? "real" : "ultrametric") << "\n";
  std::cout << "triangle bound C(" << table.relator_radius << ") = " << dehn::to_string(table.triangle_bound) << "\n\n";
  std::cout << "   n  |integral|              " << (real ? "area >=" : "exceeds C") << "\n";
  for (const auto& r : table.rows) {
    std::string v = dehn::to_string(r.value);
    std::string third = real ? (r.area_lower_bound ? dehn::to_string(*r.area_lower_bound) : "-")
                             : (r.exceeds_triangle_bound ? "yes" : "no");
    std::string n = std::to_string(r.n);
    std::cout << std::string(4 - std::min<std::size_t>(4, n.size()), ' ') << n << "  " << v
              << std::string(v.size() < 24 ? 24 - v.size() : 1, ' ') << third << "\n";
  }
  if (table.asymptotically_infinite_area)
    std::cout << "\nintegrals are unbounded while every relator triangle contributes at most C: "
                 "the loops are not filled by relators of bounded length (asymptotically infinite area)\n";
  return kOk;
}

int run_examples(const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const auto& e : dehn::corpus_entries()) std::cout << e.name << "  " << e.description << "\n";
    return kOk;
  }
  if (action == "show") {
    if (name.empty()) throw dehn::InvalidInput("examples show needs a name");
    std::cout << dehn::serialize_algebra(dehn::corpus_algebra(name));
    return kOk;
  }
  throw dehn::InvalidInput("unknown examples action \"" + action + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dehn function classifier for standard solvable groups"};
  app.require_subcommand(1);
  std::string format = "text";

  std::string source;
  auto* validate = app.add_subcommand("validate", "check an algebra file");
  validate->add_option("source", source, "FILE or example:NAME")->required();

  auto* analyze = app.add_subcommand("analyze", "compute invariants and classify");
  analyze->add_option("source", source, "FILE or example:NAME")->required();
  analyze->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string output;
  auto* blowup = app.add_subcommand("blowup", "write the blow-up of an algebra");
  blowup->add_option("source", source, "FILE or example:NAME")->required();
  blowup->add_option("-o,--output", output, "output file")->required();

  bool ascii = false;
  auto* diagram = app.add_subcommand("diagram", "draw the weights (SVG, or ASCII)");
  diagram->add_option("source", source, "FILE or example:NAME")->required();
  diagram->add_option("-o,--output", output, "output file")->required();
  diagram->add_flag("--ascii", ascii, "plain text instead of SVG");

  std::string model = "real", l1 = "2", l2 = "2";
  int k = 1, nmax = 10;
  auto* stokes = app.add_subcommand("stokes", "integrals of gamma loops and area lower bounds");
  stokes->add_option("--model", model, "real or padic:p,q");
  stokes->add_option("--l1", l1, "rational l1");
  stokes->add_option("--l2", l2, "rational l2");
  stokes->add_option("--k", k, "loop depth")->check(CLI::Range(1, 12));
  stokes->add_option("--nmax", nmax, "largest n")->check(CLI::Range(1, 1000));
  stokes->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string action = "list", name;
  auto* examples = app.add_subcommand("examples", "list or print built-in examples");
  examples->add_option("action", action, "list or show")->check(CLI::IsMember({"list", "show"}));
  examples->add_option("name", name, "example name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return run_validate(source);
    if (*analyze) return run_analyze(source, format);
    if (*blowup) return run_blowup(source, output);
    if (*diagram) return run_diagram(source, output, ascii);
    if (*stokes) return run_stokes(model, l1, l2, k, nmax, format);
    if (*examples) return run_examples(action, name);
  } catch (const dehn::InternalCheckFailure& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const dehn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
