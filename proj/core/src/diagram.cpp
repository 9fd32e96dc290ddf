#include "dehn/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dehn/errors.hpp"
#include "dehn/weight_geometry.hpp"

namespace dehn {

namespace {

struct Point {
  long x = 0;
  long y = 0;
  std::string label;
  bool principal = false;
  bool zero = false;
  std::size_t multiplicity = 0;
};

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ",") + i;
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// Weights scaled to the coarsest integer lattice containing them.
std::vector<Point> lattice_points(const GradedLieAlgebra& g) {
  WeightSet ws = weight_set(g);
  mpz_class lcm = 1;
  for (const auto& e : ws.entries)
    for (const auto& c : e.weight.coords) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class gcd = 0;
  for (const auto& e : ws.entries)
    for (const auto& c : e.weight.coords) {
      mpz_class v = c.get_num() * (lcm / c.get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    }
  if (gcd == 0) gcd = 1;
  std::vector<Point> pts;
  for (const auto& e : ws.entries) {
    Point p;
    auto coord = [&](std::size_t k) {
      mpz_class v = e.weight.coords[k].get_num() * (lcm / e.weight.coords[k].get_den()) / gcd;
      return v.get_si();
    };
    p.x = coord(0);
    p.y = g.weight_dim() == 2 ? coord(1) : 0;
    std::vector<std::string> names;
    for (auto i : g.indices_of_weight(e.weight)) names.push_back(g.basis()[i].name);
    p.label = join(names);
    p.principal = e.principal();
    p.zero = e.weight.is_zero();
    p.multiplicity = e.multiplicity;
    pts.push_back(std::move(p));
  }
  return pts;
}

std::string decorate(const Point& p) {
  std::string s = p.label;
  if (p.multiplicity > 1) s += "(x" + std::to_string(p.multiplicity) + ")";
  if (p.principal) s = "[" + s + "]";
  if (p.zero) s = "_" + s + "_";
  return s;
}

std::string ascii(const GradedLieAlgebra& g, const std::vector<Point>& pts) {
  long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  std::size_t width = 1;
  std::map<std::pair<long, long>, std::string> cells;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
    cells[{p.x, p.y}] = decorate(p);
    width = std::max(width, cells[{p.x, p.y}].size());
  }
  if (!cells.count({0, 0})) cells[{0, 0}] = "+";
  width += 2;
  std::ostringstream out;
  out << "weights of " << g.name() << "\n\n";
  for (long y = ymax; y >= ymin; --y) {
    std::string line;
    for (long x = xmin; x <= xmax; ++x) {
      auto it = cells.find({x, y});
      std::string c = it == cells.end() ? "" : it->second;
      std::size_t left = (width - c.size()) / 2;
      line += std::string(left, ' ') + c + std::string(width - c.size() - left, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  out << "\n[..] principal weight, _.._ zero weight, (xN) multiplicity, + origin\n";
  return out.str();
}

std::string svg(const GradedLieAlgebra& g, const std::vector<Point>& pts) {
  long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const long step = 80, pad = 60;
  long w = 2 * pad + step * (xmax - xmin), h = 2 * pad + step * (ymax - ymin);
  auto px = [&](long x) { return pad + step * (x - xmin); };
  auto py = [&](long y) { return pad + step * (ymax - y); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << " " << h << "\">\n";
  out << "  <title>weights of " << xml_escape(g.name()) << "</title>\n";
  out << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << px(xmin) - pad / 2 << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax) + pad / 2 << "\" y2=\""
      << py(0) << "\" stroke=\"#bbbbbb\"/>\n";
  if (g.weight_dim() == 2)
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(ymax) - pad / 2 << "\" x2=\"" << px(0) << "\" y2=\""
        << py(ymin) + pad / 2 << "\" stroke=\"#bbbbbb\"/>\n";
  out << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"2\" fill=\"#888888\"/>\n";
  for (const auto& p : pts) {
    std::string text = p.label;
    if (p.multiplicity > 1) text += " (x" + std::to_string(p.multiplicity) + ")";
    out << "  <circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"4\" fill=\""
        << (p.principal ? "black" : "#666666") << "\"/>\n";
    out << "  <text x=\"" << px(p.x) << "\" y=\"" << py(p.y) - 10 << "\" text-anchor=\"middle\" font-family=\"monospace\""
        << " font-size=\"13\"";
    if (p.principal) out << " font-weight=\"bold\"";
    if (p.zero) out << " text-decoration=\"underline\"";
    out << ">" << xml_escape(text) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_diagram(const GradedLieAlgebra& g, DiagramFormat format) {
  if (g.weight_dim() != 1 && g.weight_dim() != 2)
    throw UnsupportedDimension("diagrams need weight_dim 1 or 2, got " + std::to_string(g.weight_dim()));
  auto pts = lattice_points(g);
  return format == DiagramFormat::ascii ? ascii(g, pts) : svg(g, pts);
}

}  // namespace dehn
