#include "dehn/homology.hpp"

#include <algorithm>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

void enumerate(const GradedLieAlgebra& g, const std::vector<std::size_t>& allowed, std::size_t arity,
               std::size_t start, Wedge& current, Weight& sum, const Weight& degree, WedgeBasis& out) {
  if (current.size() == arity) {
    if (sum == degree) {
      out.position.emplace(current, out.elements.size());
      out.elements.push_back(current);
    }
    return;
  }
  for (std::size_t a = start; a + (arity - current.size()) <= allowed.size(); ++a) {
    std::size_t i = allowed[a];
    current.push_back(i);
    Weight saved = sum;
    sum = sum + g.weight(i);
    enumerate(g, allowed, arity, a + 1, current, sum, degree, out);
    sum = saved;
    current.pop_back();
  }
}

std::vector<std::size_t> nonzero_indices(const GradedLieAlgebra& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!g.weight(i).is_zero()) out.push_back(i);
  return out;
}

Subspace column_space(const RationalMatrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace(cols, m.rows());
}

std::vector<std::size_t> positions_in(const WedgeBasis& sub, const WedgeBasis& full) {
  std::vector<std::size_t> out;
  for (const auto& w : sub.elements) out.push_back(full.position.at(w));
  return out;
}

}  // namespace

WedgeBasis wedge_basis(const GradedLieAlgebra& g, std::size_t arity, const Weight& degree, bool nonzero_only) {
  WedgeBasis out;
  out.arity = arity;
  out.degree = degree;
  std::vector<std::size_t> allowed;
  if (nonzero_only) allowed = nonzero_indices(g);
  else
    for (std::size_t i = 0; i < g.dim(); ++i) allowed.push_back(i);
  Wedge current;
  Weight sum = Weight::zero(g.weight_dim());
  enumerate(g, allowed, arity, 0, current, sum, degree, out);
  return out;
}

int canonicalize_wedge(Wedge& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return 0;
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  return sign;
}

std::map<Wedge, Rational> boundary_of(const GradedLieAlgebra& g, const Wedge& w) {
  std::map<Wedge, Rational> out;
  std::size_t n = w.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& terms = g.bracket_terms(w[a], w[b]);
      if (terms.empty()) continue;
      int sign = ((a + b) % 2 == 0) ? 1 : -1;
      Wedge rest;
      for (std::size_t c = 0; c < n; ++c)
        if (c != a && c != b) rest.push_back(w[c]);
      for (const auto& [k, coeff] : terms) {
        Wedge t;
        t.push_back(k);
        t.insert(t.end(), rest.begin(), rest.end());
        int s = canonicalize_wedge(t);
        if (s == 0) continue;
        Rational& slot = out[t];
        slot += (sign * s) * coeff;
        if (slot == 0) out.erase(t);
      }
    }
  return out;
}

RationalMatrix boundary_matrix(const GradedLieAlgebra& g, const WedgeBasis& source, const WedgeBasis& target) {
  std::size_t n = source.arity;
  if (n < 2) throw InvalidInput("boundary needs arity at least 2");
  if (n == 2) {
    auto rows = g.indices_of_weight(source.degree);
    std::vector<long> pos(g.dim(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) pos[rows[r]] = static_cast<long>(r);
    RationalMatrix m(rows.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      const auto& w = source.elements[c];
      for (const auto& [k, coeff] : g.bracket_terms(w[0], w[1])) {
        if (pos[k] < 0) throw Error("bracket leaves its graded component");
        m(static_cast<std::size_t>(pos[k]), c) = -coeff;
      }
    }
    return m;
  }
  if (target.arity != n - 1) throw InvalidInput("target arity mismatch");
  RationalMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c)
    for (const auto& [t, coeff] : boundary_of(g, source.elements[c])) {
      auto it = target.position.find(t);
      if (it == target.position.end()) throw Error("boundary leaves its graded component");
      m(it->second, c) = coeff;
    }
  return m;
}

RationalMatrix boundary_matrix(const GradedLieAlgebra& g, std::size_t n, const Weight& degree) {
  WedgeBasis source = wedge_basis(g, n, degree);
  WedgeBasis target = n > 2 ? wedge_basis(g, n - 1, degree) : WedgeBasis{};
  return boundary_matrix(g, source, target);
}

std::size_t h2_degree_zero_dim(const GradedLieAlgebra& g) {
  Weight zero = Weight::zero(g.weight_dim());
  WedgeBasis l2 = wedge_basis(g, 2, zero), l3 = wedge_basis(g, 3, zero);
  std::size_t cycles = l2.size() - rank(boundary_matrix(g, l2, {}));
  return cycles - rank(boundary_matrix(g, l3, l2));
}

H2Result h2_degree_zero(const GradedLieAlgebra& g) {
  H2Result r;
  Weight zero = Weight::zero(g.weight_dim());
  r.chains = wedge_basis(g, 2, zero);
  WedgeBasis l3 = wedge_basis(g, 3, zero);
  r.lambda2_dim = r.chains.size();
  r.lambda3_dim = l3.size();
  RationalMatrix d2 = boundary_matrix(g, r.chains, {});
  RationalMatrix d3 = boundary_matrix(g, l3, r.chains);
  auto cycles = kernel_basis(d2);
  Subspace boundaries = column_space(d3);
  r.cycles_dim = cycles.size();
  r.boundaries_dim = boundaries.dim();
  if (!(d2 * d3).is_zero()) throw Error("d2 d3 does not vanish");
  Subspace span = boundaries;
  for (const auto& z : cycles)
    if (!span.contains(z)) {
      r.representatives.push_back(z);
      span = span.sum({z});
    }
  r.dim = r.cycles_dim - r.boundaries_dim;
  for (const auto& f : g.fields()) r.per_field[f.id] = h2_degree_zero_dim(field_component(g, f.id));
  return r;
}

H2TameResult h2_tame(const GradedLieAlgebra& g) {
  H2TameResult r;
  Weight zero = Weight::zero(g.weight_dim());
  WedgeBasis full2 = wedge_basis(g, 2, zero);
  WedgeBasis tame2 = wedge_basis(g, 2, zero, true);
  WedgeBasis tame3 = wedge_basis(g, 3, zero, true);
  r.lambda2_dim = tame2.size();
  r.lambda3_dim = tame3.size();
  RationalMatrix d2 = boundary_matrix(g, tame2, {});
  RationalMatrix d3 = boundary_matrix(g, tame3, tame2);
  auto cycles = kernel_basis(d2);
  r.cycles_dim = cycles.size();
  r.boundaries_dim = rank(d3);
  r.dim = r.cycles_dim - r.boundaries_dim;

  auto embed = positions_in(tame2, full2);
  std::vector<Vector> lifted;
  for (const auto& z : cycles) {
    Vector v = zero_vector(full2.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[embed[i]] = z[i];
    lifted.push_back(std::move(v));
  }
  RationalMatrix full_d2 = boundary_matrix(g, full2, {});
  WedgeBasis full3 = wedge_basis(g, 3, zero);
  Subspace full_cycles(kernel_basis(full_d2), full2.size());
  Subspace reached = column_space(boundary_matrix(g, full3, full2)).sum(lifted);
  r.maps_onto_h2 = reached.contains(full_cycles);
  return r;
}

namespace {

using SymPair = std::pair<std::size_t, std::size_t>;

SymPair sym(std::size_t a, std::size_t b) { return a <= b ? SymPair{a, b} : SymPair{b, a}; }

KillingResult killing(const GradedLieAlgebra& g, bool nonzero_only) {
  std::vector<std::size_t> allowed;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!nonzero_only || !g.weight(i).is_zero()) allowed.push_back(i);
  std::map<SymPair, std::size_t> target;
  for (std::size_t a = 0; a < allowed.size(); ++a)
    for (std::size_t b = a; b < allowed.size(); ++b)
      if ((g.weight(allowed[a]) + g.weight(allowed[b])).is_zero()) {
        std::size_t pos = target.size();
        target.emplace(SymPair{allowed[a], allowed[b]}, pos);
      }
  std::vector<Vector> columns;
  for (std::size_t a = 0; a < allowed.size(); ++a)
    for (std::size_t b = a; b < allowed.size(); ++b)
      for (std::size_t c : allowed) {
        std::size_t u = allowed[a], v = allowed[b], w = c;
        if (!(g.weight(u) + g.weight(v) + g.weight(w)).is_zero()) continue;
        Vector col = zero_vector(target.size());
        for (const auto& [k, coeff] : g.bracket_terms(v, w)) {
          auto it = target.find(sym(u, k));
          if (it == target.end()) throw Error("symmetric product leaves degree zero");
          col[it->second] += coeff;
        }
        for (const auto& [k, coeff] : g.bracket_terms(u, w)) {
          auto it = target.find(sym(v, k));
          if (it == target.end()) throw Error("symmetric product leaves degree zero");
          col[it->second] += coeff;
        }
        columns.push_back(std::move(col));
      }
  KillingResult r;
  r.sym_dim = target.size();
  r.domain_dim = columns.size();
  r.image_rank = Subspace(columns, target.size()).dim();
  r.dim = r.sym_dim - r.image_rank;
  return r;
}

}  // namespace

KillingResult killing_degree_zero(const GradedLieAlgebra& g) { return killing(g, false); }

KillingResult killing_tame_degree_zero(const GradedLieAlgebra& g) { return killing(g, true); }

bool prop_six_check(const GradedLieAlgebra& g) {
  Weight zero = Weight::zero(g.weight_dim());
  WedgeBasis full2 = wedge_basis(g, 2, zero);
  WedgeBasis tame2 = wedge_basis(g, 2, zero, true);
  WedgeBasis full3 = wedge_basis(g, 3, zero);
  Subspace boundaries = column_space(boundary_matrix(g, full3, full2));
  auto embed = positions_in(tame2, full2);
  for (const auto& z : kernel_basis(boundary_matrix(g, tame2, {}))) {
    Vector v = zero_vector(full2.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[embed[i]] = z[i];
    if (!boundaries.contains(v)) return false;
  }
  return true;
}

bool boundary_composition_vanishes(const GradedLieAlgebra& g) {
  Weight zero = Weight::zero(g.weight_dim());
  WedgeBasis l2 = wedge_basis(g, 2, zero), l3 = wedge_basis(g, 3, zero), l4 = wedge_basis(g, 4, zero);
  RationalMatrix d2 = boundary_matrix(g, l2, {});
  RationalMatrix d3 = boundary_matrix(g, l3, l2);
  RationalMatrix d4 = boundary_matrix(g, l4, l3);
  return (d2 * d3).is_zero() && (d3 * d4).is_zero();
}

std::string format_chain(const GradedLieAlgebra& g, const WedgeBasis& basis, const Vector& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == 0) continue;
    Rational c = chain[i];
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    if (c != 1) s += to_string(c) + " ";
    std::string w;
    for (auto k : basis.elements[i]) {
      if (!w.empty()) w += "^";
      w += g.basis()[k].name;
    }
    s += w;
  }
  return s.empty() ? "0" : s;
}

}  // namespace dehn
