#include "dehn/weight_geometry.hpp"

#include <algorithm>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

// Nonnegative solution of a x = b by phase-one simplex with Bland's rule.
std::optional<Vector> nonnegative_solution(const RationalMatrix& a, const Vector& b) {
  std::size_t m = a.rows(), n = a.cols();
  std::size_t cols = n + m;
  RationalMatrix t(m, cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rational sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = sign * a(i, j);
    t(i, n + i) = 1;
    t(i, cols) = sign * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  Vector reduced(cols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) reduced[j] -= t(i, j);
  for (std::size_t i = 0; i < m; ++i) reduced[cols] -= t(i, cols);

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (reduced[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, cols) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded; cannot happen for phase one
    Rational piv = t(leave, enter);
    for (std::size_t j = 0; j <= cols; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rational f = t(i, enter);
      for (std::size_t j = 0; j <= cols; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    Rational f = reduced[enter];
    for (std::size_t j = 0; j <= cols; ++j)
      if (t(leave, j) != 0) reduced[j] -= f * t(leave, j);
    basis[leave] = enter;
  }
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) infeasibility += t(i, cols);
  if (infeasibility != 0) return std::nullopt;
  Vector x = zero_vector(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, cols);
  return x;
}

}  // namespace

HullCertificate zero_in_convex_hull(const std::vector<Weight>& points) {
  HullCertificate cert;
  if (points.empty()) return cert;
  std::size_t d = points.front().dim(), m = points.size();
  for (const auto& p : points)
    if (p.dim() != d) throw InvalidInput("points of different dimensions");

  RationalMatrix a(d + 1, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < d; ++k) a(k, j) = points[j].coords[k];
    a(d, j) = 1;
  }
  Vector b = zero_vector(d + 1);
  b[d] = 1;
  if (auto lambda = nonnegative_solution(a, b)) {
    cert.contains_zero = true;
    cert.coefficients = *lambda;
    return cert;
  }

  // l = l_plus - l_minus with l(p_j) - s_j = 1.
  RationalMatrix f(m, 2 * d + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      f(j, k) = points[j].coords[k];
      f(j, d + k) = -points[j].coords[k];
    }
    f(j, 2 * d + j) = -1;
  }
  auto sol = nonnegative_solution(f, Vector(m, Rational(1)));
  if (!sol) throw Error("convex hull test found neither coefficients nor a separating functional");
  cert.functional = zero_vector(d);
  for (std::size_t k = 0; k < d; ++k) cert.functional[k] = (*sol)[k] - (*sol)[d + k];
  for (const auto& p : points)
    if (dot(cert.functional, p.coords) <= 0) throw Error("separating functional failed verification");
  return cert;
}

bool quasi_opposite(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim()) throw InvalidInput("weights of different dimensions");
  if (a.is_zero() || b.is_zero()) throw ZeroWeightPresent("quasi-opposite test on a zero weight");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.coords[i] * b.coords[j] != a.coords[j] * b.coords[i]) return false;
  return dot(a.coords, b.coords) < 0;
}

std::vector<std::pair<std::size_t, std::size_t>> quasi_opposite_pairs(const std::vector<Weight>& points) {
  for (const auto& p : points)
    if (p.is_zero()) throw ZeroWeightPresent("zero weight in quasi-opposite pair search");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (quasi_opposite(points[i], points[j])) out.emplace_back(i, j);
  return out;
}

std::vector<Weight> WeightSet::all() const {
  std::vector<Weight> out;
  for (const auto& e : entries) out.push_back(e.weight);
  return out;
}

std::vector<Weight> WeightSet::nonzero() const {
  std::vector<Weight> out;
  for (const auto& e : entries)
    if (!e.weight.is_zero()) out.push_back(e.weight);
  return out;
}

std::vector<Weight> WeightSet::principal_nonzero() const {
  std::vector<Weight> out;
  for (const auto& e : entries)
    if (e.principal() && !e.weight.is_zero()) out.push_back(e.weight);
  return out;
}

std::vector<Weight> WeightSet::principal_non_archimedean_nonzero() const {
  std::vector<Weight> out;
  for (const auto& e : entries)
    if (e.principal_non_archimedean && !e.weight.is_zero()) out.push_back(e.weight);
  return out;
}

bool WeightSet::has_zero_principal() const {
  for (const auto& e : entries)
    if (e.principal() && e.weight.is_zero()) return true;
  return false;
}

WeightSet weight_set(const GradedLieAlgebra& g) {
  WeightSet ws;
  ws.weight_dim = g.weight_dim();
  auto principal = principal_weights(g);
  for (const auto& w : g.distinct_weights()) {
    WeightEntry e;
    e.weight = w;
    for (auto i : g.indices_of_weight(w)) {
      ++e.multiplicity;
      const auto& f = g.basis()[i].field;
      if (std::find(e.fields.begin(), e.fields.end(), f) == e.fields.end()) e.fields.push_back(f);
    }
    for (const auto& p : principal) {
      if (!(p.weight == w)) continue;
      e.principal_multiplicity = p.multiplicity;
      for (const auto& fid : p.fields) {
        if (g.find_field(fid)->kind == FieldKind::non_archimedean) e.principal_non_archimedean = true;
        else e.principal_archimedean = true;
      }
    }
    ws.entries.push_back(std::move(e));
  }
  return ws;
}

TamenessFlags tameness_flags(const WeightSet& ws) {
  TamenessFlags f;
  f.tame = !zero_in_convex_hull(ws.all()).contains_zero;
  f.two_tame = quasi_opposite_pairs(ws.principal_nonzero()).empty();
  f.stably_two_tame = quasi_opposite_pairs(ws.nonzero()).empty();
  return f;
}

std::optional<Vector> compacting_functional(const WeightSet& ws) {
  auto cert = zero_in_convex_hull(ws.all());
  if (cert.contains_zero) return std::nullopt;
  return cert.functional;
}

}  // namespace dehn
