#include "dehn/graded_lie.hpp"

#include <algorithm>
#include <set>

#include "dehn/errors.hpp"

namespace dehn {

bool Weight::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& other) const {
  if (dim() != other.dim()) throw InvalidInput("weight dimension mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.coords[i] += other.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& other) const { return *this + (-other); }

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(const Rational& s) const {
  Weight r = *this;
  for (auto& c : r.coords) c *= s;
  return r;
}

std::string to_string(const Weight& w) { return to_string(w.coords); }

GradedLieAlgebra::GradedLieAlgebra(std::string name, std::size_t weight_dim, std::size_t a_rank,
                                   std::vector<FieldComponent> fields, std::vector<BasisElement> basis)
    : name_(std::move(name)),
      weight_dim_(weight_dim),
      a_rank_(a_rank),
      fields_(std::move(fields)),
      basis_(std::move(basis)),
      table_(basis_.size() * basis_.size()) {
  if (weight_dim_ == 0) throw InvalidInput("weight_dim must be positive");
  std::set<std::string> ids;
  for (const auto& f : fields_) {
    if (f.id.empty()) throw InvalidInput("empty field id");
    if (!ids.insert(f.id).second) throw InvalidInput("duplicate field id \"" + f.id + "\"");
    if (f.kind == FieldKind::non_archimedean) {
      if (!f.residue_prime || *f.residue_prime < 2)
        throw InvalidInput("non-archimedean field \"" + f.id + "\" needs a residue prime");
      long p = *f.residue_prime;
      for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidInput("residue prime of \"" + f.id + "\" is not prime");
    } else if (f.residue_prime) {
      throw InvalidInput("archimedean field \"" + f.id + "\" cannot carry a residue prime");
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (b.name.empty()) throw InvalidInput("empty basis name");
    if (!index_.emplace(b.name, i).second) throw InvalidInput("duplicate basis name \"" + b.name + "\"");
    if (!ids.count(b.field)) throw InvalidInput("basis element \"" + b.name + "\" refers to unknown field \"" + b.field + "\"");
    if (b.weight.dim() != weight_dim_)
      throw InvalidInput("weight of \"" + b.name + "\" has length " + std::to_string(b.weight.dim()) +
                         ", expected " + std::to_string(weight_dim_));
  }
}

std::optional<std::size_t> GradedLieAlgebra::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const FieldComponent* GradedLieAlgebra::find_field(const std::string& id) const {
  for (const auto& f : fields_)
    if (f.id == id) return &f;
  return nullptr;
}

const FieldComponent& GradedLieAlgebra::field_of(std::size_t i) const { return *find_field(basis_.at(i).field); }

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  std::size_t n = dim();
  if (i >= n || j >= n) throw InvalidInput("bracket index out of range");
  if (value.size() != n) throw InvalidInput("bracket value has wrong length");
  if (i == j) {
    if (!dehn::is_zero(value)) throw InvalidInput("[x, x] must vanish for \"" + basis_[i].name + "\"");
    return;
  }
  SparseVector pos, neg;
  for (std::size_t k = 0; k < n; ++k)
    if (value[k] != 0) {
      pos.emplace_back(k, value[k]);
      neg.emplace_back(k, -value[k]);
    }
  table_[i * n + j] = std::move(pos);
  table_[j * n + i] = std::move(neg);
}

void GradedLieAlgebra::set_bracket(const std::string& left, const std::string& right,
                                   const std::vector<std::pair<std::string, Rational>>& terms) {
  auto i = index_of(left), j = index_of(right);
  if (!i) throw InvalidInput("unknown basis element \"" + left + "\"");
  if (!j) throw InvalidInput("unknown basis element \"" + right + "\"");
  Vector v = zero_vector(dim());
  for (const auto& [name, c] : terms) {
    auto k = index_of(name);
    if (!k) throw InvalidInput("unknown basis element \"" + name + "\"");
    v[*k] += c;
  }
  set_bracket(*i, *j, v);
}

Vector GradedLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v = zero_vector(dim());
  for (const auto& [k, c] : bracket_terms(i, j)) v[k] = c;
  return v;
}

Vector GradedLieAlgebra::bracket(const Vector& u, const Vector& v) const {
  std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw InvalidInput("vector length does not match algebra dimension");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const auto& terms = table_[i * n + j];
      if (terms.empty()) continue;
      Rational c = u[i] * v[j];
      for (const auto& [k, a] : terms) out[k] += c * a;
    }
  }
  return out;
}

Vector GradedLieAlgebra::bracket_basis_vector(std::size_t i, const Vector& v) const {
  std::size_t n = dim();
  Vector out = zero_vector(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (const auto& [k, a] : table_[i * n + j]) out[k] += v[j] * a;
  }
  return out;
}

std::vector<Weight> GradedLieAlgebra::distinct_weights() const {
  std::set<Weight> ws;
  for (const auto& b : basis_) ws.insert(b.weight);
  return {ws.begin(), ws.end()};
}

std::vector<std::size_t> GradedLieAlgebra::indices_of_weight(const Weight& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].weight == w) out.push_back(i);
  return out;
}

bool GradedLieAlgebra::is_abelian() const {
  for (const auto& t : table_)
    if (!t.empty()) return false;
  return true;
}

ValidationReport validate(const GradedLieAlgebra& g) {
  ValidationReport rep;
  std::size_t n = g.dim();
  const auto& B = g.basis();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& terms = g.bracket_terms(i, j);
      if (terms.empty()) continue;
      Weight target = B[i].weight + B[j].weight;
      if (B[i].field != B[j].field) {
        rep.violations.push_back({Violation::Kind::field_separation, {i, j},
                                  "[" + B[i].name + ", " + B[j].name + "] must vanish: different field components"});
      }
      for (const auto& [k, c] : terms) {
        if (!(B[k].weight == target))
          rep.violations.push_back({Violation::Kind::grading, {i, j, k},
                                    "[" + B[i].name + ", " + B[j].name + "] has a component on " + B[k].name +
                                        " of weight " + to_string(B[k].weight) + ", expected " + to_string(target)});
        if (B[k].field != B[i].field && B[i].field == B[j].field)
          rep.violations.push_back({Violation::Kind::field_separation, {i, j, k},
                                    "[" + B[i].name + ", " + B[j].name + "] leaves field component " + B[i].field});
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = g.bracket_basis_vector(i, g.bracket_basis(j, k));
        s += g.bracket_basis_vector(j, g.bracket_basis(k, i));
        s += g.bracket_basis_vector(k, g.bracket_basis(i, j));
        if (!is_zero(s))
          rep.violations.push_back({Violation::Kind::jacobi, {i, j, k},
                                    "Jacobi identity fails on (" + B[i].name + ", " + B[j].name + ", " + B[k].name +
                                        "): " + to_string(s)});
      }
  rep.ok = rep.violations.empty();
  return rep;
}

void require_valid(const GradedLieAlgebra& g) {
  auto rep = validate(g);
  if (!rep.ok) throw ValidationError(rep.violations.front().message);
}

std::vector<std::size_t> graded_component_basis(const GradedLieAlgebra& g, const Weight& w) {
  return g.indices_of_weight(w);
}

Subspace bracket_with(const GradedLieAlgebra& g, const Subspace& s) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : s.basis()) {
      Vector b = g.bracket_basis_vector(i, v);
      if (!is_zero(b)) gens.push_back(std::move(b));
    }
  return Subspace(gens, g.dim());
}

Subspace derived_subalgebra(const GradedLieAlgebra& g) { return bracket_with(g, Subspace::whole(g.dim())); }

CentralSeries descending_central_series(const GradedLieAlgebra& g) {
  CentralSeries cs;
  cs.terms.push_back(Subspace::whole(g.dim()));
  while (true) {
    const Subspace& last = cs.terms.back();
    if (last.dim() == 0) break;
    Subspace next = bracket_with(g, last);
    if (next.dim() == last.dim()) break;
    cs.terms.push_back(std::move(next));
  }
  cs.stable_term = cs.terms.back();
  if (cs.stable_term.dim() == 0) cs.nilpotency_length = cs.terms.size() - 1;
  return cs;
}

std::size_t nilpotency_length(const GradedLieAlgebra& g) {
  auto cs = descending_central_series(g);
  if (!cs.nilpotency_length)
    throw NotNilpotent("lower central series of \"" + g.name() + "\" stabilizes in dimension " +
                       std::to_string(cs.stable_term.dim()));
  return *cs.nilpotency_length;
}

std::vector<PrincipalWeight> principal_weights(const GradedLieAlgebra& g) {
  std::vector<PrincipalWeight> out;
  for (const auto& w : g.distinct_weights()) {
    PrincipalWeight pw{w, 0, {}};
    for (const auto& f : g.fields()) {
      std::vector<std::size_t> block;
      for (auto i : g.indices_of_weight(w))
        if (g.basis()[i].field == f.id) block.push_back(i);
      if (block.empty()) continue;
      std::vector<Vector> brackets;
      for (std::size_t i = 0; i < g.dim(); ++i) {
        if (g.basis()[i].field != f.id) continue;
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
          if (g.basis()[j].field != f.id || !(g.weight(i) + g.weight(j) == w)) continue;
          Vector b = g.bracket_basis(i, j);
          if (!is_zero(b)) brackets.push_back(std::move(b));
        }
      }
      std::size_t m = block.size() - Subspace(brackets, g.dim()).dim();
      if (m > 0) {
        pw.multiplicity += m;
        pw.fields.push_back(f.id);
      }
    }
    if (pw.multiplicity > 0) out.push_back(std::move(pw));
  }
  return out;
}

namespace {

// Span of [g_beta, g_-beta] over nonzero beta outside the excluded set.
Subspace degree_zero_brackets(const GradedLieAlgebra& g, const std::vector<Weight>& excluded) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Weight& b = g.weight(i);
    if (b.is_zero() || std::find(excluded.begin(), excluded.end(), b) != excluded.end()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (!(g.weight(j) == -b)) continue;
      Vector v = g.bracket_basis(i, j);
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
  }
  return Subspace(gens, g.dim());
}

std::optional<Vector> uncovered_zero_vector(const GradedLieAlgebra& g, const Subspace& s) {
  for (auto i : g.indices_of_weight(Weight::zero(g.weight_dim()))) {
    Vector e = unit_vector(g.dim(), i);
    if (!s.contains(e)) return e;
  }
  return std::nullopt;
}

}  // namespace

OneTamenessResult is_1_tame(const GradedLieAlgebra& g) {
  auto w = uncovered_zero_vector(g, degree_zero_brackets(g, {}));
  return {!w.has_value(), w};
}

DoubleTamenessResult is_doubly_1_tame(const GradedLieAlgebra& g) {
  std::set<Weight> alphas;
  alphas.insert(Weight::zero(g.weight_dim()));
  for (const auto& w : g.distinct_weights()) {
    alphas.insert(w);
    alphas.insert(-w);
  }
  for (const auto& a : alphas) {
    auto w = uncovered_zero_vector(g, degree_zero_brackets(g, {a, -a}));
    if (w) return {false, a, w};
  }
  return {true, std::nullopt, std::nullopt};
}

Subspace subalgebra_generated(const GradedLieAlgebra& g, const std::vector<Vector>& seed) {
  Subspace s(seed, g.dim());
  while (true) {
    std::vector<Vector> more;
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        Vector v = g.bracket(b[i], b[j]);
        if (!s.contains(v)) more.push_back(std::move(v));
      }
    if (more.empty()) return s;
    s = s.sum(more);
  }
}

GradedLieAlgebra restrict_to_basis(const GradedLieAlgebra& g, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> sel = indices;
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  std::vector<long> pos(g.dim(), -1);
  std::vector<BasisElement> basis;
  std::set<std::string> used;
  for (std::size_t a = 0; a < sel.size(); ++a) {
    pos[sel[a]] = static_cast<long>(a);
    basis.push_back(g.basis().at(sel[a]));
    used.insert(basis.back().field);
  }
  std::vector<FieldComponent> fields;
  for (const auto& f : g.fields())
    if (used.count(f.id)) fields.push_back(f);
  GradedLieAlgebra h(g.name(), g.weight_dim(), g.a_rank(), fields, basis);
  h.set_a_nonabelian(g.a_nonabelian());
  for (std::size_t a = 0; a < sel.size(); ++a)
    for (std::size_t b = a + 1; b < sel.size(); ++b) {
      Vector v = zero_vector(sel.size());
      for (const auto& [k, c] : g.bracket_terms(sel[a], sel[b])) {
        if (pos[k] < 0)
          throw InvalidInput("basis subset is not closed under brackets: [" + g.basis()[sel[a]].name + ", " +
                             g.basis()[sel[b]].name + "] involves " + g.basis()[k].name);
        v[static_cast<std::size_t>(pos[k])] = c;
      }
      h.set_bracket(a, b, v);
    }
  return h;
}

GradedLieAlgebra field_component(const GradedLieAlgebra& g, const std::string& field_id) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.basis()[i].field == field_id) idx.push_back(i);
  GradedLieAlgebra h = restrict_to_basis(g, idx);
  if (h.fields().empty()) {
    const FieldComponent* f = g.find_field(field_id);
    if (!f) throw InvalidInput("unknown field \"" + field_id + "\"");
    h = GradedLieAlgebra(g.name(), g.weight_dim(), g.a_rank(), {*f}, {});
  }
  h.set_name(g.name() + "/" + field_id);
  return h;
}

GradedLieAlgebra change_basis(const GradedLieAlgebra& g, const RationalMatrix& p) {
  std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw InvalidInput("basis change has wrong size");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (p(r, c) != 0 && (!(g.weight(r) == g.weight(c)) || g.basis()[r].field != g.basis()[c].field))
        throw InvalidInput("basis change mixes weight spaces or field components");
  RationalMatrix pinv = inverse(p);
  GradedLieAlgebra h(g.name(), g.weight_dim(), g.a_rank(), g.fields(), g.basis());
  h.set_a_nonabelian(g.a_nonabelian());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) h.set_bracket(a, b, pinv * g.bracket(p.column(a), p.column(b)));
  return h;
}

GradedLieAlgebra scale_weights(const GradedLieAlgebra& g, const Rational& factor) {
  if (factor <= 0) throw InvalidInput("weight scaling factor must be positive");
  auto basis = g.basis();
  for (auto& b : basis) b.weight = b.weight.scaled(factor);
  GradedLieAlgebra h(g.name(), g.weight_dim(), g.a_rank(), g.fields(), basis);
  h.set_a_nonabelian(g.a_nonabelian());
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) h.set_bracket(a, b, g.bracket_basis(a, b));
  return h;
}

}  // namespace dehn
