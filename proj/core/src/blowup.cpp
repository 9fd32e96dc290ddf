#include "dehn/blowup.hpp"

#include <map>
#include <numeric>

#include "dehn/errors.hpp"
#include "dehn/homology.hpp"

namespace dehn {

namespace {

struct FieldUnion {
  std::vector<std::size_t> parent;
  explicit FieldUnion(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::size_t field_position(const GradedLieAlgebra& g, const std::string& id) {
  for (std::size_t i = 0; i < g.fields().size(); ++i)
    if (g.fields()[i].id == id) return i;
  throw InvalidInput("unknown field \"" + id + "\"");
}

}  // namespace

bool is_relatively_perfect_degree_zero(const GradedLieAlgebra& g) {
  Subspace derived = derived_subalgebra(g);
  for (auto i : g.indices_of_weight(Weight::zero(g.weight_dim())))
    if (!derived.contains(unit_vector(g.dim(), i))) return false;
  return true;
}

BlowUpResult blow_up(const GradedLieAlgebra& g) {
  std::size_t n = g.dim();
  Weight zero = Weight::zero(g.weight_dim());
  WedgeBasis l2 = wedge_basis(g, 2, zero);
  WedgeBasis l3 = wedge_basis(g, 3, zero);
  RationalMatrix d3 = boundary_matrix(g, l3, l2);
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < d3.cols(); ++c) cols.push_back(d3.column(c));
  Subspace boundaries(cols, l2.size());

  std::vector<bool> pivot(l2.size(), false);
  for (auto p : boundaries.pivots()) pivot[p] = true;
  std::vector<std::size_t> classes;  // positions in l2
  for (std::size_t c = 0; c < l2.size(); ++c)
    if (!pivot[c]) classes.push_back(c);
  std::vector<long> class_of_column(l2.size(), -1);
  for (std::size_t q = 0; q < classes.size(); ++q) class_of_column[classes[q]] = static_cast<long>(q);

  std::vector<std::size_t> kept;  // nonzero-degree indices of g
  for (std::size_t i = 0; i < n; ++i)
    if (!g.weight(i).is_zero()) kept.push_back(i);
  std::vector<long> kept_pos(n, -1);
  for (std::size_t a = 0; a < kept.size(); ++a) kept_pos[kept[a]] = static_cast<long>(a);

  FieldUnion uf(g.fields().size());
  for (auto c : classes) {
    const auto& w = l2.elements[c];
    uf.join(field_position(g, g.basis()[w[0]].field), field_position(g, g.basis()[w[1]].field));
  }
  std::vector<FieldComponent> fields;
  std::vector<std::size_t> merged_index(g.fields().size());
  std::map<std::size_t, std::size_t> root_to_new;
  for (std::size_t f = 0; f < g.fields().size(); ++f) {
    std::size_t root = uf.find(f);
    auto it = root_to_new.find(root);
    if (it == root_to_new.end()) {
      FieldComponent comp = g.fields()[f];
      std::vector<std::size_t> members;
      for (std::size_t h = 0; h < g.fields().size(); ++h)
        if (uf.find(h) == root) members.push_back(h);
      if (members.size() > 1) {
        comp.id.clear();
        bool archimedean = false;
        for (auto h : members) {
          if (!comp.id.empty()) comp.id += "+";
          comp.id += g.fields()[h].id;
          archimedean = archimedean || g.fields()[h].kind == FieldKind::archimedean;
        }
        if (archimedean) {
          comp.kind = FieldKind::archimedean;
          comp.residue_prime.reset();
        }
      }
      it = root_to_new.emplace(root, fields.size()).first;
      fields.push_back(comp);
    }
    merged_index[f] = it->second;
  }
  auto new_field = [&](std::size_t i) { return fields[merged_index[field_position(g, g.basis()[i].field)]].id; };

  std::vector<BasisElement> basis;
  for (auto i : kept) basis.push_back({g.basis()[i].name, new_field(i), g.weight(i)});
  for (auto c : classes) {
    const auto& w = l2.elements[c];
    basis.push_back({g.basis()[w[0]].name + "^" + g.basis()[w[1]].name, new_field(w[0]), zero});
  }
  std::size_t m = basis.size();

  BlowUpResult r;
  r.source = g;
  r.tau = RationalMatrix(n, m);
  std::vector<Vector> tau_cols;
  for (std::size_t a = 0; a < kept.size(); ++a) tau_cols.push_back(unit_vector(n, kept[a]));
  for (auto c : classes) {
    const auto& w = l2.elements[c];
    tau_cols.push_back(g.bracket_basis(w[0], w[1]));
  }
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t i = 0; i < n; ++i) r.tau(i, b) = tau_cols[b][i];

  GradedLieAlgebra h(g.name() + "~", g.weight_dim(), g.a_rank(), fields, basis);
  h.set_a_nonabelian(g.a_nonabelian());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Weight deg = basis[a].weight + basis[b].weight;
      Vector value = zero_vector(m);
      if (!deg.is_zero()) {
        Vector v = g.bracket(tau_cols[a], tau_cols[b]);
        for (std::size_t k = 0; k < n; ++k) {
          if (v[k] == 0) continue;
          if (kept_pos[k] < 0) throw Error("blow-up bracket left its degree");
          value[static_cast<std::size_t>(kept_pos[k])] = v[k];
        }
      } else {
        const Vector& u = tau_cols[a];
        const Vector& v = tau_cols[b];
        Vector chain = zero_vector(l2.size());
        for (std::size_t k = 0; k < n; ++k) {
          if (u[k] == 0) continue;
          for (std::size_t l = 0; l < n; ++l) {
            if (v[l] == 0 || k == l) continue;
            Wedge w{k, l};
            int s = canonicalize_wedge(w);
            auto it = l2.position.find(w);
            if (it == l2.position.end()) throw Error("wedge left degree zero");
            chain[it->second] += s * u[k] * v[l];
          }
        }
        Vector reduced = boundaries.reduce(chain);
        for (std::size_t c = 0; c < reduced.size(); ++c) {
          if (reduced[c] == 0) continue;
          value[kept.size() + static_cast<std::size_t>(class_of_column[c])] = reduced[c];
        }
      }
      h.set_bracket(a, b, value);
    }
  r.blown_up = std::move(h);
  r.kernel_basis = dehn::kernel_basis(r.tau);
  r.kernel_dim = r.kernel_basis.size();
  return r;
}

BlowUpCheck verify_blow_up(const BlowUpResult& r) {
  BlowUpCheck chk;
  const auto& g = r.source;
  const auto& h = r.blown_up;
  chk.jacobi = validate(h).ok;
  if (!chk.jacobi) chk.failures.push_back("blown-up algebra fails validation");

  chk.tau_homomorphism = true;
  for (std::size_t a = 0; a < h.dim() && chk.tau_homomorphism; ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b)
      if (r.tau * h.bracket_basis(a, b) != g.bracket(r.tau.column(a), r.tau.column(b))) {
        chk.tau_homomorphism = false;
        break;
      }
  if (!chk.tau_homomorphism) chk.failures.push_back("tau is not a homomorphism");

  chk.kernel_central = true;
  for (const auto& k : r.kernel_basis)
    for (std::size_t b = 0; b < h.dim(); ++b)
      if (!is_zero(h.bracket(k, unit_vector(h.dim(), b)))) chk.kernel_central = false;
  if (!chk.kernel_central) chk.failures.push_back("kernel of tau is not central");

  chk.kernel_matches_h2 = r.kernel_dim == h2_degree_zero_dim(g);
  if (!chk.kernel_matches_h2) chk.failures.push_back("kernel dimension differs from dim H_2(g)_0");

  std::vector<Vector> image_cols;
  for (std::size_t b = 0; b < h.dim(); ++b) image_cols.push_back(r.tau.column(b));
  std::vector<Vector> expected = derived_subalgebra(g).basis();
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!g.weight(i).is_zero()) expected.push_back(unit_vector(g.dim(), i));
  chk.image_matches = Subspace(image_cols, g.dim()) == Subspace(expected, g.dim());
  if (!chk.image_matches) chk.failures.push_back("image of tau differs from g' + [g, g]");

  chk.one_tameness_preserved = !is_1_tame(g).holds || is_1_tame(h).holds;
  if (!chk.one_tameness_preserved) chk.failures.push_back("1-tameness not preserved");

  if (is_relatively_perfect_degree_zero(g)) {
    chk.second_blowup_trivial = blow_up(h).kernel_dim == 0;
    if (!*chk.second_blowup_trivial) chk.failures.push_back("second blow-up has a nonzero kernel");
  }
  return chk;
}

}  // namespace dehn
