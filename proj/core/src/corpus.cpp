#include "dehn/corpus.hpp"

#include <functional>
#include <map>
#include <tuple>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

using Terms = std::vector<std::pair<std::string, Rational>>;

struct Builder {
  std::string name;
  std::size_t weight_dim = 2;
  std::size_t a_rank = 2;
  std::vector<FieldComponent> fields{{"R", FieldKind::archimedean, std::nullopt}};
  std::vector<BasisElement> basis;
  std::vector<std::tuple<std::string, std::string, Terms>> brackets;

  void add(const std::string& n, Weight w, const std::string& field = "R") { basis.push_back({n, field, std::move(w)}); }
  void bracket(const std::string& a, const std::string& b, Terms t) { brackets.emplace_back(a, b, std::move(t)); }

  GradedLieAlgebra build() const {
    GradedLieAlgebra g(name, weight_dim, a_rank, fields, basis);
    for (const auto& [a, b, t] : brackets) g.set_bracket(a, b, t);
    return g;
  }
};

// n x n matrix units and commutators, for algebras presented by matrices.
RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  RationalMatrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

// Brackets of a matrix algebra given by named matrices spanning a subalgebra.
void matrix_brackets(Builder& b, const std::vector<std::pair<std::string, RationalMatrix>>& elems) {
  std::vector<RationalMatrix> images;
  for (const auto& e : elems) images.push_back(e.second);
  MatrixRealization real{images};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      Vector v = real.to_vector(commutator(elems[i].second, elems[j].second));
      Terms t;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) t.emplace_back(elems[k].first, v[k]);
      if (!t.empty()) b.bracket(elems[i].first, elems[j].first, t);
    }
}

Weight L(int i) {
  if (i == 1) return {1, 0};
  if (i == 2) return {0, 1};
  return {-1, -1};
}

GradedLieAlgebra heisenberg() {
  Builder b;
  b.name = "heisenberg";
  b.weight_dim = 1;
  b.a_rank = 1;
  b.add("X", {1});
  b.add("Y", {1});
  b.add("Z", {2});
  b.bracket("X", "Y", {{"Z", 1}});
  return b.build();
}

GradedLieAlgebra filiform4() {
  Builder b;
  b.name = "filiform-4";
  b.weight_dim = 1;
  b.a_rank = 1;
  b.add("e1", {1});
  b.add("e2", {1});
  b.add("e3", {2});
  b.add("e4", {3});
  b.bracket("e1", "e2", {{"e3", 1}});
  b.bracket("e1", "e3", {{"e4", 1}});
  return b.build();
}

// Weight of E_ij in the torus diag(1, a, b, 1): chi_i - chi_j.
Weight a4_weight(int i, int j) {
  auto chi = [](int k) -> Weight {
    if (k == 2) return {1, 0};
    if (k == 3) return {0, 1};
    return {0, 0};
  };
  return chi(i) - chi(j);
}

Builder a4_builder(bool with_center) {
  Builder b;
  b.name = with_center ? "abels-a4" : "abels-a4-bar";
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) {
    if (!with_center && i == 1 && j == 4) continue;
    b.add("E" + std::to_string(i) + std::to_string(j), a4_weight(i, j));
  }
  b.bracket("E12", "E23", {{"E13", 1}});
  b.bracket("E23", "E34", {{"E24", 1}});
  if (with_center) {
    b.bracket("E12", "E24", {{"E14", 1}});
    b.bracket("E13", "E34", {{"E14", 1}});
  }
  return b;
}

GradedLieAlgebra abels2() {
  Builder b;
  b.name = "abels-2";
  b.add("X1", {1, 0});
  b.add("X2", {0, 1});
  b.add("X3", {-1, -1});
  b.add("Y1", {-1, 0});
  b.add("Y2", {0, -1});
  b.add("Y3", {1, 1});
  b.add("Z1", {0, 0});
  b.add("Z2", {0, 0});
  b.bracket("X1", "X2", {{"Y3", 1}});
  b.bracket("X2", "X3", {{"Y1", 1}});
  b.bracket("X3", "X1", {{"Y2", 1}});
  b.bracket("X1", "Y1", {{"Z1", 1}});
  b.bracket("X2", "Y2", {{"Z2", 1}});
  b.bracket("X3", "Y3", {{"Z1", -1}, {"Z2", -1}});
  return b.build();
}

GradedLieAlgebra higher_sol() {
  Builder b;
  b.name = "higher-sol";
  b.add("X1", {1, 0});
  b.add("X2", {0, 1});
  b.add("X3", {-1, -1});
  return b.build();
}

GradedLieAlgebra sol_padic() {
  Builder b;
  b.name = "sol-padic";
  b.weight_dim = 1;
  b.a_rank = 1;
  b.fields = {{"Q2", FieldKind::non_archimedean, 2}, {"Q3", FieldKind::non_archimedean, 3}};
  b.add("X", {1}, "Q2");
  b.add("Y", {-1}, "Q3");
  return b.build();
}

GradedLieAlgebra sol_real_padic() {
  Builder b;
  b.name = "sol-real-padic";
  b.weight_dim = 1;
  b.a_rank = 1;
  b.fields = {{"R", FieldKind::archimedean, std::nullopt}, {"Q2", FieldKind::non_archimedean, 2}};
  b.add("X", {1}, "R");
  b.add("Y", {-1}, "Q2");
  return b.build();
}

// n^- = span(E21, E32, E31) of sl3 acting on V.
struct Sl3Rep {
  std::vector<std::pair<std::string, RationalMatrix>> n_minus;
  std::vector<std::pair<std::string, Weight>> v_basis;
  std::function<Vector(const RationalMatrix&, std::size_t)> act;  // F . v_k in V coordinates
};

GradedLieAlgebra sl3_semidirect(const std::string& name, const Sl3Rep& rep) {
  Builder b;
  b.name = name;
  const std::vector<std::tuple<std::string, int, int>> roots{{"n21", 2, 1}, {"n32", 3, 2}, {"n31", 3, 1}};
  std::vector<RationalMatrix> mats;
  for (const auto& [n, i, j] : roots) {
    b.add(n, L(i) - L(j));
    mats.push_back(unit(3, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  }
  for (const auto& [n, w] : rep.v_basis) b.add(n, w);
  MatrixRealization nm{mats};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = a + 1; c < 3; ++c) {
      Vector v = nm.to_vector(commutator(mats[a], mats[c]));
      Terms t;
      for (std::size_t k = 0; k < 3; ++k)
        if (v[k] != 0) t.emplace_back(std::get<0>(roots[k]), v[k]);
      if (!t.empty()) b.bracket(std::get<0>(roots[a]), std::get<0>(roots[c]), t);
    }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t k = 0; k < rep.v_basis.size(); ++k) {
      Vector v = rep.act(mats[a], k);
      Terms t;
      for (std::size_t m = 0; m < v.size(); ++m)
        if (v[m] != 0) t.emplace_back(rep.v_basis[m].first, v[m]);
      if (!t.empty()) b.bracket(std::get<0>(roots[a]), rep.v_basis[k].first, t);
    }
  return b.build();
}

GradedLieAlgebra sl3_v10() {
  Sl3Rep rep;
  for (int i = 1; i <= 3; ++i) rep.v_basis.emplace_back("v" + std::to_string(i), L(i));
  rep.act = [](const RationalMatrix& f, std::size_t k) { return f.column(k); };
  return sl3_semidirect("sl3-v10", rep);
}

GradedLieAlgebra sl3_v20() {
  Sl3Rep rep;
  std::vector<std::pair<int, int>> monomials;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      monomials.emplace_back(i, j);
      rep.v_basis.emplace_back("s" + std::to_string(i) + std::to_string(j), L(i) + L(j));
    }
  rep.act = [monomials](const RationalMatrix& f, std::size_t k) {
    auto [i, j] = monomials[k];
    Vector out = zero_vector(monomials.size());
    auto add = [&](int a, int c, const Rational& coeff) {
      if (coeff == 0) return;
      if (a > c) std::swap(a, c);
      for (std::size_t m = 0; m < monomials.size(); ++m)
        if (monomials[m] == std::pair<int, int>{a, c}) out[m] += coeff;
    };
    for (int a = 1; a <= 3; ++a) {
      add(a, j, f(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(i - 1)));
      add(i, a, f(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(j - 1)));
    }
    return out;
  };
  return sl3_semidirect("sl3-v20", rep);
}

GradedLieAlgebra sl3_v11() {
  Sl3Rep rep;
  std::vector<RationalMatrix> mats;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      rep.v_basis.emplace_back("a" + std::to_string(i) + std::to_string(j), L(i) - L(j));
      mats.push_back(unit(3, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  rep.v_basis.emplace_back("h1", Weight{0, 0});
  mats.push_back(unit(3, 1, 1) - unit(3, 2, 2));
  rep.v_basis.emplace_back("h2", Weight{0, 0});
  mats.push_back(unit(3, 2, 2) - unit(3, 3, 3));
  MatrixRealization adj{mats};
  rep.act = [adj, mats](const RationalMatrix& f, std::size_t k) {
    return adj.to_vector(commutator(f, mats[k]));
  };
  return sl3_semidirect("sl3-v11", rep);
}

Builder example13_builder() {
  Builder b;
  b.name = "example-13dim";
  std::map<int, Weight> chi{{1, {0, 0}}, {2, {0, 0}}, {3, {1, 0}}, {4, {0, -1}}, {5, {0, 0}}, {6, {0, 0}}};
  const std::vector<std::pair<int, int>> cells{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 3}, {3, 4},
                                               {3, 5}, {3, 6}, {4, 4}, {4, 5}, {4, 6}, {5, 6}};
  std::vector<std::pair<std::string, RationalMatrix>> elems;
  for (auto [i, j] : cells) {
    std::string n = "E" + std::to_string(i) + std::to_string(j);
    b.add(n, chi[i] - chi[j]);
    elems.emplace_back(n, unit(6, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  }
  // Work modulo the central ideal spanned by E16 and E26.
  std::vector<std::pair<std::string, RationalMatrix>> with_center = elems;
  with_center.emplace_back("E16", unit(6, 1, 6));
  with_center.emplace_back("E26", unit(6, 2, 6));
  Builder full = b;
  full.add("E16", {0, 0});
  full.add("E26", {0, 0});
  matrix_brackets(full, with_center);
  for (auto& [l, r, t] : full.brackets) {
    Terms kept;
    for (const auto& term : t)
      if (term.first != "E16" && term.first != "E26") kept.push_back(term);
    if (!kept.empty() && l != "E16" && l != "E26" && r != "E16" && r != "E26") b.bracket(l, r, kept);
  }
  return b;
}

GradedLieAlgebra example13_radical() {
  GradedLieAlgebra g = example13_builder().build();
  std::vector<std::size_t> idx;
  for (const char* n : {"E13", "E14", "E15", "E34", "E35", "E36", "E45", "E46"}) idx.push_back(*g.index_of(n));
  GradedLieAlgebra e = restrict_to_basis(g, idx);
  e.set_name("example-13dim-radical");
  return e;
}

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> list{
      {"sol-lambda", "abelian R^2, weights 1 and -lambda (default lambda = 2; use sol-lambda:P/Q)"},
      {"sol-1-1", "SOL: abelian R^2 with opposite weights 1 and -1"},
      {"sol-padic", "Q_2 x Q_3 with opposite weights"},
      {"sol-real-padic", "R x Q_2 with opposite weights"},
      {"higher-sol", "abelian R^3, weights summing to zero, rank 2"},
      {"heisenberg", "3-dimensional Heisenberg algebra, weights 1, 1, 2"},
      {"filiform-4", "4-dimensional filiform algebra, weights 1, 1, 2, 3"},
      {"abels-a4", "strictly upper triangular 4x4 matrices under diag(1, a, b, 1)"},
      {"abels-a4-bar", "abels-a4 modulo its one-dimensional center"},
      {"abels-2", "free 3-step nilpotent algebra on X1, X2, X3 modulo [Xi, [Xi, Xj]]"},
      {"sl3-v10", "n^- of sl3 acting on the standard representation"},
      {"sl3-v20", "n^- of sl3 acting on Sym^2 of the standard representation"},
      {"sl3-v11", "n^- of sl3 acting on the adjoint representation"},
      {"example-13dim", "13-dimensional algebra of 6x6 matrices modulo E16, E26"},
      {"example-13dim-radical", "exponential radical of example-13dim"},
  };
  return list;
}

}  // namespace

std::vector<CorpusEntry> corpus_entries() { return entries(); }

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

GradedLieAlgebra sol_lambda(const Rational& lambda) {
  if (lambda <= 0) throw InvalidInput("lambda must be positive");
  Builder b;
  b.name = lambda == 2 ? "sol-lambda" : "sol-lambda:" + to_string(lambda);
  if (lambda == 1) b.name = "sol-1-1";
  b.weight_dim = 1;
  b.a_rank = 1;
  b.add("X", {1});
  b.add("Y", {-lambda});
  return b.build();
}

GradedLieAlgebra corpus_algebra(const std::string& name) {
  if (name.rfind("sol-lambda:", 0) == 0) return sol_lambda(parse_rational(name.substr(11)));
  if (name == "sol-lambda") return sol_lambda(2);
  if (name == "sol-1-1") return sol_lambda(1);
  if (name == "sol-padic") return sol_padic();
  if (name == "sol-real-padic") return sol_real_padic();
  if (name == "higher-sol") return higher_sol();
  if (name == "heisenberg") return heisenberg();
  if (name == "filiform-4") return filiform4();
  if (name == "abels-a4") return a4_builder(true).build();
  if (name == "abels-a4-bar") return a4_builder(false).build();
  if (name == "abels-2") return abels2();
  if (name == "sl3-v10") return sl3_v10();
  if (name == "sl3-v20") return sl3_v20();
  if (name == "sl3-v11") return sl3_v11();
  if (name == "example-13dim") return example13_builder().build();
  if (name == "example-13dim-radical") return example13_radical();
  throw InvalidInput("unknown example \"" + name + "\"");
}

std::optional<MatrixRealization> matrix_realization(const std::string& name) {
  if (name == "heisenberg") return MatrixRealization{{unit(3, 1, 2), unit(3, 2, 3), unit(3, 1, 3)}};
  if (name == "filiform-4")
    return MatrixRealization{{unit(4, 1, 2) + unit(4, 2, 3) + unit(4, 3, 4), unit(4, 3, 4), unit(4, 2, 4), unit(4, 1, 4)}};
  if (name == "abels-a4")
    return MatrixRealization{{unit(4, 1, 2), unit(4, 1, 3), unit(4, 1, 4), unit(4, 2, 3), unit(4, 2, 4), unit(4, 3, 4)}};
  if (name == "abels-a4-bar") return std::nullopt;
  if (name == "sl3-v10") {
    // Affine 4x4 matrices: n^- in the top-left block, V in the last column.
    std::vector<RationalMatrix> m{unit(4, 2, 1), unit(4, 3, 2), unit(4, 3, 1), unit(4, 1, 4), unit(4, 2, 4),
                                  unit(4, 3, 4)};
    return MatrixRealization{m};
  }
  if (name == "higher-sol") return MatrixRealization{{unit(4, 1, 4), unit(4, 2, 4), unit(4, 3, 4)}};
  return std::nullopt;
}

}  // namespace dehn
