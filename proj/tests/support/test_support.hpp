#pragma once
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dehn/graded_lie.hpp"
#include "dehn/linalg.hpp"
#include "dehn/rational.hpp"

namespace dehn::testkit {

inline Rational random_rational(std::mt19937& rng, int span = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n, int span = 5, int max_den = 3) {
  Vector v(n);
  for (auto& c : v) c = random_rational(rng, span, max_den);
  return v;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int span = 3) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, span, 2);
  return m;
}

// Random invertible matrix mapping each (field, weight) block to itself.
inline RationalMatrix random_graded_basis_change(std::mt19937& rng, const GradedLieAlgebra& g) {
  std::map<std::pair<std::string, Weight>, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < g.dim(); ++i) blocks[{g.basis()[i].field, g.weight(i)}].push_back(i);
  RationalMatrix p(g.dim(), g.dim());
  for (const auto& [key, idx] : blocks) {
    RationalMatrix block;
    do {
      block = random_matrix(rng, idx.size(), idx.size());
    } while (rank(block) != idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) p(idx[r], idx[c]) = block(r, c);
  }
  return p;
}

inline Rational random_positive_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 7);
  std::uniform_int_distribution<int> den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace dehn::testkit

namespace dehn::testkit {

// Direct product of two algebras graded in the same weight space, with
// basis names and field ids prefixed by "a." and "b.".
inline GradedLieAlgebra direct_product(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
  std::vector<FieldComponent> fields;
  std::vector<BasisElement> basis;
  for (const auto& [pre, g] : {std::pair<std::string, const GradedLieAlgebra*>{"a.", &a}, {"b.", &b}}) {
    for (auto f : g->fields()) {
      f.id = pre + f.id;
      fields.push_back(f);
    }
    for (auto e : g->basis()) {
      e.name = pre + e.name;
      e.field = pre + e.field;
      basis.push_back(e);
    }
  }
  GradedLieAlgebra p(a.name() + "x" + b.name(), a.weight_dim(), a.a_rank(), fields, basis);
  std::size_t off = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector v(p.dim());
      for (const auto& [k, c] : a.bracket_terms(i, j)) v[k] = c;
      if (!is_zero(v)) p.set_bracket(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector v(p.dim());
      for (const auto& [k, c] : b.bracket_terms(i, j)) v[off + k] = c;
      if (!is_zero(v)) p.set_bracket(off + i, off + j, v);
    }
  return p;
}

}  // namespace dehn::testkit
