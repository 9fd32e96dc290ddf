#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dehn/graded_lie.hpp"
#include "dehn/linalg.hpp"

namespace dehn {

using Wedge = std::vector<std::size_t>;  // strictly increasing basis indices

// Basis of the exterior power in a fixed degree: increasing index tuples
// whose weights sum to the degree, in lexicographic order.
struct WedgeBasis {
  std::size_t arity = 0;
  Weight degree;
  std::vector<Wedge> elements;
  std::map<Wedge, std::size_t> position;

  std::size_t size() const { return elements.size(); }
};

// If nonzero_only, every factor must have nonzero weight.
WedgeBasis wedge_basis(const GradedLieAlgebra& g, std::size_t arity, const Weight& degree, bool nonzero_only = false);

// Canonicalize a wedge of basis indices: returns the sign of the sorting
// permutation, or 0 if an index repeats.
int canonicalize_wedge(Wedge& w);

// d_n(x_1 ^ ... ^ x_n) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ x_1 ^ ... ^ x_n (x_i, x_j omitted).
// Columns indexed by the wedge basis of arity n, rows by arity n - 1
// (for n = 2 the rows are the basis elements of g of that degree).
RationalMatrix boundary_matrix(const GradedLieAlgebra& g, std::size_t n, const Weight& degree);
RationalMatrix boundary_matrix(const GradedLieAlgebra& g, const WedgeBasis& source, const WedgeBasis& target);

// Boundary of a single wedge of arity >= 3, as a sparse chain.
std::map<Wedge, Rational> boundary_of(const GradedLieAlgebra& g, const Wedge& w);

struct H2Result {
  std::size_t dim = 0;
  std::size_t lambda2_dim = 0;
  std::size_t lambda3_dim = 0;
  std::size_t cycles_dim = 0;
  std::size_t boundaries_dim = 0;
  WedgeBasis chains;                       // basis of (g ^ g)_0
  std::vector<Vector> representatives;     // cycles spanning a complement of the boundaries
  std::map<std::string, std::size_t> per_field;
};

H2Result h2_degree_zero(const GradedLieAlgebra& g);
std::size_t h2_degree_zero_dim(const GradedLieAlgebra& g);

struct H2TameResult {
  std::size_t dim = 0;
  std::size_t lambda2_dim = 0;             // dim (g' ^ g')_0, g' = sum of nonzero weight spaces
  std::size_t lambda3_dim = 0;
  std::size_t cycles_dim = 0;
  std::size_t boundaries_dim = 0;
  bool maps_onto_h2 = false;               // tame cycles span H_2(g)_0
};

H2TameResult h2_tame(const GradedLieAlgebra& g);

struct KillingResult {
  std::size_t dim = 0;
  std::size_t sym_dim = 0;
  std::size_t domain_dim = 0;
  std::size_t image_rank = 0;
};

// Cokernel in degree 0 of T(u.v (x) w) = u.[v,w] + v.[u,w], with u.v the
// symmetric product.
KillingResult killing_degree_zero(const GradedLieAlgebra& g);
// Same with u, v, w restricted to nonzero weights.
KillingResult killing_tame_degree_zero(const GradedLieAlgebra& g);

// Every cycle in (g' ^ g')_0 is a boundary of some 3-chain of g.
bool prop_six_check(const GradedLieAlgebra& g);

// d_2 d_3 = 0 and d_3 d_4 = 0 in degree 0.
bool boundary_composition_vanishes(const GradedLieAlgebra& g);

std::string format_chain(const GradedLieAlgebra& g, const WedgeBasis& basis, const Vector& chain);

}  // namespace dehn
