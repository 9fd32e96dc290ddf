#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehn/linalg.hpp"
#include "dehn/rational.hpp"

namespace dehn {

struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Rational> c) : coords(c) {}
  static Weight zero(std::size_t dim) { return Weight(std::vector<Rational>(dim, Rational(0))); }

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;
  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight scaled(const Rational& s) const;
  bool operator==(const Weight& other) const { return coords == other.coords; }
  bool operator<(const Weight& other) const { return coords < other.coords; }
};

std::string to_string(const Weight& w);

enum class FieldKind { archimedean, non_archimedean };

struct FieldComponent {
  std::string id;
  FieldKind kind = FieldKind::archimedean;
  std::optional<long> residue_prime;

  bool operator==(const FieldComponent&) const = default;
};

struct BasisElement {
  std::string name;
  std::string field;
  Weight weight;

  bool operator==(const BasisElement&) const = default;
};

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// A finite-dimensional Lie algebra over Q with a basis of weight vectors,
// each attached to one field component.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  // Throws InvalidInput on structural problems: duplicate names or field ids,
  // unknown fields, weight length != weight_dim, missing or spurious primes.
  GradedLieAlgebra(std::string name, std::size_t weight_dim, std::size_t a_rank,
                   std::vector<FieldComponent> fields, std::vector<BasisElement> basis);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t weight_dim() const { return weight_dim_; }
  std::size_t a_rank() const { return a_rank_; }
  void set_a_rank(std::size_t r) { a_rank_ = r; }
  bool a_nonabelian() const { return a_nonabelian_; }
  void set_a_nonabelian(bool v) { a_nonabelian_ = v; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<FieldComponent>& fields() const { return fields_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const Weight& weight(std::size_t i) const { return basis_.at(i).weight; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const FieldComponent& field_of(std::size_t i) const;
  const FieldComponent* find_field(const std::string& id) const;

  // Sets [e_i, e_j] = value and [e_j, e_i] = -value. i == j requires value 0.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  void set_bracket(const std::string& left, const std::string& right,
                   const std::vector<std::pair<std::string, Rational>>& terms);

  const SparseVector& bracket_terms(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& u, const Vector& v) const;
  Vector bracket_basis_vector(std::size_t i, const Vector& v) const;

  // Distinct weights in lexicographic order.
  std::vector<Weight> distinct_weights() const;
  std::vector<std::size_t> indices_of_weight(const Weight& w) const;
  bool is_abelian() const;

 private:
  std::string name_;
  std::size_t weight_dim_ = 0;
  std::size_t a_rank_ = 0;
  bool a_nonabelian_ = false;
  std::vector<FieldComponent> fields_;
  std::vector<BasisElement> basis_;
  std::map<std::string, std::size_t> index_;
  std::vector<SparseVector> table_;
};

struct Violation {
  enum class Kind { grading, field_separation, jacobi };
  Kind kind;
  std::vector<std::size_t> indices;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const GradedLieAlgebra& g);
// Throws ValidationError with the first violation.
void require_valid(const GradedLieAlgebra& g);

std::vector<std::size_t> graded_component_basis(const GradedLieAlgebra& g, const Weight& w);

struct CentralSeries {
  std::vector<Subspace> terms;  // g = g^1, g^2, ..., ending with the stable term
  std::optional<std::size_t> nilpotency_length;
  Subspace stable_term;
};

CentralSeries descending_central_series(const GradedLieAlgebra& g);

// Throws NotNilpotent when the series stabilizes at a nonzero term.
std::size_t nilpotency_length(const GradedLieAlgebra& g);

// Span of [g_i, v] over basis elements g_i and vectors v of s.
Subspace bracket_with(const GradedLieAlgebra& g, const Subspace& s);
Subspace derived_subalgebra(const GradedLieAlgebra& g);

struct PrincipalWeight {
  Weight weight;
  std::size_t multiplicity = 0;  // dim of the weight space of g/[g,g]
  std::vector<std::string> fields;
};

// Weights of g/[g,g]. A zero weight is reported here; callers that need the
// nonzero part filter it (see weight_geometry).
std::vector<PrincipalWeight> principal_weights(const GradedLieAlgebra& g);

struct OneTamenessResult {
  bool holds = false;
  std::optional<Vector> witness;  // element of g_0 outside the sum of brackets
};

struct DoubleTamenessResult {
  bool holds = false;
  std::optional<Weight> alpha;
  std::optional<Vector> witness;
};

OneTamenessResult is_1_tame(const GradedLieAlgebra& g);
DoubleTamenessResult is_doubly_1_tame(const GradedLieAlgebra& g);

Subspace subalgebra_generated(const GradedLieAlgebra& g, const std::vector<Vector>& seed);

// Subalgebra spanned by a subset of basis elements (must be closed under
// brackets; throws InvalidInput otherwise). Fields without basis elements
// are dropped.
GradedLieAlgebra restrict_to_basis(const GradedLieAlgebra& g, const std::vector<std::size_t>& indices);
GradedLieAlgebra field_component(const GradedLieAlgebra& g, const std::string& field_id);

// New basis f_a = sum_b p(b, a) e_b. p must be invertible and map each
// (field, weight) block to itself.
GradedLieAlgebra change_basis(const GradedLieAlgebra& g, const RationalMatrix& p);
GradedLieAlgebra scale_weights(const GradedLieAlgebra& g, const Rational& factor);

}  // namespace dehn
