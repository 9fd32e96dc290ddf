#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dehn/graded_lie.hpp"
#include "dehn/rational.hpp"

namespace dehn {

struct NormModel {
  FieldKind kind = FieldKind::archimedean;
  long prime = 0;  // only for non-archimedean

  static NormModel real();
  static NormModel padic(long p);

  bool archimedean() const { return kind == FieldKind::archimedean; }
  Rational abs(const Rational& q) const;
  std::string to_string() const;
};

// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational& q, long p);

// mu with |l1| = |l2|^mu, bracketed by rationals (exact when commensurable).
struct MuExponent {
  std::optional<Rational> exact;
  Rational lower;
  Rational upper;
};

// Group (K1 x K2) semidirect Z with t acting by (l1, l2^-1).
class SolModel {
 public:
  // Requires |l2|_2 >= |l1|_1 > 1. Throws InvalidInput otherwise.
  SolModel(NormModel k1, NormModel k2, Rational l1, Rational l2);

  const NormModel& k1() const { return k1_; }
  const NormModel& k2() const { return k2_; }
  const Rational& l1() const { return l1_; }
  const Rational& l2() const { return l2_; }
  const MuExponent& mu() const { return mu_; }

  // A rational u >= s^mu for s >= 0, exact when s^mu is rational and mu is known.
  Rational pow_mu_upper(const Rational& s) const;

 private:
  NormModel k1_, k2_;
  Rational l1_, l2_;
  MuExponent mu_;
};

struct SolElement {
  Rational x = 0;
  Rational y = 0;
  long n = 0;

  bool operator==(const SolElement& o) const { return x == o.x && y == o.y && n == o.n; }
  bool operator<(const SolElement& o) const;
};

// (x, y, n)(x', y', n') = (x + l1^n x', y + l2^-n y', n + n').
SolElement multiply(const SolModel& m, const SolElement& a, const SolElement& b);
SolElement inverse(const SolModel& m, const SolElement& a);

struct Letter {
  enum class Kind { x, y, t, g };
  Kind kind = Kind::x;
  int exponent = 1;  // +1 or -1
  int index = 0;     // for g_k

  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

Word inverse(const Word& w);
std::string to_string(const Word& w);

// Second coordinate of the path step g_k: 1 for an archimedean K2 and
// l2^k otherwise.
Rational g_step(const SolModel& m, int k);
SolElement letter_element(const SolModel& m, const Letter& l);

// A closed edge path c_0 = e, c_1, ..., c_{L-1} (c_L = c_0), each step one
// generator or one g_k.
class ClosedPath {
 public:
  // Throws InvalidInput if the word does not close up.
  static ClosedPath from_word(const SolModel& m, const Word& w);
  static ClosedPath from_vertices(std::vector<SolElement> vertices);

  const std::vector<SolElement>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }

 private:
  std::vector<SolElement> vertices_;
};

// Elements of K1 x K2 with componentwise operations.
struct KValue {
  Rational first = 0;
  Rational second = 0;

  KValue operator+(const KValue& o) const { return {first + o.first, second + o.second}; }
  KValue operator-(const KValue& o) const { return {first - o.first, second - o.second}; }
  KValue operator*(const KValue& o) const { return {first * o.first, second * o.second}; }
  bool operator==(const KValue&) const = default;
};

using SolFunction = std::function<KValue(const SolElement&)>;

// sum_i beta(c_i) (alpha(c_{i+1}) - alpha(c_{i-1})), indices mod L.
KValue stokes_integral(const std::vector<SolElement>& cycle, const SolFunction& beta, const SolFunction& alpha);
KValue stokes_integral(const ClosedPath& path, const SolFunction& beta, const SolFunction& alpha);

enum class IntegrandVariant { real, ultrametric };

struct Integrands {
  IntegrandVariant variant;
  SolFunction alpha;                         // A(x)
  SolFunction beta;                          // B(y)
  std::function<Rational(const KValue&)> norm;
};

// real: A(x) = |x|_1, B(y) = max(0, 1 - |y|_2), real valued.
// ultrametric: A(x) = (x, 0), B(y) = (1, 1 - y) if |y|_2 < 1 else 0, valued
// in K1 x K2 with the max norm. Requires a non-archimedean K2; throws
// VariantUnavailable otherwise.
Integrands standard_integrands(const SolModel& m, IntegrandVariant v);

// gamma_{1,n} = t^n x t^-n y t^n x^-1 t^-n y^-1,
// gamma_{k,n} = gamma_{k-1,n} g_k gamma_{k-1,n}^-1 g_k^-1.
Word gamma_word(int k, int n);
ClosedPath gamma_path(const SolModel& m, int k, int n);

struct GammaCheck {
  std::size_t length = 0;
  KValue computed;
  Rational computed_norm;
  Rational predicted;  // |2 A(l1^n)|
  bool equal = false;
};

GammaCheck gamma_integral_check(const SolModel& m, int k, int n, IntegrandVariant v);

// Word-metric ball of radius r around e for generators x, y, t.
std::vector<SolElement> word_ball(const SolModel& m, int radius);

// Upper bound for |integral over any triangle (g, g h, g h')| with h, h' in
// the ball of radius r: max |y_h|^mu |x_h'| + |y_h'|^mu |x_h|.
Rational triangle_bound(const SolModel& m, int radius);

struct LowerBoundRow {
  int n = 0;
  Rational value;                        // |2 A(l1^n)|
  std::optional<Rational> area_lower_bound;  // value / C(R0) for the real variant
  bool exceeds_triangle_bound = false;
};

struct LowerBoundTable {
  IntegrandVariant variant = IntegrandVariant::real;
  int k = 1;
  int relator_radius = 4;
  Rational triangle_bound;
  std::vector<LowerBoundRow> rows;
  bool asymptotically_infinite_area = false;
};

// Uses the ultrametric integrands when both K1 and K2 are non-archimedean,
// the real ones otherwise.
LowerBoundTable lower_bound_table(const SolModel& m, int k, int n_max, int relator_radius = 4);

}  // namespace dehn
