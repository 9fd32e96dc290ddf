#pragma once

#include <map>
#include <string>

#include "dehn/rational.hpp"

namespace dehn {

// Finite sum of c_k t^k over Q, k in Z. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(const Rational& c, long k);

  const std::map<long, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(long k) const;
  bool is_zero() const { return coeffs_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& s) const;
  bool operator==(const LaurentPoly& o) const = default;

  std::string to_string() const;

 private:
  void add(long k, const Rational& c);
  std::map<long, Rational> coeffs_;
};

// Antisymmetric pairing f(P ^ Q) = sum_k k p_k q_{-k}.
Rational hc1_pairing(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace dehn
