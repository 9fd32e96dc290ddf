#include "dehn/laurent.hpp"

namespace dehn {

LaurentPoly LaurentPoly::monomial(const Rational& c, long k) {
  LaurentPoly p;
  p.add(k, c);
  return p;
}

void LaurentPoly::add(long k, const Rational& c) {
  if (c == 0) return;
  Rational& slot = coeffs_[k];
  slot += c;
  if (slot == 0) coeffs_.erase(k);
}

Rational LaurentPoly::coefficient(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, c] : o.coeffs_) r.add(k, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o * Rational(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [a, x] : coeffs_)
    for (const auto& [b, y] : o.coeffs_) r.add(a + b, x * y);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
  LaurentPoly r;
  for (const auto& [k, c] : coeffs_) r.add(k, c * s);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "(" + dehn::to_string(c) + ")t^" + std::to_string(k);
  }
  return s;
}

Rational hc1_pairing(const LaurentPoly& p, const LaurentPoly& q) {
  Rational s = 0;
  for (const auto& [k, c] : p.coefficients()) s += k * c * q.coefficient(-k);
  return s;
}

}  // namespace dehn
