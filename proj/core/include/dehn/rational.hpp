#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dehn {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else or q == 0.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd 1.
std::string to_string(const Rational& q);

Rational pow(const Rational& base, long exponent);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
void axpy(Vector& y, const Rational& a, const Vector& x);
Rational dot(const Vector& a, const Vector& b);

std::string to_string(const Vector& v);

}  // namespace dehn
