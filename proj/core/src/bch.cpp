#include "dehn/bch.hpp"

#include <mutex>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

Rational factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

void dynkin_sequences(std::size_t budget, std::size_t count, LieWord& word, Rational weight,
                      std::map<LieWord, Rational>& out) {
  if (count > 0) {
    std::size_t m = word.size();
    bool vanishes = m >= 2 && word[m - 1] == word[m - 2];
    if (!vanishes) {
      Rational c = weight / Rational(static_cast<long>(count)) / Rational(static_cast<long>(m));
      if (count % 2 == 0) c = -c;
      Rational& slot = out[word];
      slot += c;
    }
  }
  for (std::size_t r = 0; r <= budget; ++r)
    for (std::size_t s = 0; r + s <= budget; ++s) {
      if (r + s == 0) continue;
      std::size_t before = word.size();
      word.insert(word.end(), r, 0);
      word.insert(word.end(), s, 1);
      dynkin_sequences(budget - r - s, count + 1, word, weight / (factorial(r) * factorial(s)), out);
      word.resize(before);
    }
}

Vector nested_bracket(const GradedLieAlgebra& g, const LieWord& word, const Vector& x, const Vector& y) {
  Vector v = word.back() == 0 ? x : y;
  for (std::size_t k = word.size() - 1; k-- > 0;) {
    v = g.bracket(word[k] == 0 ? x : y, v);
    if (is_zero(v)) break;
  }
  return v;
}

}  // namespace

const std::map<LieWord, Rational>& dynkin_terms(std::size_t max_length) {
  static std::mutex mu;
  static std::map<std::size_t, std::map<LieWord, Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_length);
  if (it != cache.end()) return it->second;
  std::map<LieWord, Rational> raw;
  LieWord word;
  dynkin_sequences(max_length, 0, word, Rational(1), raw);
  std::map<LieWord, Rational> terms;
  for (auto& [w, c] : raw)
    if (c != 0) terms.emplace(w, c);
  return cache.emplace(max_length, std::move(terms)).first->second;
}

Vector bch_product(const GradedLieAlgebra& g, const Vector& x, const Vector& y, std::size_t degree) {
  Vector out = zero_vector(g.dim());
  if (degree == 0) return out;
  for (const auto& [word, c] : dynkin_terms(degree)) {
    Vector v = nested_bracket(g, word, x, y);
    axpy(out, c, v);
  }
  return out;
}

Vector bch_product(const GradedLieAlgebra& g, const Vector& x, const Vector& y) {
  return bch_product(g, x, y, std::max<std::size_t>(nilpotency_length(g), 1));
}

Vector group_commutator(const GradedLieAlgebra& g, const Vector& x, const Vector& y) {
  std::size_t s = std::max<std::size_t>(nilpotency_length(g), 1);
  Vector a = bch_product(g, -x, -y, s);
  Vector b = bch_product(g, a, x, s);
  return bch_product(g, b, y, s);
}

Vector iterated_commutator(const GradedLieAlgebra& g, const std::vector<Vector>& xs) {
  if (xs.empty()) throw InvalidInput("iterated commutator of nothing");
  Vector v = xs.back();
  for (std::size_t k = xs.size() - 1; k-- > 0;) v = group_commutator(g, xs[k], v);
  return v;
}

Vector iterated_bracket(const GradedLieAlgebra& g, const std::vector<Vector>& xs) {
  if (xs.empty()) throw InvalidInput("iterated bracket of nothing");
  Vector v = xs.back();
  for (std::size_t k = xs.size() - 1; k-- > 0;) v = g.bracket(xs[k], v);
  return v;
}

bool verify_multicom(const GradedLieAlgebra& g, const std::vector<Vector>& xs) {
  std::size_t s = nilpotency_length(g);
  if (s > xs.size())
    throw InvalidInput("algebra has nilpotency length " + std::to_string(s) + ", more than the " +
                       std::to_string(xs.size()) + " inputs");
  return iterated_commutator(g, xs) == iterated_bracket(g, xs);
}

RationalMatrix nilpotent_exp(const RationalMatrix& x) {
  std::size_t n = x.rows();
  RationalMatrix sum = RationalMatrix::identity(n);
  RationalMatrix term = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * x * Rational(1, static_cast<unsigned long>(k));
    if (term.is_zero()) break;
    sum = sum + term;
  }
  if (!(term * x).is_zero() && !term.is_zero()) throw InvalidInput("matrix is not nilpotent");
  return sum;
}

RationalMatrix unipotent_log(const RationalMatrix& u) {
  std::size_t n = u.rows();
  RationalMatrix nil = u - RationalMatrix::identity(n);
  RationalMatrix sum(n, n);
  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    Rational c(1, static_cast<unsigned long>(k));
    if (k % 2 == 0) c = -c;
    sum = sum + power * c;
  }
  if (!(power * nil).is_zero() && !power.is_zero()) throw InvalidInput("matrix is not unipotent");
  return sum;
}

RationalMatrix unipotent_matrix_oracle(const RationalMatrix& x, const RationalMatrix& y) {
  return unipotent_log(nilpotent_exp(x) * nilpotent_exp(y));
}

RationalMatrix MatrixRealization::to_matrix(const Vector& v) const {
  if (v.size() != images.size()) throw InvalidInput("vector length does not match realization");
  if (images.empty()) return {};
  RationalMatrix m(images.front().rows(), images.front().cols());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m = m + images[i] * v[i];
  return m;
}

Vector MatrixRealization::to_vector(const RationalMatrix& m) const {
  std::size_t cells = m.rows() * m.cols();
  RationalMatrix a(cells, images.size());
  Vector b(cells);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::size_t row = r * m.cols() + c;
      b[row] = m(r, c);
      for (std::size_t i = 0; i < images.size(); ++i) a(row, i) = images[i](r, c);
    }
  auto x = solve(a, b);
  if (!x) throw InvalidInput("matrix is outside the realized algebra");
  return *x;
}

}  // namespace dehn
