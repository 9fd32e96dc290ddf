#pragma once
#include <random>
#include <vector>

#include "dehn/stokes.hpp"

namespace dehn::testkit {

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().kind == l.kind && out.back().index == l.index && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), kind(0, 2), sign(0, 1);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back({static_cast<Letter::Kind>(kind(rng)), sign(rng) ? 1 : -1, 0});
  return w;
}

// Relators of the group with l1 = l2 = 2: [x, y], t x t^-1 x^-2, t^-1 y t y^-2, gamma_{1,2}.
// With l1 = l2 = 1/2 the roles of t and t^-1 swap (s = -1).
inline Word random_relator(std::mt19937& rng, int s = 1) {
  using K = Letter::Kind;
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0:
      return {{K::x, 1, 0}, {K::y, 1, 0}, {K::x, -1, 0}, {K::y, -1, 0}};
    case 1:
      return {{K::t, s, 0}, {K::x, 1, 0}, {K::t, -s, 0}, {K::x, -1, 0}, {K::x, -1, 0}};
    case 2:
      return {{K::t, -s, 0}, {K::y, 1, 0}, {K::t, s, 0}, {K::y, -1, 0}, {K::y, -1, 0}};
    default:
      return gamma_word(1, 2);
  }
}

inline SolElement word_value(const SolModel& m, const Word& w) {
  SolElement e;
  for (const auto& l : w) e = multiply(m, e, letter_element(m, l));
  return e;
}

inline std::vector<SolElement> translate(const SolModel& m, const SolElement& g, const std::vector<SolElement>& c) {
  std::vector<SolElement> out;
  for (const auto& v : c) out.push_back(multiply(m, g, v));
  return out;
}

inline KValue integral(const SolModel& m, const Word& w, const Integrands& in) {
  return stokes_integral(ClosedPath::from_word(m, w), in.beta, in.alpha);
}

struct PathCalculusResult {
  int antisymmetry = 0;
  int concatenation = 0;
  int filiform = 0;
  int product = 0;
  int conjugation = 0;
  int stokes = 0;
  int trials = 0;
};

// Counts, per identity, how many random trials satisfied it exactly.
inline PathCalculusResult check_path_calculus(const SolModel& m, const Integrands& in, int trials, unsigned seed,
                                               int s = 1) {
  PathCalculusResult res;
  std::mt19937 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    ++res.trials;
    Word r1 = random_relator(rng, s), r2 = random_relator(rng, s);
    Word g1 = random_word(rng, 5), g2 = random_word(rng, 5);
    Word c1 = concat(concat(g1, r1), inverse(g1));
    Word c2 = concat(concat(g2, r2), inverse(g2));
    Word rel = concat(c1, c2);
    Word reduced = free_reduce(rel);
    KValue i1 = integral(m, c1, in), i2 = integral(m, c2, in);

    auto path = ClosedPath::from_word(m, rel);
    if (stokes_integral(path, in.beta, in.alpha) == KValue{} - stokes_integral(path, in.alpha, in.beta))
      ++res.antisymmetry;

    if (integral(m, rel, in) == i1 + i2) ++res.concatenation;

    Word w = random_word(rng, 8);
    w.push_back({Letter::Kind::t, 1, 0});
    if (integral(m, concat(w, inverse(w)), in) == KValue{}) ++res.filiform;

    if (integral(m, reduced, in) == i1 + i2) ++res.product;

    KValue conj1 = stokes_integral(translate(m, word_value(m, g1), ClosedPath::from_word(m, r1).vertices()),
                                   in.beta, in.alpha);
    if (integral(m, free_reduce(c1), in) == conj1) ++res.conjugation;

    KValue conj2 = stokes_integral(translate(m, word_value(m, g2), ClosedPath::from_word(m, r2).vertices()),
                                   in.beta, in.alpha);
    if (integral(m, reduced, in) == conj1 + conj2) ++res.stokes;
  }
  return res;
}

}  // namespace dehn::testkit
