#include "dehn/stokes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dehn/errors.hpp"

namespace dehn {

NormModel NormModel::real() { return {FieldKind::archimedean, 0}; }

NormModel NormModel::padic(long p) {
  if (p < 2) throw InvalidInput("p-adic norm needs a prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInput(std::to_string(p) + " is not prime");
  return {FieldKind::non_archimedean, p};
}

long padic_valuation(const Rational& q, long p) {
  if (q == 0) throw InvalidInput("valuation of zero");
  mpz_class prime(p), rest;
  long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), q.get_num_mpz_t(), prime.get_mpz_t()));
  v -= static_cast<long>(mpz_remove(rest.get_mpz_t(), q.get_den_mpz_t(), prime.get_mpz_t()));
  return v;
}

Rational NormModel::abs(const Rational& q) const {
  if (archimedean()) return ::abs(q);
  if (q == 0) return 0;
  return pow(Rational(prime), -padic_valuation(q, prime));
}

std::string NormModel::to_string() const { return archimedean() ? "R" : "Q_" + std::to_string(prime); }

namespace {

using Factorization = std::map<mpz_class, long>;

void factor_into(mpz_class n, long sign, Factorization& out) {
  for (mpz_class d = 2; d * d <= n && d <= 100000; ++d)
    while (n % d == 0) {
      out[d] += sign;
      n /= d;
    }
  if (n > 1) out[n] += sign;
}

Factorization factor(const Rational& q) {
  Factorization f;
  factor_into(q.get_num(), 1, f);
  factor_into(q.get_den(), -1, f);
  for (auto it = f.begin(); it != f.end();)
    it = it->second == 0 ? f.erase(it) : std::next(it);
  return f;
}

// mu = a / b when l1^b = l2^a.
std::optional<Rational> commensurable_exponent(const Rational& a1, const Rational& a2) {
  Factorization f1 = factor(a1), f2 = factor(a2);
  if (f1.size() != f2.size()) return std::nullopt;
  std::optional<Rational> ratio;
  for (const auto& [p, e] : f1) {
    auto it = f2.find(p);
    if (it == f2.end()) return std::nullopt;
    Rational r(e, it->second);
    r.canonicalize();
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

bool pow_le(const Rational& a, long ea, const Rational& b, long eb) { return pow(a, ea) <= pow(b, eb); }

std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) != 0) return r;
  return std::nullopt;
}

// Smallest dyadic-refined u with u^b >= s^a, exact when the root is rational.
Rational rational_pow_upper(const Rational& s, const Rational& e) {
  if (s == 0) return 0;
  long a = e.get_num().get_si(), b = e.get_den().get_si();
  Rational target = pow(s, a);
  auto num = exact_root(target.get_num(), static_cast<unsigned long>(b));
  auto den = exact_root(target.get_den(), static_cast<unsigned long>(b));
  if (num && den) {
    Rational r(*num, *den);
    r.canonicalize();
    return r;
  }
  Rational lo = 0, hi = s >= 1 ? s : Rational(1);
  for (int it = 0; it < 64; ++it) {
    Rational mid = (lo + hi) / 2;
    if (pow(mid, b) >= target) hi = mid;
    else lo = mid;
  }
  return hi;
}

}  // namespace

SolModel::SolModel(NormModel k1, NormModel k2, Rational l1, Rational l2)
    : k1_(k1), k2_(k2), l1_(std::move(l1)), l2_(std::move(l2)) {
  Rational a1 = k1_.abs(l1_), a2 = k2_.abs(l2_);
  if (a1 <= 1) throw InvalidInput("need |l1| > 1, got |" + to_string(l1_) + "| = " + to_string(a1));
  if (a2 < a1)
    throw InvalidInput("need |l2| >= |l1|, got " + to_string(a2) + " < " + to_string(a1));
  if (auto mu = commensurable_exponent(a1, a2)) {
    mu_.exact = *mu;
    mu_.lower = mu_.upper = *mu;
    return;
  }
  mu_.lower = 0;
  mu_.upper = 1;
  for (long q = 1; q <= 64; ++q) {
    long p = 0;
    while (!pow_le(a1, q, a2, p)) ++p;
    Rational up(p, q), low(p - 1, q);
    up.canonicalize();
    low.canonicalize();
    if (up < mu_.upper) mu_.upper = up;
    if (low > mu_.lower) mu_.lower = low;
  }
}

Rational SolModel::pow_mu_upper(const Rational& s) const {
  if (s < 0) throw InvalidInput("negative base");
  if (s == 0) return 0;
  if (mu_.exact) return rational_pow_upper(s, *mu_.exact);
  return rational_pow_upper(s, s >= 1 ? mu_.upper : mu_.lower);
}

bool SolElement::operator<(const SolElement& o) const {
  if (n != o.n) return n < o.n;
  if (x != o.x) return x < o.x;
  return y < o.y;
}

SolElement multiply(const SolModel& m, const SolElement& a, const SolElement& b) {
  return {a.x + pow(m.l1(), a.n) * b.x, a.y + pow(m.l2(), -a.n) * b.y, a.n + b.n};
}

SolElement inverse(const SolModel& m, const SolElement& a) {
  return {-pow(m.l1(), -a.n) * a.x, -pow(m.l2(), a.n) * a.y, -a.n};
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

std::string to_string(const Word& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    switch (l.kind) {
      case Letter::Kind::x: s += "x"; break;
      case Letter::Kind::y: s += "y"; break;
      case Letter::Kind::t: s += "t"; break;
      case Letter::Kind::g: s += "g" + std::to_string(l.index); break;
    }
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

Rational g_step(const SolModel& m, int k) {
  if (m.k2().archimedean()) return 1;
  return pow(m.l2(), k);
}

SolElement letter_element(const SolModel& m, const Letter& l) {
  if (l.exponent != 1 && l.exponent != -1) throw InvalidInput("letter exponent must be +1 or -1");
  Rational e = l.exponent;
  switch (l.kind) {
    case Letter::Kind::x: return {e, 0, 0};
    case Letter::Kind::y: return {0, e, 0};
    case Letter::Kind::t: return {0, 0, l.exponent};
    case Letter::Kind::g: return {0, e * g_step(m, l.index), 0};
  }
  throw InvalidInput("unknown letter");
}

ClosedPath ClosedPath::from_word(const SolModel& m, const Word& w) {
  ClosedPath p;
  SolElement c;
  for (const auto& l : w) {
    p.vertices_.push_back(c);
    c = multiply(m, c, letter_element(m, l));
  }
  if (!(c == SolElement{})) throw InvalidInput("word does not represent a closed path");
  return p;
}

ClosedPath ClosedPath::from_vertices(std::vector<SolElement> vertices) {
  ClosedPath p;
  p.vertices_ = std::move(vertices);
  return p;
}

KValue stokes_integral(const std::vector<SolElement>& cycle, const SolFunction& beta, const SolFunction& alpha) {
  std::size_t len = cycle.size();
  KValue sum;
  if (len == 0) return sum;
  std::vector<KValue> a(len), b(len);
  for (std::size_t i = 0; i < len; ++i) {
    a[i] = alpha(cycle[i]);
    b[i] = beta(cycle[i]);
  }
  for (std::size_t i = 0; i < len; ++i) sum = sum + b[i] * (a[(i + 1) % len] - a[(i + len - 1) % len]);
  return sum;
}

KValue stokes_integral(const ClosedPath& path, const SolFunction& beta, const SolFunction& alpha) {
  return stokes_integral(path.vertices(), beta, alpha);
}

Integrands standard_integrands(const SolModel& m, IntegrandVariant v) {
  NormModel k1 = m.k1(), k2 = m.k2();
  if (v == IntegrandVariant::real) {
    return {v,
            [k1](const SolElement& c) { return KValue{k1.abs(c.x), 0}; },
            [k2](const SolElement& c) {
              Rational b = 1 - k2.abs(c.y);
              return KValue{b > 0 ? b : Rational(0), 0};
            },
            [](const KValue& z) { return Rational(::abs(z.first)); }};
  }
  if (k2.archimedean()) throw VariantUnavailable("ultrametric integrands need a non-archimedean K2");
  return {v,
          [](const SolElement& c) { return KValue{c.x, 0}; },
          [k2](const SolElement& c) {
            if (k2.abs(c.y) < 1) return KValue{1, 1 - c.y};
            return KValue{0, 0};
          },
          [k1, k2](const KValue& z) { return std::max(k1.abs(z.first), k2.abs(z.second)); }};
}

Word gamma_word(int k, int n) {
  if (k < 1 || n < 0) throw InvalidInput("gamma needs k >= 1 and n >= 0");
  using K = Letter::Kind;
  Word w;
  auto push_t = [&](int e) {
    for (int i = 0; i < n; ++i) w.push_back({K::t, e, 0});
  };
  push_t(1);
  w.push_back({K::x, 1, 0});
  push_t(-1);
  w.push_back({K::y, 1, 0});
  push_t(1);
  w.push_back({K::x, -1, 0});
  push_t(-1);
  w.push_back({K::y, -1, 0});
  for (int j = 2; j <= k; ++j) {
    Word inv = inverse(w);
    Word next = w;
    next.push_back({K::g, 1, j});
    next.insert(next.end(), inv.begin(), inv.end());
    next.push_back({K::g, -1, j});
    w = std::move(next);
  }
  return w;
}

ClosedPath gamma_path(const SolModel& m, int k, int n) { return ClosedPath::from_word(m, gamma_word(k, n)); }

GammaCheck gamma_integral_check(const SolModel& m, int k, int n, IntegrandVariant v) {
  Integrands in = standard_integrands(m, v);
  ClosedPath path = gamma_path(m, k, n);
  GammaCheck c;
  c.length = path.length();
  c.computed = stokes_integral(path, in.beta, in.alpha);
  c.computed_norm = in.norm(c.computed);
  Rational l1n = pow(m.l1(), n);
  KValue doubled = in.alpha(SolElement{l1n, 0, 0});
  doubled = doubled + doubled;
  c.predicted = in.norm(doubled);
  c.equal = c.computed_norm == c.predicted;
  return c;
}

std::vector<SolElement> word_ball(const SolModel& m, int radius) {
  using K = Letter::Kind;
  std::vector<SolElement> gens;
  for (K kind : {K::x, K::y, K::t})
    for (int e : {1, -1}) gens.push_back(letter_element(m, {kind, e, 0}));
  std::set<SolElement> seen{SolElement{}};
  std::vector<SolElement> frontier{SolElement{}};
  for (int r = 0; r < radius; ++r) {
    std::vector<SolElement> next;
    for (const auto& c : frontier)
      for (const auto& s : gens) {
        SolElement d = multiply(m, c, s);
        if (seen.insert(d).second) next.push_back(d);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Rational triangle_bound(const SolModel& m, int radius) {
  auto ball = word_ball(m, radius);
  std::vector<Rational> ax, by;
  for (const auto& h : ball) {
    ax.push_back(m.k1().abs(h.x));
    by.push_back(m.pow_mu_upper(m.k2().abs(h.y)));
  }
  Rational best = 0;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = 0; j < ball.size(); ++j) {
      Rational c = by[i] * ax[j] + by[j] * ax[i];
      if (c > best) best = c;
    }
  return best;
}

LowerBoundTable lower_bound_table(const SolModel& m, int k, int n_max, int relator_radius) {
  LowerBoundTable t;
  t.variant = (!m.k1().archimedean() && !m.k2().archimedean()) ? IntegrandVariant::ultrametric
                                                               : IntegrandVariant::real;
  t.k = k;
  t.relator_radius = relator_radius;
  t.triangle_bound = triangle_bound(m, relator_radius);
  for (int n = 1; n <= n_max; ++n) {
    GammaCheck c = gamma_integral_check(m, k, n, t.variant);
    LowerBoundRow row;
    row.n = n;
    row.value = c.computed_norm;
    if (t.variant == IntegrandVariant::real && t.triangle_bound > 0)
      row.area_lower_bound = c.computed_norm / t.triangle_bound;
    row.exceeds_triangle_bound = c.computed_norm > t.triangle_bound;
    t.rows.push_back(std::move(row));
  }
  t.asymptotically_infinite_area = t.variant == IntegrandVariant::ultrametric;
  return t;
}

}  // namespace dehn
