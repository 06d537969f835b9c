#include "quadtor/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "quadtor/errors.hpp"

namespace quadtor {

namespace {

// ---------------------------------------------------------------- F_p[x]

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using PPoly = std::vector<u64>;  // low degree first, trimmed

struct Fp {
  u64 p;

  u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p); }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  PPoly reduce(const std::vector<Integer>& f) const {
    PPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    trim(out);
    return out;
  }

  PPoly mul(const PPoly& a, const PPoly& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        acc[i + j] += (u128)a[i] * b[j];
        if (acc[i + j] >= ((u128)1 << 120)) acc[i + j] %= p;
      }
    PPoly out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<u64>(acc[i] % p);
    trim(out);
    return out;
  }

  PPoly sub(PPoly a, const PPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }

  // a = q b + r
  std::pair<PPoly, PPoly> divrem(PPoly a, const PPoly& b) const {
    if (b.empty()) throw DomainError("F_p polynomial division by zero");
    if (a.size() < b.size()) return {PPoly{}, a};
    const u64 inv_lc = inv(b.back());
    PPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      const u64 c = mul(a[k + b.size() - 1], inv_lc);
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = sub(a[k + j], mul(c, b[j]));
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }

  PPoly rem(const PPoly& a, const PPoly& b) const { return divrem(a, b).second; }

  PPoly monic(PPoly a) const {
    if (a.empty()) return a;
    const u64 inv_lc = inv(a.back());
    for (auto& c : a) c = mul(c, inv_lc);
    return a;
  }

  PPoly gcd(PPoly a, PPoly b) const {
    while (!b.empty()) {
      PPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // Returns (g, s, t) with s a + t b = g monic, deg s < deg b, deg t < deg a.
  void ext_gcd(const PPoly& a, const PPoly& b, PPoly& g, PPoly& s, PPoly& t) const {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divrem(r0, r1);
      PPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 inv_lc = inv(r0.back());
    for (auto* v : {&r0, &s0, &t0})
      for (auto& c : *v) c = mul(c, inv_lc);
    g = r0;
    s = s0;
    t = t0;
  }

  PPoly derivative(const PPoly& a) const {
    PPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(a[i], i % p));
    trim(out);
    return out;
  }

  u64 eval(const PPoly& a, u64 x) const {
    u64 acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
  }

  // base^e mod m
  PPoly powmod(PPoly base, u128 e, const PPoly& m) const {
    PPoly r{1};
    r = rem(r, m);
    base = rem(base, m);
    while (e) {
      if (e & 1) r = rem(mul(r, base), m);
      e >>= 1;
      if (e) base = rem(mul(base, base), m);
    }
    return r;
  }
};

// Splits a monic product of distinct irreducible quadratics over F_p (p odd).
void split_quadratics(const Fp& F, const PPoly& g, std::mt19937_64& rng, std::vector<PPoly>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 3) {
    out.push_back(g);
    return;
  }
  const u128 e = ((u128)F.p * F.p - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  for (;;) {
    PPoly a(g.size() - 1);
    for (auto& c : a) c = coef(rng);
    Fp::trim(a);
    if (a.size() < 2) continue;
    PPoly b = F.powmod(a, e, g);
    b = F.sub(b, PPoly{1});
    PPoly h = F.gcd(g, b);
    if (h.size() > 1 && h.size() < g.size()) {
      split_quadratics(F, h, rng, out);
      split_quadratics(F, F.monic(F.divrem(g, h).first), rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------- Z[x] mod M

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zmod(ZPoly& a, const Integer& M) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  ztrim(a);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& M) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  zmod(out, M);
  return out;
}

ZPoly zadd(ZPoly a, const ZPoly& b, const Integer& M) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  zmod(a, M);
  return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b, const Integer& M) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zmod(a, M);
  return a;
}

// a = q b + r with b monic
std::pair<ZPoly, ZPoly> zdivrem_monic(ZPoly a, const ZPoly& b, const Integer& M) {
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = a[k + b.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[k] = c;
  }
  a.resize(b.size() - 1);
  zmod(a, M);
  zmod(q, M);
  return {q, a};
}

ZPoly lift(const PPoly& a) {
  ZPoly out;
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic  ->  same mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivrem_monic(zmul(s, e, m2), h, m2);
  ZPoly g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZPoly h2 = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = zdivrem_monic(zmul(s, b, m2), h2, m2);
  s = zsub(s, d, m2);
  t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

Integer symmetric(const Integer& c, const Integer& M) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  if (2 * r > M) r -= M;
  return r;
}

UniPoly to_unipoly(const ZPoly& a) {
  std::vector<Rational> v;
  for (const auto& c : a) v.emplace_back(c);
  return UniPoly(std::move(v));
}

bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool divides(const UniPoly& g, const UniPoly& f) { return divmod(f, g).second.is_zero(); }

bool irreducible_quadratic(const UniPoly& q) {
  const Rational disc = q[1] * q[1] - 4 * q[0] * q[2];
  return !rational_sqrt(disc).has_value();
}

// Small factors of a squarefree, content-free integer polynomial of degree >= 3.
std::vector<UniPoly> small_factors_squarefree(const ZPoly& f, int dmax) {
  const unsigned long p = detail::choose_factoring_prime(f);
  const Fp F{p};
  const PPoly fp = F.reduce(f);
  const PPoly fp_monic = F.monic(fp);

  std::vector<PPoly> modular;  // monic factors of degree 1 and 2
  PPoly rest = fp_monic;
  for (u64 r = 0; r < p; ++r)
    if (F.eval(fp, r) == 0) {
      modular.push_back(PPoly{F.sub(0, r), 1});
      rest = F.divrem(rest, modular.back()).first;
    }
  const std::size_t n_linear = modular.size();
  if (dmax >= 2 && rest.size() > 3) {
    PPoly xp2 = F.powmod(PPoly{0, 1}, (u128)p * p, rest);
    PPoly quad_part = F.gcd(rest, F.sub(xp2, PPoly{0, 1}));
    std::mt19937_64 rng(p);
    split_quadratics(F, quad_part, rng, modular);
  } else if (dmax >= 2 && rest.size() == 3) {
    modular.push_back(rest);
  }
  if (modular.empty()) return {};

  // Precision: lc(f)-scaled factors of degree <= 2 have coefficients <= 2 |lc f| ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  const Integer lc = f.back();
  const Integer bound = 2 * abs(lc) * norm;
  const Integer target = 2 * bound + 1;

  std::vector<ZPoly> lifted;
  Integer M;
  for (const PPoly& u : modular) {
    const PPoly v = F.divrem(fp, u).first;
    PPoly gcd, s, t;
    F.ext_gcd(v, u, gcd, s, t);  // s v + t u = 1
    ZPoly g = lift(v), h = lift(u), zs = lift(s), zt = lift(t);
    Integer m = p;
    while (m < target) {
      m *= m;
      hensel_step(f, g, h, zs, zt, m);
    }
    M = m;
    lifted.push_back(h);
  }

  const UniPoly fq = to_unipoly(f);
  auto candidate = [&](const ZPoly& monic_mod_M) {
    ZPoly c = zmul(monic_mod_M, ZPoly{lc}, M);
    c.resize(monic_mod_M.size(), Integer(0));
    for (auto& x : c) x = symmetric(x, M);
    return to_unipoly(c).monic();
  };

  std::vector<UniPoly> found;
  for (std::size_t i = 0; i < n_linear; ++i) {
    UniPoly g = candidate(lifted[i]);
    if (g.degree() == 1 && divides(g, fq)) found.push_back(g);
  }
  if (dmax >= 2) {
    for (std::size_t i = 0; i < n_linear; ++i)
      for (std::size_t j = i + 1; j < n_linear; ++j) {
        UniPoly g = candidate(zmul(lifted[i], lifted[j], M));
        if (g.degree() == 2 && irreducible_quadratic(g) && divides(g, fq)) found.push_back(g);
      }
    for (std::size_t i = n_linear; i < lifted.size(); ++i) {
      UniPoly g = candidate(lifted[i]);
      if (g.degree() == 2 && irreducible_quadratic(g) && divides(g, fq)) found.push_back(g);
    }
  }
  return found;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

namespace detail {

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() <= 0) return f.monic();
  const UniPoly g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

unsigned long choose_factoring_prime(const std::vector<Integer>& f) {
  for (unsigned long p = 101;; p += 2) {
    if (!is_prime_ul(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    const Fp F{p};
    const PPoly fp = F.reduce(f);
    if (F.gcd(fp, F.derivative(fp)).size() == 1) return p;
  }
}

}  // namespace detail

std::vector<UniPoly> small_factors(const UniPoly& f, int dmax) {
  if (f.is_zero()) throw DomainError("small_factors: zero polynomial");
  if (dmax != 1 && dmax != 2) throw DomainError("small_factors: dmax must be 1 or 2");
  if (f.degree() == 0) return {};

  // Squarefree test modulo a few primes before falling back to a rational gcd.
  ZPoly zf = primitive_integer_part(f);
  bool squarefree = false;
  {
    int tried = 0;
    for (unsigned long p = 101; tried < 8; p += 2) {
      if (!is_prime_ul(p) || mpz_divisible_ui_p(zf.back().get_mpz_t(), p)) continue;
      ++tried;
      const Fp F{p};
      const PPoly fp = F.reduce(zf);
      if (F.gcd(fp, F.derivative(fp)).size() == 1) {
        squarefree = true;
        break;
      }
    }
  }
  const UniPoly sf = squarefree ? f.monic() : detail::squarefree_part(f);
  const ZPoly zsf = primitive_integer_part(sf);

  std::vector<UniPoly> distinct;
  if (sf.degree() == 1) {
    distinct.push_back(sf);
  } else if (sf.degree() == 2) {
    const Rational disc = sf[1] * sf[1] - 4 * sf[0];
    if (auto s = rational_sqrt(disc)) {
      distinct.push_back(UniPoly(std::vector<Rational>{Rational((sf[1] - *s) / 2), Rational(1)}));
      distinct.push_back(UniPoly(std::vector<Rational>{Rational((sf[1] + *s) / 2), Rational(1)}));
    } else if (dmax >= 2) {
      distinct.push_back(sf);
    }
  } else {
    distinct = small_factors_squarefree(zsf, dmax);
  }

  std::vector<UniPoly> out;
  for (const UniPoly& g : distinct) {
    if (g.degree() > dmax) continue;
    UniPoly rest = f;
    for (;;) {
      auto [q, r] = divmod(rest, g);
      if (!r.is_zero()) break;
      out.push_back(g);
      rest = std::move(q);
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace quadtor
