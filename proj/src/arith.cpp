#include "quadtor/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>

#include "quadtor/errors.hpp"

namespace quadtor {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          Integer diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        Integer diff = x - ys;
        Integer ad = abs(diff);
        mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> half;
    factor_large(root, half);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  Integer f = pollard_brent(n);
  factor_large(f, out);
  factor_large(Integer(n / f), out);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char ch) { return std::isdigit(ch) != 0; });
  };
  auto to_int = [](const std::string& s) { return Integer(s[0] == '+' ? s.substr(1) : s, 10); };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(text)) throw DomainError("not a rational number: '" + text + "'");
    return Rational(to_int(text));
  }
  const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw DomainError("not a rational number: '" + text + "'");
  return make_rational(to_int(num), to_int(den));
}

std::string to_string(const Integer& n) { return n.get_str(10); }
std::string to_string(const Rational& q) { return q.get_str(10); }

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("factor_integer: zero has no factorization");
  Integer rest = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(Integer(p), e);
  }
  if (rest > 1) {
    std::map<Integer, unsigned> big;
    if (rest <= Integer(kTrialLimit) * kTrialLimit)
      big[rest] = 1;  // no factor below its square root
    else
      factor_large(rest, big);
    for (auto& [p, e] : big) out.emplace_back(p, e);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) throw DomainError("is_squarefree: zero");
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return true;
}

namespace {

// Squarefree part s of n != 0 (with sign) and c > 0 with n = s * c^2.
std::pair<Integer, Integer> squarefree_part(const Integer& n) {
  Integer s = sgn(n) < 0 ? -1 : 1, c = 1;
  for (const auto& [p, e] : factor_integer(n)) {
    if (e % 2 == 1) s *= p;
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e / 2);
    c *= pw;
  }
  return {s, c};
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const Rational& q) {
  if (sgn(q) == 0) throw DomainError("squarefree_decompose: zero radicand");
  // num/den = num*den / den^2
  const Integer prod = q.get_num() * q.get_den();
  auto [d, c] = squarefree_part(prod);
  return {d, make_rational(c, q.get_den())};
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

SquarefreeD::SquarefreeD(const Integer& value) : value_(value) {
  if (value == 0 || value == 1) throw DomainError("D must differ from 0 and 1, got " + to_string(value));
  if (!is_squarefree(value)) throw DomainError("D must be squarefree, got " + to_string(value));
}

std::optional<SquarefreeD> SquarefreeD::of_radicand(const Rational& q) {
  const auto dec = squarefree_decompose(q);
  if (dec.d == 1) return std::nullopt;
  return SquarefreeD(dec.d, Trusted{});
}

long SquarefreeD::to_long() const {
  if (!value_.fits_slong_p()) throw DomainError("D does not fit a machine integer: " + to_string(value_));
  return value_.get_si();
}

std::string to_string(const SquarefreeD& d) { return to_string(d.value()); }

}  // namespace quadtor
