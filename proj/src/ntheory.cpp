#include "formhasse/ntheory.hpp"

#include <algorithm>

namespace formhasse {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  Int r;
  Int aa(static_cast<unsigned long>(a)), mm(static_cast<unsigned long>(m));
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw Error("inv_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return r.get_ui();
}

std::uint64_t reduce_mod(const Int& a, std::uint64_t m) {
  Int mm(static_cast<unsigned long>(m));
  Int r = a % mm;
  if (r < 0) r += mm;
  return r.get_ui();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are deterministic below 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1)
    throw Error("sqrt_mod: " + std::to_string(a) + " is not a square mod " + std::to_string(p));
  if (p % 4 == 3) {
    const std::uint64_t r = pow_mod(a, (p + 1) / 4, p);
    return std::min(r, p - r);
  }

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of the odd
// composite n or 0 on failure.
Int pollard_rho(const Int& n) {
  for (unsigned long c = 1; c < 64; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Int& v) -> Int { return Int((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Int diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
      if (r > (1UL << 26)) break;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split_cofactor(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int root;
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned long k = 2; k < 64; ++k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Int, unsigned> sub;
        split_cofactor(root, sub);
        for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  Int d = pollard_rho(n);
  if (d == 0) throw Error("factor: unable to split cofactor " + n.get_str());
  split_cofactor(d, out);
  split_cofactor(Int(n / d), out);
}

}  // namespace

std::map<Int, unsigned> factor(const Int& n, std::int64_t bound) {
  if (n == 0) throw Error("factor: zero has no factorization");
  std::map<Int, unsigned> out;
  Int m = abs(n);
  auto strip = [&](unsigned long p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) return;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    out[Int(p)] = e;
  };
  strip(2);
  for (unsigned long p = 3; static_cast<std::int64_t>(p) <= bound; p += 2) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    strip(p);
  }
  if (m != 1) split_cofactor(m, out);
  return out;
}

std::vector<Int> prime_divisors(const Int& n, std::int64_t bound) {
  std::vector<Int> out;
  for (const auto& [p, e] : factor(n, bound)) out.push_back(p);
  return out;
}

Int squarefree_part(const Int& n, std::int64_t bound) {
  if (n == 0) throw Error("squarefree_part: zero");
  Int s = sign(n);
  for (const auto& [p, e] : factor(n, bound))
    if (e % 2 == 1) s *= p;
  return s;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error("valuation: zero");
  Int m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const Rat& r, const Int& p) {
  return static_cast<long>(valuation(r.get_num(), p)) - static_cast<long>(valuation(r.get_den(), p));
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_square(const Rat& r) { return is_square(r.get_num()) && is_square(r.get_den()); }

Rat rational_sqrt(const Rat& r) {
  if (!is_square(r)) throw Error("rational_sqrt: " + r.get_str() + " is not a rational square");
  Int a, b;
  mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
  return Rat(a, b);
}

int sign(const Int& n) { return sgn(n); }
int sign(const Rat& r) { return sgn(r); }

std::int64_t to_i64(const Int& n) {
  if (!n.fits_slong_p()) throw Error("integer out of 64-bit range: " + n.get_str());
  return n.get_si();
}

}  // namespace formhasse
