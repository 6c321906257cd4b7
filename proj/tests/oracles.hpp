#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// symbol or field code; they only share the Int/Rat aliases.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "formhasse/matrix.hpp"
#include "formhasse/ntheory.hpp"

namespace oracle {

using formhasse::Int;
using formhasse::Rat;

inline bool small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long mod(long a, long m) { return ((a % m) + m) % m; }

// +1 / -1 / 0 by listing the squares mod p
inline int legendre(long a, long p) {
  a = mod(a, p);
  if (a == 0) return 0;
  for (long x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

// (a,b)_p for odd p via primitive solutions of z^2 = a x^2 + b y^2 mod p^3.
// Valid when p^2 divides neither a nor b.
inline int hilbert_odd(long a, long b, long p) {
  const long m = p * p * p;
  std::vector<char> square(static_cast<std::size_t>(m), 0);
  for (long z = 0; z < m; ++z) square[static_cast<std::size_t>(z * z % m)] = 1;
  // a primitive solution has p not dividing x or y: if both were divisible,
  // the right side is 0 mod p^2 and z would be divisible too
  const long am = mod(a, m), bm = mod(b, m);
  for (long x = 0; x < m; ++x) {
    const long ax = am * (x * x % m) % m;
    for (long y = 0; y < m; ++y) {
      if (x % p == 0 && y % p == 0) continue;
      if (square[static_cast<std::size_t>((ax + bm * (y * y % m)) % m)]) return 1;
    }
  }
  return -1;
}

// primitive solution of z^2 = a x^2 + b y^2 mod 2^k
inline bool primitive_solution_mod_2k(long a, long b, int k) {
  const long m = 1L << k;
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y)
      for (long z = 0; z < m; ++z) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        if (mod(a * x * x + b * y * y - z * z, m) == 0) return true;
      }
  return false;
}

inline std::vector<bool> three_square_table(long limit) {
  std::vector<bool> hit(static_cast<std::size_t>(limit + 1), false);
  for (long a = 0; a * a <= limit; ++a)
    for (long b = 0; a * a + b * b <= limit; ++b)
      for (long c = 0; a * a + b * b + c * c <= limit; ++c) hit[static_cast<std::size_t>(a * a + b * b + c * c)] = true;
  return hit;
}

// x^2 + y^2 + z^2 = d w^2 with w != 0 and coordinates in [0, box]
inline bool three_squares_times(long d, long box) {
  for (long w = 1; w <= box; ++w) {
    const long goal = d * w * w;
    for (long x = 0; x <= box && x * x <= goal; ++x)
      for (long y = x; y <= box && x * x + y * y <= goal; ++y) {
        const long r = goal - x * x - y * y;
        const long z = static_cast<long>(std::llround(std::sqrt(static_cast<double>(r))));
        for (long t = std::max(0L, z - 1); t <= z + 1; ++t)
          if (t * t == r && t <= box) return true;
      }
  }
  return false;
}

struct Quad {
  long w, x, y, z;
};

// lexicographically largest w >= x >= y >= z >= 0 with sum of squares d
inline Quad four_squares(long d) {
  for (long w = static_cast<long>(std::sqrt(static_cast<double>(d))) + 1; w >= 0; --w)
    for (long x = w; x >= 0; --x)
      for (long y = x; y >= 0; --y)
        for (long z = y; z >= 0; --z)
          if (w * w + x * x + y * y + z * z == d) return {w, x, y, z};
  std::abort();
}

// x + y*phi with |x^2 + xy - y^2| = p inside the box
inline std::optional<std::pair<long, long>> norm_search(long p) {
  const long box = static_cast<long>(std::sqrt(5.0 * static_cast<double>(p))) + 1;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      if (std::labs(x * x + x * y - y * y) == p) return std::make_pair(x, y);
  return std::nullopt;
}

inline int quartic_root_count(long q) {
  int n = 0;
  for (long x = 0; x < q; ++x) {
    const long x2 = x * x % q;
    if (mod(x2 * x2 - x2 - 1, q) == 0) ++n;
  }
  return n;
}

// discriminant of a monic polynomial from the Sylvester matrix of f and f'
inline Rat discriminant(const std::vector<long>& coeffs_high_first) {
  const std::size_t n = coeffs_high_first.size() - 1;
  std::vector<long> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(coeffs_high_first[i] * static_cast<long>(n - i));
  const std::size_t size = 2 * n - 1;
  formhasse::Matrix<Rat> s(size, size);
  for (std::size_t r = 0; r < n - 1; ++r)
    for (std::size_t c = 0; c <= n; ++c) s(r, r + c) = coeffs_high_first[c];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) s(n - 1 + r, r + c) = d[c];
  Rat res = s.determinant();
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res;
}

// whether u + v*phi is a square in F_p[phi]/(phi^2 - phi - 1), p inert
inline bool square_in_fp2(long u, long v, long p) {
  u = mod(u, p);
  v = mod(v, p);
  if (u == 0 && v == 0) return true;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      if (mod(a * a + b * b, p) == u && mod(2 * a * b + b * b, p) == v) return true;
  return false;
}

// sign of a + b*sqrt5 for integers by squaring
inline int sign_a_b_sqrt5(const Int& a, const Int& b) {
  const int sa = sgn(a), sb = sgn(b);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  const Int lhs = a * a, rhs = 5 * b * b;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

inline long squarefree_part(long n) {
  long s = n < 0 ? -1 : 1;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) s *= p;
  }
  return s * n;
}

inline bool squarefree(long n) { return n != 0 && squarefree_part(n) == n; }

using Rng = std::mt19937_64;

inline Rat fraction(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline long nonzero(Rng& rng, long bound) {
  for (;;) {
    const long v = uniform(rng, -bound, bound);
    if (v != 0) return v;
  }
}

}  // namespace oracle
