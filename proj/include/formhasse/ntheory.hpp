#pragma once

// Integer number theory shared by the field and symbol code: primality,
// modular arithmetic on 64-bit moduli, square roots mod p, factoring.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace formhasse {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised for every precondition violation and malformed input in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trial-division bound used when factoring norms and determinants.
inline constexpr std::int64_t kDefaultPrimeBound = 1'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Reduces an arbitrary-precision integer into [0, m).
std::uint64_t reduce_mod(const Int& a, std::uint64_t m);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);
bool is_prime(const Int& n);

/// A square root of a modulo the odd prime p (Tonelli-Shanks). Requires a to
/// be a nonzero quadratic residue or zero.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Prime factorization of |n| (n != 0) as prime -> exponent. Trial division
/// runs up to `bound`; larger cofactors are split with Pollard rho. Throws
/// Error if a cofactor cannot be split.
std::map<Int, unsigned> factor(const Int& n, std::int64_t bound = kDefaultPrimeBound);

/// Sorted distinct primes dividing |n|; empty for n = +-1.
std::vector<Int> prime_divisors(const Int& n, std::int64_t bound = kDefaultPrimeBound);

/// The squarefree integer s with n = s * m^2 (sign kept).
Int squarefree_part(const Int& n, std::int64_t bound = kDefaultPrimeBound);

/// Exponent of the prime p in |n|; n != 0.
unsigned valuation(const Int& n, const Int& p);

/// Exponent of p in a nonzero rational (negative for denominators).
long valuation(const Rat& r, const Int& p);

bool is_square(const Int& n);
bool is_square(const Rat& r);

/// Exact square root of a rational square; throws Error otherwise.
Rat rational_sqrt(const Rat& r);

int sign(const Int& n);
int sign(const Rat& r);

std::int64_t to_i64(const Int& n);

}  // namespace formhasse
