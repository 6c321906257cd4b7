#pragma once

// Exact arithmetic in Q(sqrt5) and its ring of integers Z[phi],
// phi = (1 + sqrt5) / 2.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "formhasse/ntheory.hpp"

namespace formhasse {

/// The two real embeddings of Q(sqrt5). Tau sends sqrt5 to -sqrt5.
enum class Embedding { Identity, Tau };

inline constexpr Embedding compose(Embedding a, Embedding b) {
  return a == b ? Embedding::Identity : Embedding::Tau;
}

/// a + b*sqrt5 with rational a, b.
class K5Elem {
 public:
  K5Elem() = default;
  K5Elem(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  K5Elem(Int a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  K5Elem(Rat a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  K5Elem(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static K5Elem sqrt5() { return {Rat(0), Rat(1)}; }
  static K5Elem phi() { return {Rat(1, 2), Rat(1, 2)}; }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Rational norm a^2 - 5b^2.
  Rat norm() const { return a_ * a_ - 5 * b_ * b_; }
  Rat trace() const { return 2 * a_; }

  K5Elem inverse() const;

  K5Elem operator-() const { return {Rat(-a_), Rat(-b_)}; }
  K5Elem& operator+=(const K5Elem& o);
  K5Elem& operator-=(const K5Elem& o);
  K5Elem& operator*=(const K5Elem& o);
  K5Elem& operator/=(const K5Elem& o);

  friend K5Elem operator+(K5Elem x, const K5Elem& y) { return x += y; }
  friend K5Elem operator-(K5Elem x, const K5Elem& y) { return x -= y; }
  friend K5Elem operator*(K5Elem x, const K5Elem& y) { return x *= y; }
  friend K5Elem operator/(K5Elem x, const K5Elem& y) { return x /= y; }
  friend bool operator==(const K5Elem& x, const K5Elem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rat a_{0};
  Rat b_{0};
};

K5Elem pow(K5Elem base, long exponent);

/// x + y*phi with integer x, y.
class OInt {
 public:
  OInt() = default;
  OInt(long x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  OInt(Int x, Int y) : x_(std::move(x)), y_(std::move(y)) {}

  static OInt phi() { return {Int(0), Int(1)}; }
  /// sqrt5 = -1 + 2*phi.
  static OInt sqrt5() { return {Int(-1), Int(2)}; }

  const Int& x() const { return x_; }
  const Int& y() const { return y_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_unit() const;

  OInt operator-() const { return {Int(-x_), Int(-y_)}; }
  OInt& operator+=(const OInt& o);
  OInt& operator-=(const OInt& o);
  OInt& operator*=(const OInt& o);

  friend OInt operator+(OInt u, const OInt& v) { return u += v; }
  friend OInt operator-(OInt u, const OInt& v) { return u -= v; }
  friend OInt operator*(OInt u, const OInt& v) { return u *= v; }
  friend bool operator==(const OInt& u, const OInt& v) { return u.x_ == v.x_ && u.y_ == v.y_; }

  K5Elem to_k5() const;
  /// Inverse of to_k5; nullopt unless v is an algebraic integer.
  static std::optional<OInt> from_k5(const K5Elem& v);

 private:
  Int x_{0};
  Int y_{0};
};

/// phi^k for any integer k.
OInt phi_power(long k);

K5Elem tau(const K5Elem& v);
OInt tau(const OInt& v);

/// Exact sign of the real number v under the embedding e.
int sign_at(const K5Elem& v, Embedding e);
int sign_at(const OInt& v, Embedding e);

/// v * tau(v) = x^2 + xy - y^2.
Int norm(const OInt& v);

/// u / v when it lies in Z[phi].
std::optional<OInt> exact_div(const OInt& u, const OInt& v);

/// Division with remainder for the norm-Euclidean ring Z[phi]:
/// |norm(remainder)| < |norm(v)|.
std::pair<OInt, OInt> div_rem(const OInt& u, const OInt& v);

/// A generator of the ideal (u, v).
OInt gcd(OInt u, OInt v);

/// u * v^-1 is a unit.
bool associates(const OInt& u, const OInt& v);

/// The unit multiple t = +-phi^k * v with t < 0 and tau(t) > 0, smallest |k|
/// first, positive k on ties.
OInt normalize_generator(const OInt& v);

/// The generator of (v) with the sign pattern of normalize_generator and
/// the smallest max(|x|, |y|) among its totally positive unit multiples.
OInt balanced_generator(const OInt& v);

enum class SplitKind { Ramified, Split, Inert };

/// How a rational prime decomposes in Z[phi]. `pi` is a prime element above
/// p: sqrt5 for p = 5, p itself when inert, and for split p the prime on
/// which phi reduces to `root` (the smaller root of r^2 - r - 1 mod p).
struct Splitting {
  SplitKind kind;
  OInt pi;
  std::uint64_t root = 0;
};

Splitting split_rational_prime(const Int& p);

/// Box search for an element of norm +-p with |x|, |y| <= ceil(sqrt(5p)).
std::optional<OInt> search_norm_element(std::int64_t p);

// Text syntax: "3-2*s5", "phi", "-phi", "1/2+1/2*s5", "2+3*phi".
K5Elem parse_k5(std::string_view text);
std::string to_string(const K5Elem& v);
std::string to_string(const OInt& v);
std::string to_string(const Rat& r);

std::ostream& operator<<(std::ostream& os, const K5Elem& v);
std::ostream& operator<<(std::ostream& os, const OInt& v);

}  // namespace formhasse
