#pragma once

// Legendre and Hilbert symbols at the places of Q and Q(sqrt5), Hasse
// invariants encoded as ramification sets, and the weak Hasse-Minkowski
// equivalence test.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "formhasse/exact.hpp"
#include "formhasse/qforms.hpp"

namespace formhasse {

/// Euler's criterion. p must be an odd prime.
int legendre(const Int& a, const Int& p);

// ------------------------------------------------------------------ over Q

/// The real place (prime == 0) or the p-adic place.
struct PlaceQ {
  Int prime{0};

  static PlaceQ real() { return {}; }
  static PlaceQ finite(Int p);
  bool is_real() const { return prime == 0; }

  friend bool operator==(const PlaceQ& a, const PlaceQ& b) { return a.prime == b.prime; }
  friend bool operator<(const PlaceQ& a, const PlaceQ& b) { return a.prime < b.prime; }
};

std::string to_string(const PlaceQ& v);

/// Places where a product of quaternion symbols is nontrivial. Reciprocity
/// forces an even number of them.
template <class Place>
struct RamSet {
  std::set<Place> places;

  std::size_t size() const { return places.size(); }
  bool empty() const { return places.empty(); }
  bool contains(const Place& v) const { return places.count(v) != 0; }
  friend bool operator==(const RamSet& a, const RamSet& b) { return a.places == b.places; }
};

using RamSetQ = RamSet<PlaceQ>;

/// (a, b)_v = +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_v.
int hilbert_Q(const Rat& a, const Rat& b, const PlaceQ& v);

/// The real place, 2, and every prime dividing a numerator or denominator.
std::vector<PlaceQ> relevant_places_Q(const std::vector<Rat>& values, std::int64_t bound = kDefaultPrimeBound);

/// prod_{i<j} (a_i, a_j)_v.
int hasse_symbol_Q(const DiagForm& d, const PlaceQ& v);

RamSetQ hasse_Q(const DiagForm& d, std::int64_t bound = kDefaultPrimeBound);
RamSetQ hasse_Q(const Form& f, std::int64_t bound = kDefaultPrimeBound);

/// Outcome of an invariant comparison; `differing` names the first invariant
/// that separates the forms ("" when equivalent).
struct Comparison {
  bool equivalent = false;
  std::string differing;
};

Comparison compare_Q(const Form& f, const Form& g, std::int64_t bound = kDefaultPrimeBound);
bool equivalent_Q(const Form& f, const Form& g, std::int64_t bound = kDefaultPrimeBound);
bool equivalent_Q(const DiagForm& f, const DiagForm& g, std::int64_t bound = kDefaultPrimeBound);

// -------------------------------------------------------------- over Q(s5)

/// A prime of Z[phi] above an odd rational prime. Identity is (p, root):
/// split primes are told apart by the residue of phi, ramified (p = 5) and
/// inert primes carry root 0. `pi` is a generator with pi < 0 < tau(pi).
struct PrimeK5 {
  Int p;
  SplitKind kind = SplitKind::Inert;
  std::uint64_t root = 0;
  OInt pi;

  /// Number of elements of the residue field.
  Int residue_size() const { return kind == SplitKind::Inert ? Int(p * p) : p; }

  friend bool operator==(const PrimeK5& a, const PrimeK5& b) { return a.p == b.p && a.root == b.root; }
  friend bool operator<(const PrimeK5& a, const PrimeK5& b) {
    return a.p != b.p ? a.p < b.p : a.root < b.root;
  }
};

/// The primes of Z[phi] above the odd rational prime p.
std::vector<PrimeK5> primes_above(const Int& p);

/// The prime generated by an element of prime norm +-p or inert norm p^2.
PrimeK5 prime_of_generator(const OInt& pi);

/// The canonical prime above p in the prime set P: one where phi reduces to
/// a square, ties broken by the smaller root. Throws if neither qualifies.
PrimeK5 prime_with_square_phi(const Int& p);

std::string to_string(const PrimeK5& pr);

struct PlaceK5 {
  enum class Kind { RealIdentity, RealTau, Odd, Dyadic };
  Kind kind = Kind::RealIdentity;
  PrimeK5 prime;  // Kind::Odd only

  static PlaceK5 real(Embedding e) { return {e == Embedding::Identity ? Kind::RealIdentity : Kind::RealTau, {}}; }
  static PlaceK5 odd(PrimeK5 p) { return {Kind::Odd, std::move(p)}; }
  static PlaceK5 dyadic() { return {Kind::Dyadic, {}}; }

  friend bool operator==(const PlaceK5& a, const PlaceK5& b) {
    return a.kind == b.kind && (a.kind != Kind::Odd || a.prime == b.prime);
  }
  friend bool operator<(const PlaceK5& a, const PlaceK5& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.kind == Kind::Odd && a.prime < b.prime;
  }
};

std::string to_string(const PlaceK5& v);

using RamSetK5 = RamSet<PlaceK5>;

/// Normalized valuation at an odd prime of Z[phi].
long valuation(const K5Elem& x, const PrimeK5& pr);

/// Reduction of a pi-unit into the residue field, then Euler's criterion
/// with exponent (|residue field| - 1) / 2.
bool residue_square(const K5Elem& x, const PrimeK5& pr);

/// Hilbert symbol at a real or odd place (tame symbol at odd primes).
int hilbert_K5(const K5Elem& a, const K5Elem& b, const PlaceK5& v);

/// Odd primes of Z[phi] dividing a numerator or denominator of some value.
std::vector<PrimeK5> relevant_primes_K5(const std::vector<K5Elem>& values, std::int64_t bound = kDefaultPrimeBound);

/// (a, b)_v at every place where it can be nontrivial; the dyadic entry is
/// fixed by the product formula.
std::vector<std::pair<PlaceK5, int>> hilbert_table_K5(const K5Elem& a, const K5Elem& b,
                                                      std::int64_t bound = kDefaultPrimeBound);
std::vector<std::pair<PlaceQ, int>> hilbert_table_Q(const Rat& a, const Rat& b, std::int64_t bound = kDefaultPrimeBound);

int hasse_symbol_K5(const DiagForm& d, const PlaceK5& v);

/// Hasse product at both real places and every odd prime dividing an entry;
/// the dyadic place joins when needed to make the count even.
RamSetK5 hasse_K5(const DiagForm& d, std::int64_t bound = kDefaultPrimeBound);
RamSetK5 hasse_K5(const Form& f, std::int64_t bound = kDefaultPrimeBound);

Comparison compare_K5(const Form& f, const Form& g, std::int64_t bound = kDefaultPrimeBound);
bool equivalent_K5(const Form& f, const Form& g, std::int64_t bound = kDefaultPrimeBound);
bool equivalent_K5(const DiagForm& f, const DiagForm& g, std::int64_t bound = kDefaultPrimeBound);

/// Dispatches on the field tag.
Comparison compare_forms(const Form& f, const Form& g, std::int64_t bound = kDefaultPrimeBound);

}  // namespace formhasse
