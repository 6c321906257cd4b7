#include "formhasse/localglobal.hpp"

#include <algorithm>

namespace formhasse {

int legendre(const Int& a, const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) != 0 || !is_prime(p))
    throw Error("legendre: modulus " + p.get_str() + " is not an odd prime");
  if (!p.fits_ulong_p()) {
    const int s = mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
    return s;
  }
  const auto q = static_cast<std::uint64_t>(p.get_ui());
  const std::uint64_t r = reduce_mod(a, q);
  if (r == 0) return 0;
  return pow_mod(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

// ------------------------------------------------------------------ over Q

PlaceQ PlaceQ::finite(Int p) {
  if (!is_prime(p)) throw Error("place: " + p.get_str() + " is not prime");
  return {std::move(p)};
}

std::string to_string(const PlaceQ& v) { return v.is_real() ? "real" : v.prime.get_str(); }

namespace {

int legendre_of_unit(const Rat& u, const Int& p) { return legendre(u.get_num(), p) * legendre(u.get_den(), p); }

// u mod 8 for a rational with odd numerator and denominator
unsigned long unit_mod8(const Rat& u) {
  Int prod = u.get_num() * u.get_den();
  return mpz_fdiv_ui(prod.get_mpz_t(), 8);
}

Rat strip_prime(const Rat& x, const Int& p, long v) {
  Rat out = x;
  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(v)));
  if (v >= 0) out /= Rat(pk);
  else out *= Rat(pk);
  return out;
}

}  // namespace

int hilbert_Q(const Rat& a, const Rat& b, const PlaceQ& v) {
  if (sgn(a) == 0 || sgn(b) == 0) throw Error("hilbert_Q: arguments must be nonzero");
  if (v.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Int& p = v.prime;
  const long alpha = valuation(a, p);
  const long beta = valuation(b, p);
  const Rat u = strip_prime(a, p, alpha);
  const Rat w = strip_prime(b, p, beta);
  const bool alpha_odd = (alpha & 1) != 0;
  const bool beta_odd = (beta & 1) != 0;
  if (p == 2) {
    const unsigned long u8 = unit_mod8(u), w8 = unit_mod8(w);
    const auto eps = [](unsigned long x) { return x % 4 == 3 ? 1 : 0; };
    const auto omega = [](unsigned long x) { return (x == 3 || x == 5) ? 1 : 0; };
    const int e = eps(u8) * eps(w8) + (alpha_odd ? omega(w8) : 0) + (beta_odd ? omega(u8) : 0);
    return e % 2 == 0 ? 1 : -1;
  }
  int result = 1;
  if (alpha_odd && beta_odd && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) result = -result;
  if (beta_odd) result *= legendre_of_unit(u, p);
  if (alpha_odd) result *= legendre_of_unit(w, p);
  return result;
}

std::vector<PlaceQ> relevant_places_Q(const std::vector<Rat>& values, std::int64_t bound) {
  std::set<Int> primes{Int(2)};
  for (const auto& x : values) {
    if (sgn(x) == 0) throw Error("relevant_places_Q: zero value");
    for (const auto& p : prime_divisors(Int(x.get_num() * x.get_den()), bound)) primes.insert(p);
  }
  std::vector<PlaceQ> out{PlaceQ::real()};
  for (const auto& p : primes) out.push_back(PlaceQ{p});
  return out;
}

namespace {

std::vector<Rat> rational_entries(const DiagForm& d) {
  if (d.field() != Field::Q) throw Error("expected a form over Q");
  std::vector<Rat> out;
  for (const auto& e : d.entries()) out.push_back(e.a());
  return out;
}

DiagForm as_diagonal(const Form& f) {
  if (f.gram().is_diagonal()) {
    std::vector<K5Elem> e;
    for (std::size_t i = 0; i < f.dim(); ++i) e.push_back(f.gram()(i, i));
    return {f.field(), std::move(e)};
  }
  return diagonalize(f).diag;
}

template <class Place>
void check_even(const RamSet<Place>& s) {
  if (s.size() % 2 != 0) throw Error("ramification set of odd cardinality violates reciprocity");
}

}  // namespace

int hasse_symbol_Q(const DiagForm& d, const PlaceQ& v) {
  const auto a = rational_entries(d);
  int s = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) s *= hilbert_Q(a[i], a[j], v);
  return s;
}

RamSetQ hasse_Q(const DiagForm& d, std::int64_t bound) {
  RamSetQ out;
  for (const auto& v : relevant_places_Q(rational_entries(d), bound))
    if (hasse_symbol_Q(d, v) == -1) out.places.insert(v);
  check_even(out);
  return out;
}

RamSetQ hasse_Q(const Form& f, std::int64_t bound) { return hasse_Q(as_diagonal(f), bound); }

Comparison compare_Q(const Form& f, const Form& g, std::int64_t bound) {
  if (f.field() != Field::Q || g.field() != Field::Q) throw Error("compare_Q: both forms must be over Q");
  if (f.dim() != g.dim()) return {false, "dimension"};
  const DiagForm df = as_diagonal(f), dg = as_diagonal(g);
  if (!(signature_at(df, Embedding::Identity) == signature_at(dg, Embedding::Identity))) return {false, "signature"};
  if (!same_square_class(df.determinant(), dg.determinant(), Field::Q)) return {false, "determinant class"};
  if (!(hasse_Q(df, bound) == hasse_Q(dg, bound))) return {false, "hasse invariant"};
  return {true, ""};
}

bool equivalent_Q(const Form& f, const Form& g, std::int64_t bound) { return compare_Q(f, g, bound).equivalent; }

bool equivalent_Q(const DiagForm& f, const DiagForm& g, std::int64_t bound) {
  return equivalent_Q(f.to_form(), g.to_form(), bound);
}

bool is_local_square_Q(const Rat& x, const Int& v) {
  if (sgn(x) == 0) throw Error("is_local_square_Q: zero");
  if (v == 0) return sgn(x) > 0;
  const long val = valuation(x, v);
  if ((val & 1) != 0) return false;
  const Rat u = strip_prime(x, v, val);
  if (v == 2) return unit_mod8(u) == 1;
  return legendre_of_unit(u, v) == 1;
}

bool represents_zero_Q(const DiagForm& d) {
  if (d.field() != Field::Q) throw Error("represents_zero_Q: form is not over Q");
  const std::size_t n = d.dim();
  if (n == 1) return false;
  if (n == 2) return is_square(Rat(-d[0].a() * d[1].a()));
  const Signature s = signature_at(d, Embedding::Identity);
  const bool indefinite = s.plus > 0 && s.minus > 0;
  if (n >= 5) return indefinite;
  const Rat det = d.determinant().a();
  for (const auto& v : relevant_places_Q(rational_entries(d))) {
    const int eps = hasse_symbol_Q(d, v);
    bool isotropic_here = false;
    if (n == 3) isotropic_here = hilbert_Q(-1, Rat(-det), v) == eps;
    else isotropic_here = !is_local_square_Q(det, v.prime) || eps == hilbert_Q(-1, -1, v);
    if (!isotropic_here) return false;
  }
  return true;
}

// -------------------------------------------------------------- over Q(s5)

namespace {

struct Residue {
  std::uint64_t u = 0;
  std::uint64_t w = 0;  // coefficient of phi; always 0 in degree one
  bool is_zero() const { return u == 0 && w == 0; }
};

class ResidueField {
 public:
  explicit ResidueField(const PrimeK5& pr)
      : p_(to_u64(pr.p)), inert_(pr.kind == SplitKind::Inert), root_(pr.root) {}

  Residue reduce(const OInt& v) const {
    const std::uint64_t x = reduce_mod(v.x(), p_), y = reduce_mod(v.y(), p_);
    if (inert_) return {x, y};
    return {(x + mul_mod(y, root_, p_)) % p_, 0};
  }

  Residue reduce(const Int& n) const { return {reduce_mod(n, p_), 0}; }

  Residue mul(const Residue& a, const Residue& b) const {
    if (!inert_) return {mul_mod(a.u, b.u, p_), 0};
    // phi^2 = phi + 1
    const std::uint64_t ww = mul_mod(a.w, b.w, p_);
    const std::uint64_t u = (mul_mod(a.u, b.u, p_) + ww) % p_;
    const std::uint64_t w = ((mul_mod(a.u, b.w, p_) + mul_mod(a.w, b.u, p_)) % p_ + ww) % p_;
    return {u, w};
  }

  Residue pow(Residue base, unsigned __int128 e) const {
    Residue r{1 % p_, 0};
    while (e > 0) {
      if ((e & 1U) != 0) r = mul(r, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return r;
  }

  unsigned __int128 order() const {
    const auto p = static_cast<unsigned __int128>(p_);
    return inert_ ? p * p : p;
  }

  Residue inverse(const Residue& a) const {
    if (a.is_zero()) throw Error("residue field: inverse of zero");
    return pow(a, order() - 2);
  }

  bool is_square(const Residue& a) const {
    if (a.is_zero()) return true;
    const Residue r = pow(a, (order() - 1) / 2);
    return r.u == 1 && r.w == 0;
  }

 private:
  static std::uint64_t to_u64(const Int& p) {
    if (!p.fits_ulong_p()) throw Error("residue field: prime too large: " + p.get_str());
    return p.get_ui();
  }

  std::uint64_t p_;
  bool inert_;
  std::uint64_t root_;
};

// x = beta / den with beta in Z[phi] and den > 0
std::pair<OInt, Int> integral_parts(const K5Elem& x) {
  const Rat X = x.a() - x.b();
  const Rat Y = 2 * x.b();
  Int den;
  mpz_lcm(den.get_mpz_t(), X.get_den_mpz_t(), Y.get_den_mpz_t());
  return {OInt(Int(X.get_num() * (den / X.get_den())), Int(Y.get_num() * (den / Y.get_den()))), den};
}

unsigned ramification_index(const PrimeK5& pr) { return pr.kind == SplitKind::Ramified ? 2 : 1; }

long valuation_integral(OInt beta, const PrimeK5& pr) {
  if (beta.is_zero()) throw Error("valuation of zero");
  if (pr.kind == SplitKind::Inert) {
    long vx = sgn(beta.x()) == 0 ? -1 : static_cast<long>(formhasse::valuation(beta.x(), pr.p));
    long vy = sgn(beta.y()) == 0 ? -1 : static_cast<long>(formhasse::valuation(beta.y(), pr.p));
    if (vx < 0) return vy;
    if (vy < 0) return vx;
    return std::min(vx, vy);
  }
  const ResidueField field(pr);
  long v = 0;
  while (field.reduce(beta).is_zero()) {
    auto q = exact_div(beta, pr.pi);
    if (!q) throw Error("valuation: inconsistent prime data");
    beta = std::move(*q);
    ++v;
  }
  return v;
}

// beta / pi^k, which must be exact
OInt divide_out(OInt beta, const OInt& pi, long k) {
  for (long i = 0; i < k; ++i) {
    auto q = exact_div(beta, pi);
    if (!q) throw Error("divide_out: not divisible");
    beta = std::move(*q);
  }
  return beta;
}

Residue residue_of_unit(const K5Elem& x, const PrimeK5& pr) {
  const auto [beta, den] = integral_parts(x);
  const long e = ramification_index(pr);
  const long k = static_cast<long>(formhasse::valuation(den, pr.p));
  if (valuation_integral(beta, pr) != e * k) throw Error("residue: " + to_string(x) + " is not a unit at " + to_string(pr));
  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), pr.p.get_mpz_t(), static_cast<unsigned long>(k));
  const Int den_unit = den / pk;
  const OInt gamma = divide_out(beta, pr.pi, e * k);
  const OInt omega = divide_out(OInt(pr.p, Int(0)), pr.pi, e);  // p / pi^e, a unit at pr
  const ResidueField field(pr);
  Residue r = field.reduce(gamma);
  r = field.mul(r, field.inverse(field.reduce(den_unit)));
  const Residue omega_inv = field.inverse(field.reduce(omega));
  for (long i = 0; i < k; ++i) r = field.mul(r, omega_inv);
  return r;
}

}  // namespace

std::vector<PrimeK5> primes_above(const Int& p) {
  if (p < 3 || !is_prime(p)) throw Error("primes_above: " + p.get_str() + " is not an odd prime");
  const Splitting s = split_rational_prime(p);
  switch (s.kind) {
    case SplitKind::Ramified:
      return {PrimeK5{p, SplitKind::Ramified, s.root, balanced_generator(s.pi)}};
    case SplitKind::Inert:
      return {PrimeK5{p, SplitKind::Inert, 0, balanced_generator(s.pi)}};
    case SplitKind::Split: {
      const auto q = static_cast<std::uint64_t>(p.get_ui());
      const std::uint64_t other = (1 + q - s.root) % q;
      OInt g = gcd(OInt(p, Int(0)), OInt(Int(-static_cast<long>(other)), Int(1)));
      return {PrimeK5{p, SplitKind::Split, s.root, s.pi}, PrimeK5{p, SplitKind::Split, other, balanced_generator(g)}};
    }
  }
  throw Error("primes_above: unreachable");
}

PrimeK5 prime_of_generator(const OInt& pi) {
  if (pi.is_zero()) throw Error("prime_of_generator: zero");
  const Int n = abs(norm(pi));
  if (is_prime(n)) {
    if (n == 2) throw Error("prime_of_generator: norm 2 is impossible in Z[phi]");
    for (const auto& pr : primes_above(n)) {
      if (pr.kind == SplitKind::Inert) break;
      if (associates(pr.pi, pi)) return pr;
    }
    throw Error("prime_of_generator: inconsistent splitting for " + to_string(pi));
  }
  Int r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 2) != 0 && is_prime(r)) {
    if (r == 2) throw Error("prime_of_generator: " + to_string(pi) + " generates the dyadic prime");
    auto primes = primes_above(r);
    if (primes.size() == 1 && primes[0].kind == SplitKind::Inert && associates(primes[0].pi, pi)) return primes[0];
  }
  throw Error("prime_of_generator: " + to_string(pi) + " does not generate a prime ideal");
}

PrimeK5 prime_with_square_phi(const Int& p) {
  for (const auto& pr : primes_above(p)) {
    if (pr.kind != SplitKind::Split) break;
    if (residue_square(K5Elem::phi(), pr)) return pr;
  }
  throw Error("prime_with_square_phi: no prime above " + p.get_str() + " has phi as a residue square");
}

std::string to_string(const PrimeK5& pr) { return "pi:" + to_string(pr.pi); }

std::string to_string(const PlaceK5& v) {
  switch (v.kind) {
    case PlaceK5::Kind::RealIdentity: return "real";
    case PlaceK5::Kind::RealTau: return "real-tau";
    case PlaceK5::Kind::Dyadic: return "dyadic";
    case PlaceK5::Kind::Odd: return to_string(v.prime);
  }
  return "?";
}

long valuation(const K5Elem& x, const PrimeK5& pr) {
  if (x.is_zero()) throw Error("valuation of zero");
  const auto [beta, den] = integral_parts(x);
  return valuation_integral(beta, pr) - static_cast<long>(ramification_index(pr) * formhasse::valuation(den, pr.p));
}

bool residue_square(const K5Elem& x, const PrimeK5& pr) {
  if (x.is_zero()) throw Error("residue_square: zero is not a unit");
  if (valuation(x, pr) != 0) throw Error("residue_square: " + to_string(x) + " is not a unit at " + to_string(pr));
  return ResidueField(pr).is_square(residue_of_unit(x, pr));
}

int hilbert_K5(const K5Elem& a, const K5Elem& b, const PlaceK5& v) {
  if (a.is_zero() || b.is_zero()) throw Error("hilbert_K5: arguments must be nonzero");
  switch (v.kind) {
    case PlaceK5::Kind::RealIdentity:
    case PlaceK5::Kind::RealTau: {
      const Embedding e = v.kind == PlaceK5::Kind::RealIdentity ? Embedding::Identity : Embedding::Tau;
      return (sign_at(a, e) < 0 && sign_at(b, e) < 0) ? -1 : 1;
    }
    case PlaceK5::Kind::Dyadic:
      throw Error("hilbert_K5: the dyadic symbol is only available through reciprocity");
    case PlaceK5::Kind::Odd: {
      const long alpha = valuation(a, v.prime);
      const long beta = valuation(b, v.prime);
      if (alpha == 0 && beta == 0) return 1;
      // tame symbol (-1)^(alpha beta) a^beta / b^alpha
      K5Elem u = pow(a, beta) * pow(b, -alpha);
      if (((alpha * beta) & 1) != 0) u = -u;
      return residue_square(u, v.prime) ? 1 : -1;
    }
  }
  throw Error("hilbert_K5: unreachable");
}

std::vector<PrimeK5> relevant_primes_K5(const std::vector<K5Elem>& values, std::int64_t bound) {
  std::set<Int> rational;
  for (const auto& x : values) {
    if (x.is_zero()) throw Error("relevant_primes_K5: zero value");
    const auto [beta, den] = integral_parts(x);
    for (const auto& p : prime_divisors(Int(norm(beta) * den), bound))
      if (p != 2) rational.insert(p);
  }
  std::vector<PrimeK5> out;
  for (const auto& p : rational)
    for (auto& pr : primes_above(p)) out.push_back(std::move(pr));
  return out;
}

std::vector<std::pair<PlaceK5, int>> hilbert_table_K5(const K5Elem& a, const K5Elem& b, std::int64_t bound) {
  std::vector<std::pair<PlaceK5, int>> out;
  int product = 1;
  auto add = [&](PlaceK5 v) {
    const int s = hilbert_K5(a, b, v);
    product *= s;
    out.emplace_back(std::move(v), s);
  };
  add(PlaceK5::real(Embedding::Identity));
  add(PlaceK5::real(Embedding::Tau));
  for (auto& pr : relevant_primes_K5({a, b}, bound)) add(PlaceK5::odd(std::move(pr)));
  out.emplace_back(PlaceK5::dyadic(), product);
  return out;
}

std::vector<std::pair<PlaceQ, int>> hilbert_table_Q(const Rat& a, const Rat& b, std::int64_t bound) {
  std::vector<std::pair<PlaceQ, int>> out;
  for (const auto& v : relevant_places_Q({a, b}, bound)) out.emplace_back(v, hilbert_Q(a, b, v));
  return out;
}

int hasse_symbol_K5(const DiagForm& d, const PlaceK5& v) {
  int s = 1;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = i + 1; j < d.dim(); ++j) s *= hilbert_K5(d[i], d[j], v);
  return s;
}

RamSetK5 hasse_K5(const DiagForm& d, std::int64_t bound) {
  RamSetK5 out;
  std::vector<PlaceK5> places{PlaceK5::real(Embedding::Identity), PlaceK5::real(Embedding::Tau)};
  for (auto& pr : relevant_primes_K5(d.entries(), bound)) places.push_back(PlaceK5::odd(std::move(pr)));
  for (auto& v : places)
    if (hasse_symbol_K5(d, v) == -1) out.places.insert(std::move(v));
  // every other odd place is trivial, so reciprocity pins the dyadic place
  if (out.size() % 2 != 0) out.places.insert(PlaceK5::dyadic());
  check_even(out);
  return out;
}

RamSetK5 hasse_K5(const Form& f, std::int64_t bound) { return hasse_K5(as_diagonal(f), bound); }

Comparison compare_K5(const Form& f, const Form& g, std::int64_t bound) {
  if (f.field() != Field::K5 || g.field() != Field::K5) throw Error("compare_K5: both forms must be over K5");
  if (f.dim() != g.dim()) return {false, "dimension"};
  const DiagForm df = as_diagonal(f), dg = as_diagonal(g);
  if (!(signature_at(df, Embedding::Identity) == signature_at(dg, Embedding::Identity))) return {false, "signature"};
  if (!(signature_at(df, Embedding::Tau) == signature_at(dg, Embedding::Tau))) return {false, "signature at tau"};
  if (!same_square_class(df.determinant(), dg.determinant(), Field::K5)) return {false, "determinant class"};
  if (!(hasse_K5(df, bound) == hasse_K5(dg, bound))) return {false, "hasse invariant"};
  return {true, ""};
}

bool equivalent_K5(const Form& f, const Form& g, std::int64_t bound) { return compare_K5(f, g, bound).equivalent; }

bool equivalent_K5(const DiagForm& f, const DiagForm& g, std::int64_t bound) {
  return equivalent_K5(f.to_form(), g.to_form(), bound);
}

Comparison compare_forms(const Form& f, const Form& g, std::int64_t bound) {
  if (f.field() != g.field()) throw Error("forms live over different fields");
  return f.field() == Field::Q ? compare_Q(f, g, bound) : compare_K5(f, g, bound);
}

}  // namespace formhasse
