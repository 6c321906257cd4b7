#include "formhasse/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace formhasse {

// ---------------------------------------------------------------- K5Elem

K5Elem K5Elem::inverse() const {
  Rat n = norm();
  if (sgn(n) == 0) throw Error("K5Elem: division by zero");
  return {Rat(a_ / n), Rat(-b_ / n)};
}

K5Elem& K5Elem::operator+=(const K5Elem& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

K5Elem& K5Elem::operator-=(const K5Elem& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

K5Elem& K5Elem::operator*=(const K5Elem& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rat a = a_ * o.a_ + 5 * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

K5Elem& K5Elem::operator/=(const K5Elem& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw Error("K5Elem: division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

K5Elem pow(K5Elem base, long exponent) {
  if (exponent < 0) {
    base = base.inverse();
    exponent = -exponent;
  }
  K5Elem result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

// ------------------------------------------------------------------ OInt

bool OInt::is_unit() const { return abs(norm(*this)) == 1; }

OInt& OInt::operator+=(const OInt& o) {
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

OInt& OInt::operator-=(const OInt& o) {
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

OInt& OInt::operator*=(const OInt& o) {
  // phi^2 = phi + 1
  Int yy = y_ * o.y_;
  Int x = x_ * o.x_ + yy;
  Int y = x_ * o.y_ + y_ * o.x_ + yy;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

K5Elem OInt::to_k5() const {
  Rat half_y(y_, 2);
  half_y.canonicalize();
  return {Rat(Rat(x_) + half_y), half_y};
}

std::optional<OInt> OInt::from_k5(const K5Elem& v) {
  Rat y = 2 * v.b();
  Rat x = v.a() - v.b();
  if (y.get_den() != 1 || x.get_den() != 1) return std::nullopt;
  return OInt(x.get_num(), y.get_num());
}

OInt phi_power(long k) {
  OInt step = k >= 0 ? OInt::phi() : OInt(Int(-1), Int(1));  // phi^-1 = phi - 1
  OInt result(1);
  for (long i = 0; i < std::labs(k); ++i) result *= step;
  return result;
}

K5Elem tau(const K5Elem& v) { return {v.a(), Rat(-v.b())}; }

OInt tau(const OInt& v) { return {Int(v.x() + v.y()), Int(-v.y())}; }

int sign_at(const K5Elem& v, Embedding e) {
  const int sa = sgn(v.a());
  const int sb = e == Embedding::Identity ? sgn(v.b()) : -sgn(v.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 5b^2 wins; they never tie.
  return cmp(v.a() * v.a(), 5 * v.b() * v.b()) > 0 ? sa : sb;
}

int sign_at(const OInt& v, Embedding e) { return sign_at(v.to_k5(), e); }

Int norm(const OInt& v) { return v.x() * v.x() + v.x() * v.y() - v.y() * v.y(); }

std::optional<OInt> exact_div(const OInt& u, const OInt& v) {
  const Int n = norm(v);
  if (n == 0) throw Error("OInt: division by zero");
  OInt w = u * tau(v);
  if (mpz_divisible_p(w.x().get_mpz_t(), n.get_mpz_t()) == 0 ||
      mpz_divisible_p(w.y().get_mpz_t(), n.get_mpz_t()) == 0)
    return std::nullopt;
  return OInt(Int(w.x() / n), Int(w.y() / n));
}

namespace {

Int round_div(const Int& a, const Int& n) {
  // nearest integer to a / n
  Int num = 2 * a + n;
  Int den = 2 * n;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int height(const OInt& v) { return std::max(abs(v.x()), abs(v.y())); }

}  // namespace

std::pair<OInt, OInt> div_rem(const OInt& u, const OInt& v) {
  const Int n = norm(v);
  if (n == 0) throw Error("OInt: division by zero");
  OInt w = u * tau(v);
  OInt q(round_div(w.x(), n), round_div(w.y(), n));
  OInt r = u - q * v;
  return {q, r};
}

OInt gcd(OInt u, OInt v) {
  while (!v.is_zero()) {
    OInt r = div_rem(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

bool associates(const OInt& u, const OInt& v) {
  if (u.is_zero() || v.is_zero()) return u.is_zero() && v.is_zero();
  auto q = exact_div(u, v);
  return q.has_value() && q->is_unit();
}

OInt normalize_generator(const OInt& v) {
  if (v.is_zero()) throw Error("normalize_generator: zero has no generator");
  // phi has signs (+,-) and -1 flips both, so |k| <= 1 always suffices.
  for (long k : {0L, 1L, -1L}) {
    OInt t = phi_power(k) * v;
    for (const OInt& cand : {t, -t}) {
      if (sign_at(cand, Embedding::Identity) < 0 && sign_at(cand, Embedding::Tau) > 0) return cand;
    }
  }
  throw Error("normalize_generator: unreachable sign pattern");
}

OInt balanced_generator(const OInt& v) {
  OInt t = normalize_generator(v);
  const OInt up = phi_power(2);
  const OInt down = phi_power(-2);
  for (const OInt& step : {up, down}) {
    for (;;) {
      OInt next = t * step;
      if (height(next) >= height(t)) break;
      t = std::move(next);
    }
  }
  return t;
}

Splitting split_rational_prime(const Int& p) {
  if (!is_prime(p)) throw Error("split_rational_prime: " + p.get_str() + " is not prime");
  if (p == 5) return {SplitKind::Ramified, OInt::sqrt5(), 3};  // phi = 3 mod sqrt5
  const unsigned long r5 = mpz_fdiv_ui(p.get_mpz_t(), 5);
  if (r5 == 2 || r5 == 3) return {SplitKind::Inert, OInt(p, Int(0)), 0};

  if (!p.fits_slong_p()) throw Error("split_rational_prime: prime too large: " + p.get_str());
  const auto q = static_cast<std::uint64_t>(p.get_ui());
  const std::uint64_t s = sqrt_mod(5, q);
  const std::uint64_t inv2 = (q + 1) / 2;
  const std::uint64_t r1 = mul_mod((1 + s) % q, inv2, q);
  const std::uint64_t r2 = (1 + q - r1) % q;
  const std::uint64_t root = std::min(r1, r2);
  OInt g = gcd(OInt(p, Int(0)), OInt(Int(-static_cast<long>(root)), Int(1)));
  return {SplitKind::Split, balanced_generator(g), root};
}

std::optional<OInt> search_norm_element(std::int64_t p) {
  const auto bound = static_cast<std::int64_t>(std::ceil(std::sqrt(5.0 * static_cast<double>(p))));
  for (std::int64_t r = 0; r <= bound; ++r) {
    for (std::int64_t x = -r; x <= r; ++x) {
      for (std::int64_t y = -r; y <= r; ++y) {
        if (std::max(std::llabs(x), std::llabs(y)) != r) continue;
        const std::int64_t n = x * x + x * y - y * y;
        if (n == p || n == -p) return OInt(Int(static_cast<long>(x)), Int(static_cast<long>(y)));
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------- text I/O

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  K5Elem parse() {
    K5Elem v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("cannot parse field element \"" + std::string(text_) + "\": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  K5Elem expr() {
    K5Elem v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  K5Elem term() {
    K5Elem v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        K5Elem d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  K5Elem unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  K5Elem primary() {
    skip_ws();
    if (accept('(')) {
      K5Elem v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (accept_word("sqrt5") || accept_word("s5")) return K5Elem::sqrt5();
    if (accept_word("phi")) return K5Elem::phi();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
    return K5Elem(Int(std::string(text_.substr(start, pos_ - start))));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

K5Elem parse_k5(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const K5Elem& v) {
  if (v.is_rational()) return to_string(v.a());
  const Rat abs_b = abs(v.b());
  const std::string coef = abs_b == 1 ? "s5" : to_string(abs_b) + "*s5";
  if (sgn(v.a()) == 0) return (sgn(v.b()) < 0 ? "-" : "") + coef;
  return to_string(v.a()) + (sgn(v.b()) < 0 ? "-" : "+") + coef;
}

std::string to_string(const OInt& v) { return to_string(v.to_k5()); }

std::ostream& operator<<(std::ostream& os, const K5Elem& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const OInt& v) { return os << to_string(v); }

}  // namespace formhasse
