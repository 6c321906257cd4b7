#include "formhasse/qforms.hpp"

#include <algorithm>
#include <numeric>

namespace formhasse {

std::string to_string(Field f) { return f == Field::Q ? "Q" : "K5"; }

Field parse_field(std::string_view text) {
  if (text == "Q" || text == "q") return Field::Q;
  if (text == "K5" || text == "k5" || text == "Q(s5)") return Field::K5;
  throw Error("unknown field \"" + std::string(text) + "\" (expected Q or K5)");
}

namespace {

void check_entry_field(const K5Elem& v, Field field) {
  if (field == Field::Q && !v.is_rational())
    throw Error("entry " + to_string(v) + " is not rational but the form is over Q");
}

}  // namespace

Form::Form(Field field, KMatrix gram) : field_(field), gram_(std::move(gram)) {
  if (gram_.rows() == 0) throw Error("Form: dimension must be at least 1");
  if (!gram_.is_symmetric()) throw Error("Form: Gram matrix is not symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j) check_entry_field(gram_(i, j), field_);
  if (gram_.determinant().is_zero()) throw Error("Form: Gram matrix is singular");
}

DiagForm::DiagForm(Field field, std::vector<K5Elem> entries) : field_(field), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("DiagForm: dimension must be at least 1");
  for (const auto& e : entries_) {
    if (e.is_zero()) throw Error("DiagForm: zero entry makes the form singular");
    check_entry_field(e, field_);
  }
}

K5Elem DiagForm::determinant() const {
  K5Elem det(1);
  for (const auto& e : entries_) det *= e;
  return det;
}

Form DiagForm::to_form() const { return {field_, KMatrix::diagonal(entries_)}; }

DiagForm parse_diag(std::string_view text, Field field) {
  std::vector<K5Elem> entries;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (token.find_first_not_of(" \t") == std::string_view::npos)
      throw Error("empty entry in form \"" + std::string(text) + "\"");
    K5Elem v = parse_k5(token);
    if (field == Field::Q && !v.is_rational())
      throw Error("entry \"" + std::string(token) + "\" is not rational but the form is over Q");
    if (v.is_zero()) throw Error("entry \"" + std::string(token) + "\" is zero; the form would be singular");
    entries.push_back(std::move(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return {field, std::move(entries)};
}

std::string to_string(const DiagForm& d) {
  std::string out = "<";
  for (std::size_t i = 0; i < d.dim(); ++i) {
    if (i > 0) out += ",";
    out += to_string(d[i]);
  }
  return out + ">";
}

DiagForm diag_q(std::initializer_list<long> entries) {
  std::vector<K5Elem> v;
  for (long e : entries) v.emplace_back(e);
  return {Field::Q, std::move(v)};
}

Form orthogonal_sum(const Form& f, const Form& g) {
  if (f.field() != g.field()) throw Error("orthogonal_sum: forms live over different fields");
  const std::size_t n = f.dim(), m = g.dim();
  KMatrix s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = f.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = g.gram()(i, j);
  return {f.field(), std::move(s)};
}

DiagForm orthogonal_sum(const DiagForm& f, const DiagForm& g) {
  if (f.field() != g.field()) throw Error("orthogonal_sum: forms live over different fields");
  std::vector<K5Elem> e = f.entries();
  e.insert(e.end(), g.entries().begin(), g.entries().end());
  return {f.field(), std::move(e)};
}

namespace {

// Congruence step on a symmetric matrix: column j += c * column i, then the
// matching row operation; T tracks the accumulated column operations.
void add_multiple(KMatrix& a, KMatrix& t, std::size_t target, std::size_t source, const K5Elem& c) {
  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) a(r, target) += c * a(r, source);
  for (std::size_t k = 0; k < n; ++k) a(target, k) += c * a(source, k);
  for (std::size_t r = 0; r < n; ++r) t(r, target) += c * t(r, source);
}

Diagonalization diagonalize_natural(const Form& f) {
  const std::size_t n = f.dim();
  KMatrix a = f.gram();
  KMatrix t = KMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).is_zero()) {
      std::size_t j = i + 1;
      while (j < n && a(i, j).is_zero()) ++j;
      if (j == n) throw Error("diagonalize: singular form");
      // new pivot a_ii + 2c a_ij + c^2 a_jj with a_ii = 0
      const K5Elem plus = K5Elem(2) * a(i, j) + a(j, j);
      add_multiple(a, t, i, j, plus.is_zero() ? K5Elem(-1) : K5Elem(1));
    }
    const K5Elem pivot_inv = a(i, i).inverse();
    for (std::size_t k = i + 1; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      add_multiple(a, t, k, i, -(a(i, k) * pivot_inv));
    }
  }
  std::vector<K5Elem> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  DiagForm diag(f.field(), std::move(d));
  if (!(t.transpose() * f.gram() * t == diag.to_form().gram()))
    throw Error("diagonalize: congruence certificate failed");
  return {std::move(diag), std::move(t)};
}

}  // namespace

Diagonalization diagonalize(const Form& f, PivotOrder order) {
  if (order == PivotOrder::Natural) return diagonalize_natural(f);
  const std::size_t n = f.dim();
  KMatrix perm(n, n);
  for (std::size_t i = 0; i < n; ++i) perm(i, n - 1 - i) = K5Elem(1);
  Form reversed(f.field(), perm.transpose() * f.gram() * perm);
  Diagonalization inner = diagonalize_natural(reversed);
  KMatrix t = perm * inner.transform;
  if (!(t.transpose() * f.gram() * t == inner.diag.to_form().gram()))
    throw Error("diagonalize: congruence certificate failed");
  return {std::move(inner.diag), std::move(t)};
}

Signature signature_at(const DiagForm& d, Embedding e) {
  if (d.field() == Field::Q && e == Embedding::Tau)
    throw Error("signature_at: a form over Q has only the identity embedding");
  Signature s;
  for (const auto& x : d.entries()) (sign_at(x, e) > 0 ? s.plus : s.minus) += 1;
  return s;
}

Signature signature_at(const Form& f, Embedding e) {
  if (f.field() == Field::Q && e == Embedding::Tau)
    throw Error("signature_at: a form over Q has only the identity embedding");
  if (f.gram().is_diagonal()) {
    std::vector<K5Elem> d;
    for (std::size_t i = 0; i < f.dim(); ++i) d.push_back(f.gram()(i, i));
    return signature_at(DiagForm(f.field(), std::move(d)), e);
  }
  return signature_at(diagonalize(f).diag, e);
}

namespace {

K5Elem square_class_rep(const K5Elem& det, Field field) {
  if (field == Field::Q) {
    const Rat& r = det.a();
    return K5Elem(squarefree_part(Int(r.get_num() * r.get_den())));
  }
  // phi-basis coordinates, scaled by a square to be integral
  const Rat x = det.a() - det.b();
  const Rat y = 2 * det.b();
  Int den;
  mpz_lcm(den.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  Int X = x.get_num() * (den / x.get_den());
  Int Y = y.get_num() * (den / y.get_den());
  Int g;
  mpz_gcd(g.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
  X /= g;
  Y /= g;
  const Int content = squarefree_part(Int(g * den));
  return OInt(Int(X * content), Int(Y * content)).to_k5();
}

}  // namespace

K5Elem det_class(const DiagForm& d) { return square_class_rep(d.determinant(), d.field()); }

K5Elem det_class(const Form& f) { return square_class_rep(f.determinant(), f.field()); }

std::optional<K5Elem> sqrt_in_field(const K5Elem& x, Field field) {
  if (x.is_zero()) return K5Elem(0);
  if (x.is_rational()) {
    if (is_square(x.a())) return K5Elem(rational_sqrt(x.a()));
    if (field == Field::K5 && is_square(Rat(x.a() / 5))) return K5Elem(Rat(0), rational_sqrt(Rat(x.a() / 5)));
    return std::nullopt;
  }
  if (field == Field::Q) return std::nullopt;
  // (c + d s5)^2 = x  <=>  c^2 + 5 d^2 = a, 2cd = b, so c^2 = (a +- sqrt(a^2 - 5b^2)) / 2.
  const Rat n = x.norm();
  if (!is_square(n)) return std::nullopt;
  const Rat root_n = rational_sqrt(n);
  for (const Rat& c2 : {Rat((x.a() + root_n) / 2), Rat((x.a() - root_n) / 2)}) {
    if (sgn(c2) <= 0 || !is_square(c2)) continue;
    const Rat c = rational_sqrt(c2);
    const Rat d = x.b() / (2 * c);
    K5Elem s(c, d);
    if (s * s == x) return s;
  }
  return std::nullopt;
}

bool same_square_class(const K5Elem& a, const K5Elem& b, Field field) {
  if (a.is_zero() || b.is_zero()) throw Error("same_square_class: zero is not in any square class");
  if (field == Field::Q && !(a.is_rational() && b.is_rational()))
    throw Error("same_square_class: irrational element over Q");
  return sqrt_in_field(a * b, field).has_value();
}

bool three_squares_representable(const Int& d) {
  if (d < 1) throw Error("three_squares_representable: d must be positive");
  Int m = d;
  while (mpz_divisible_ui_p(m.get_mpz_t(), 4) != 0) m /= 4;
  return mpz_fdiv_ui(m.get_mpz_t(), 8) != 7;
}

std::optional<bool> represents_zero_K5(const DiagForm& d) {
  if (d.field() != Field::K5) throw Error("represents_zero_K5: form is not over K5");
  bool indefinite_everywhere = true;
  for (Embedding e : {Embedding::Identity, Embedding::Tau}) {
    const Signature s = signature_at(d, e);
    if (s.plus == 0 || s.minus == 0) return false;
    indefinite_everywhere = indefinite_everywhere && s.plus > 0 && s.minus > 0;
  }
  if (d.dim() >= 5 && indefinite_everywhere) return true;
  return std::nullopt;
}

}  // namespace formhasse
