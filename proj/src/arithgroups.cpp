#include "formhasse/arithgroups.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include "formhasse/witness.hpp"

namespace formhasse {

namespace family {

namespace {

void require_squarefree_positive(long d, const char* who) {
  if (d < 1 || squarefree_part(Int(d)) != d)
    throw Error(std::string(who) + ": parameter " + std::to_string(d) + " must be a squarefree positive integer");
}

void require_normalized_prime(const OInt& pi, const char* who) {
  if (pi.is_zero() || sign_at(pi, Embedding::Identity) >= 0 || sign_at(pi, Embedding::Tau) <= 0)
    throw Error(std::string(who) + ": " + to_string(pi) + " must satisfy pi < 0 < tau(pi)");
  prime_of_generator(pi);  // throws unless (pi) is prime
}

}  // namespace

DiagForm p_d_bianchi(long d) {
  require_squarefree_positive(d, "p_d_bianchi");
  return diag_q({d, 1, 1, -1});
}

DiagForm q_d_7(long d) {
  require_squarefree_positive(d, "q_d_7");
  return diag_q({d, d, d, d, 1, 1, -1});
}

DiagForm p_d_cc(long d) {
  require_squarefree_positive(d, "p_d_cc");
  return diag_q({1, 1, 1, -d});
}

DiagForm q_d_5(long d) {
  require_squarefree_positive(d, "q_d_5");
  return diag_q({d, 1, 1, 1, -d});
}

DiagForm f_n(long n) {
  if (n < 1) throw Error("f_n: n must be positive");
  std::vector<K5Elem> e(static_cast<std::size_t>(n), K5Elem(1));
  e.emplace_back(-1);
  return {Field::Q, std::move(e)};
}

DiagForm form_24cell() { return f_n(4); }

DiagForm form_120cell() { return {Field::K5, {1, 1, 1, 1, -K5Elem::phi()}}; }

DiagForm form_6dim() { return f_n(6); }

DiagForm form_swd() { return {Field::K5, {1, 1, 1, parse_k5("-1-2*s5")}}; }

DiagForm p_pi(const OInt& pi) {
  require_normalized_prime(pi, "p_pi");
  return {Field::K5, {1, 1, 1, pi.to_k5()}};
}

DiagForm q_pi(const OInt& pi) {
  require_normalized_prime(pi, "q_pi");
  DiagForm q(Field::K5, {-(pi.to_k5() * K5Elem::phi()), 1, 1, 1, pi.to_k5()});
  if (!(signature_at(q, Embedding::Identity) == Signature{4, 1}) || !(signature_at(q, Embedding::Tau) == Signature{5, 0}))
    throw Error("q_pi: signatures are not (4,1) and (5,0)");
  return q;
}

DiagForm by_name(std::string_view name, long parameter) {
  if (name == "p_d_bianchi") return p_d_bianchi(parameter);
  if (name == "q_d_7") return q_d_7(parameter);
  if (name == "p_d_cc") return p_d_cc(parameter);
  if (name == "q_d_5") return q_d_5(parameter);
  if (name == "f_n") return f_n(parameter);
  if (name == "form_24cell") return form_24cell();
  if (name == "form_120cell") return form_120cell();
  if (name == "form_6dim") return form_6dim();
  if (name == "form_swd") return form_swd();
  throw Error("unknown form family \"" + std::string(name) + "\"");
}

}  // namespace family

// ------------------------------------------------------------ Kleinian

KleinianClass classify_kleinian(const Int& a, const Int& b, const Int& c) {
  if (!(a < 0 && b > 0 && c > 0)) throw Error("classify_kleinian: need a < 0 < b, c");
  KleinianClass out;
  out.field_disc = squarefree_part(Int(a * b * c));
  out.symbol = {Int(-a * c), Int(-b * c)};
  out.cocompact = !represents_zero_Q(DiagForm(Field::Q, {K5Elem(1), K5Elem(a), K5Elem(b), K5Elem(c)}));
  return out;
}

KleinianClass classify_kleinian(const DiagForm& form) {
  if (form.field() != Field::Q || form.dim() != 4) throw Error("classify: need a quaternary form over Q");
  std::vector<Int> e;
  for (const auto& x : form.entries()) {
    if (x.a().get_den() != 1) throw Error("classify: entries must be integers");
    e.push_back(x.a().get_num());
  }
  const auto negatives = std::count_if(e.begin(), e.end(), [](const Int& x) { return x < 0; });
  if (negatives != 1) throw Error("classify: need exactly one negative entry (signature (3,1))");
  const auto one = std::find(e.begin(), e.end(), Int(1));
  if (one == e.end()) throw Error("classify: need an entry equal to 1");
  const std::size_t one_at = static_cast<std::size_t>(one - e.begin());
  Int a;
  std::vector<Int> rest;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == one_at) continue;
    if (e[i] < 0) a = e[i];
    else rest.push_back(e[i]);
  }
  return classify_kleinian(a, rest[0], rest[1]);
}

Commensurability compare_commensurability(const KleinianClass& x, const KleinianClass& y) {
  return x.field_disc != y.field_disc ? Commensurability::Incommensurable : Commensurability::Indeterminate;
}

bool incommensurable_family_check(const std::vector<long>& ds) {
  std::set<Int> fields;
  bool ok = true;
  for (long d : ds) {
    if (!is_prime(static_cast<std::uint64_t>(std::max(d, 0L))))
      throw Error("incommensurable_family_check: " + std::to_string(d) + " is not prime");
    if (d % 8 != 7) throw Error("incommensurable_family_check: " + std::to_string(d) + " is not 7 mod 8");
    const KleinianClass k = classify_kleinian(Int(-d), 1, 1);
    ok = ok && k.cocompact && fields.insert(k.field_disc).second;
  }
  return ok;
}

// ------------------------------------------------------------ prime set P

bool in_prime_set_P(const Int& q) {
  if (!is_prime(q)) throw Error("in_prime_set_P: " + q.get_str() + " is not prime");
  if (q == 2 || q == 5) return false;  // the primes dividing disc(x^4 - x^2 - 1) = -400
  const unsigned long r5 = mpz_fdiv_ui(q.get_mpz_t(), 5);
  if (r5 == 2 || r5 == 3) return false;
  const auto p = static_cast<std::uint64_t>(q.get_ui());
  const std::uint64_t s = sqrt_mod(5, p);
  const std::uint64_t inv2 = (p + 1) / 2;
  for (std::uint64_t root : {mul_mod((1 + s) % p, inv2, p), mul_mod((1 + p - s) % p, inv2, p)}) {
    if (legendre(Int(static_cast<unsigned long>(root)), q) == 1) return true;
  }
  return false;
}

std::vector<PrimeSetPEntry> prime_set_P_entries(long limit) {
  if (limit < 2) throw Error("prime_set_P_entries: limit must be at least 2");
  std::vector<PrimeSetPEntry> out;
  for (long q = 2; q <= limit; ++q) {
    if (!is_prime(static_cast<std::uint64_t>(q)) || !in_prime_set_P(Int(q))) continue;
    out.push_back({Int(q), prime_with_square_phi(Int(q))});
  }
  return out;
}

std::vector<PrimeSetPEntry> first_prime_set_P_entries(std::size_t count) {
  std::vector<PrimeSetPEntry> out;
  for (long q = 2; out.size() < count; ++q) {
    if (!is_prime(static_cast<std::uint64_t>(q)) || !in_prime_set_P(Int(q))) continue;
    out.push_back({Int(q), prime_with_square_phi(Int(q))});
  }
  return out;
}

// ------------------------------------------------------------ reports

bool Report::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.ok; });
}

namespace {

std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const Signature& s) { return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")"; }

template <class Place>
std::string str(const RamSet<Place>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s.places) {
    if (!first) out += ",";
    out += to_string(v);
    first = false;
  }
  return out + "}";
}

void add(Report& r, std::string claim, std::string computed, std::string expected) {
  const bool ok = computed == expected;
  r.items.push_back({std::move(claim), std::move(computed), std::move(expected), ok});
}

std::vector<long> primes_7_mod_8(long limit) {
  std::vector<long> out;
  for (long d = 7; d <= limit; d += 8)
    if (is_prime(static_cast<std::uint64_t>(d))) out.push_back(d);
  return out;
}

bool is_squarefree(long d) { return squarefree_part(Int(d)) == d; }

Report ad_sweep(const VerifyOptions& o) {
  Report r{"lemma44", {}};
  long count = 0, witnessed = 0, det_ok = 0, invariant_ok = 0;
  const DiagForm f = family::f_n(6);
  for (long d = 1; d <= o.dmax; ++d) {
    if (!is_squarefree(d)) continue;
    ++count;
    const Witness w = build_Ad(d);  // throws unless A_d F A_d^t = Q_d
    ++witnessed;
    if (w.determinant() == K5Elem(d * d)) ++det_ok;
    const DiagForm q = family::q_d_7(d);
    if (equivalent_Q(q, f, o.prime_bound) && det_class(q) == K5Elem(-1) && hasse_Q(q, o.prime_bound).empty())
      ++invariant_ok;
  }
  const std::string all = std::to_string(count) + "/" + std::to_string(count);
  add(r, "A_d F A_d^t = Q_d for squarefree d <= " + std::to_string(o.dmax), std::to_string(witnessed) + "/" + std::to_string(count), all);
  add(r, "det A_d = d^2", std::to_string(det_ok) + "/" + std::to_string(count), all);
  add(r, "<d,d,d,d,1,1,-1> ~ <1,1,1,1,1,1,-1> with det class -1 and empty Hasse set",
      std::to_string(invariant_ok) + "/" + std::to_string(count), all);
  const FourSquares fs = four_squares(7);
  add(r, "four squares of 7", std::to_string(fs.w) + "," + std::to_string(fs.x) + "," + std::to_string(fs.y) + "," + std::to_string(fs.z),
      "2,1,1,1");
  add(r, "s(f) for f = <1,1,1,1,1,1,-1>", str(hasse_Q(f, o.prime_bound)), "{}");
  return r;
}

Report five_dim_sweep(const VerifyOptions& o) {
  Report r{"lemma64", {}};
  const DiagForm f = family::f_n(4);
  for (long d : primes_7_mod_8(o.dmax)) {
    const DiagForm q = family::q_d_5(d);
    const std::string tag = " (d=" + std::to_string(d) + ")";
    add(r, "det class of <d,1,1,1,-d>" + tag, to_string(det_class(q)), "-1");
    add(r, "Hasse set of <d,1,1,1,-d>" + tag, str(hasse_Q(q, o.prime_bound)), "{}");
    add(r, "<d,1,1,1,-d> ~ <1,1,1,1,-1>" + tag, str(equivalent_Q(q, f, o.prime_bound)), "true");
    add(r, "<1,1,1,-d> cocompact" + tag, str(classify_kleinian(family::p_d_cc(d)).cocompact), "true");
    if (d <= 100) {
      const auto w = find_witness(f, q, 12);
      add(r, "explicit witness f -> q_d with bound 12" + tag, w ? "found" : "not found", "found");
    }
  }
  add(r, "Hasse set of <1,1,1,1,-1>", str(hasse_Q(f, o.prime_bound)), "{}");
  return r;
}

Report normalization(const VerifyOptions&) {
  Report r{"lemma73", {}};
  const std::vector<OInt> samples{OInt(1), OInt::phi(), OInt(Int(5), Int(-4)), OInt(Int(1), Int(-4)), OInt(Int(7), Int(0)),
                                  OInt::sqrt5(), OInt(Int(3), Int(2)), OInt(Int(-2), Int(-9))};
  for (const auto& v : samples) {
    const OInt t = normalize_generator(v);
    const auto q = exact_div(t, v);
    const std::string signs = std::string(sign_at(t, Embedding::Identity) < 0 ? "-" : "+") +
                              (sign_at(t, Embedding::Tau) > 0 ? "+" : "-");
    add(r, "normalized generator of (" + to_string(v) + ") = " + to_string(t) + " has signs (-,+)", signs, "-+");
    add(r, "(" + to_string(t) + ") = (" + to_string(v) + ")", str(q.has_value() && q->is_unit()), "true");
  }
  return r;
}

Report phi_squares(const VerifyOptions&) {
  Report r{"lemma74", {}};
  for (const auto& e : first_prime_set_P_entries(10)) {
    add(r, "phi is a square mod " + to_string(e.prime.pi) + " (q=" + e.q.get_str() + ")",
        str(residue_square(K5Elem::phi(), e.prime)), "true");
  }
  return r;
}

Report phi_symbols(const VerifyOptions& o) {
  Report r{"lemma75", {}};
  for (const auto& e : first_prime_set_P_entries(10)) {
    const auto table = hilbert_table_K5(K5Elem::phi(), e.prime.pi.to_k5(), o.prime_bound);
    std::string bad;
    for (const auto& [v, s] : table)
      if (s != 1) bad += (bad.empty() ? "" : ",") + to_string(v);
    add(r, "(phi, " + to_string(e.prime.pi) + ") unramified at every place (q=" + e.q.get_str() + ")",
        "{" + bad + "}", "{}");
  }
  return r;
}

Report q_pi_class(const VerifyOptions& o) {
  Report r{"lemma76", {}};
  const DiagForm q = family::form_120cell();
  add(r, "det class of <1,1,1,1,-phi> is -phi", str(same_square_class(det_class(q), -K5Elem::phi(), Field::K5)), "true");
  add(r, "s(<1,1,1,1,-phi>)", str(hasse_K5(q, o.prime_bound)), "{}");
  for (const auto& e : first_prime_set_P_entries(10)) {
    const DiagForm qp = family::q_pi(e.prime.pi);
    const std::string tag = " (pi=" + to_string(e.prime.pi) + ")";
    add(r, "signatures of q_pi" + tag,
        str(signature_at(qp, Embedding::Identity)) + " " + str(signature_at(qp, Embedding::Tau)), "(4,1) (5,0)");
    add(r, "s(q_pi)" + tag, str(hasse_K5(qp, o.prime_bound)), "{}");
    add(r, "q_pi ~ <1,1,1,1,-phi>" + tag, str(equivalent_K5(qp, q, o.prime_bound)), "true");
  }
  return r;
}

Report three_squares(const VerifyOptions&) {
  Report r{"thm62", {}};
  const long limit = 10000;
  std::vector<bool> sum3(limit + 1, false);
  for (long a = 0; a * a <= limit; ++a)
    for (long b = a; a * a + b * b <= limit; ++b)
      for (long c = b; a * a + b * b + c * c <= limit; ++c) sum3[a * a + b * b + c * c] = true;
  long agree = 0;
  for (long d = 1; d <= limit; ++d)
    if (three_squares_representable(Int(d)) == sum3[d]) ++agree;
  add(r, "three-square criterion matches exhaustive search for d <= 10000", std::to_string(agree), std::to_string(limit));
  add(r, "7 is a sum of three squares", str(three_squares_representable(7)), "false");
  add(r, "28 is a sum of three squares", str(three_squares_representable(28)), "false");
  return r;
}

Report norm_11(const VerifyOptions& o) {
  Report r{"cox-11", {}};
  const OInt pi = *OInt::from_k5(parse_k5("3-2*s5"));
  add(r, "norm(3-2*s5)", norm(pi).get_str(), "-11");
  add(r, "3-2*s5 < 0 < tau(3-2*s5)", str(sign_at(pi, Embedding::Identity) < 0 && sign_at(pi, Embedding::Tau) > 0), "true");
  add(r, "11 in P", str(in_prime_set_P(11)), "true");
  const PrimeK5 pr = prime_of_generator(pi);
  add(r, "phi is a square mod 3-2*s5", str(residue_square(K5Elem::phi(), pr)), "true");
  const DiagForm p = family::p_pi(pi);
  add(r, "signatures of <1,1,1,3-2*s5>",
      str(signature_at(p, Embedding::Identity)) + " " + str(signature_at(p, Embedding::Tau)), "(3,1) (4,0)");
  const DiagForm q = family::q_pi(pi);
  add(r, "s(q_pi)", str(hasse_K5(q, o.prime_bound)), "{}");
  add(r, "q_pi ~ <1,1,1,1,-phi>", str(equivalent_K5(q, family::form_120cell(), o.prime_bound)), "true");
  return r;
}

Report norm_19(const VerifyOptions& o) {
  Report r{"swd-19", {}};
  const OInt pi = *OInt::from_k5(parse_k5("-1-2*s5"));
  add(r, "|norm(-1-2*s5)|", Int(abs(norm(pi))).get_str(), "19");
  add(r, "19 in P", str(in_prime_set_P(19)), "true");
  add(r, "-1-2*s5 < 0 < tau(-1-2*s5)", str(sign_at(pi, Embedding::Identity) < 0 && sign_at(pi, Embedding::Tau) > 0), "true");
  const DiagForm f = family::form_swd();
  add(r, "signatures of <1,1,1,-1-2*s5>",
      str(signature_at(f, Embedding::Identity)) + " " + str(signature_at(f, Embedding::Tau)), "(3,1) (4,0)");
  add(r, "<1,1,1,-1-2*s5> anisotropic (definite at tau)", str(represents_zero_K5(f) == std::optional<bool>(false)), "true");
  add(r, "q_pi ~ <1,1,1,1,-phi>", str(equivalent_K5(family::q_pi(pi), family::form_120cell(), o.prime_bound)), "true");
  return r;
}

using SectionFn = std::function<Report(const VerifyOptions&)>;

const std::map<std::string, SectionFn, std::less<>>& section_table() {
  static const std::map<std::string, SectionFn, std::less<>> table{
      {"lemma44", ad_sweep},      {"lemma64", five_dim_sweep}, {"lemma73", normalization},
      {"lemma74", phi_squares},   {"lemma75", phi_symbols},    {"lemma76", q_pi_class},
      {"thm62", three_squares},   {"cox-11", norm_11},         {"swd-19", norm_19}};
  return table;
}

}  // namespace

const std::vector<std::string>& paper_sections() {
  static const std::vector<std::string> names{"lemma44", "lemma64", "lemma73", "lemma74", "lemma75",
                                              "lemma76", "thm62",   "cox-11",  "swd-19"};
  return names;
}

Report verify_paper(std::string_view section, const VerifyOptions& opts) {
  const auto& table = section_table();
  const auto it = table.find(section);
  if (it == table.end()) throw Error("unknown section \"" + std::string(section) + "\"");
  return it->second(opts);
}

std::vector<Report> verify_all(const VerifyOptions& opts) {
  std::vector<std::future<Report>> jobs;
  for (const auto& name : paper_sections())
    jobs.push_back(std::async(std::launch::async, [name, opts] { return verify_paper(name, opts); }));
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace formhasse
