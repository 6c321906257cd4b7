#include "formhasse/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "formhasse/arithgroups.hpp"
#include "formhasse/json_io.hpp"
#include "formhasse/witness.hpp"

namespace formhasse::cli {

namespace {

using jsonio::json;

struct Usage : Error {
  using Error::Error;
};

std::int64_t prime_bound_from_env() {
  const char* raw = std::getenv("FORMHASSE_PRIME_BOUND");
  if (raw == nullptr || *raw == '\0') return kDefaultPrimeBound;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 2) throw Usage(std::string("FORMHASSE_PRIME_BOUND: bad value \"") + raw + "\"");
  return v;
}

std::string sig(const Signature& s) { return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")"; }

template <class Place>
std::string set_text(const RamSet<Place>& s) {
  std::string out = "{";
  for (const auto& v : s.places) out += (out.size() > 1 ? "," : "") + to_string(v);
  return out + "}";
}

struct Options {
  bool json = false;
  std::string field = "Q";
  std::string lhs, rhs, form, a, b, place, section;
  long limit = 100;
  long bound = 12;
  long dmax = 300;
  std::int64_t prime_bound = kDefaultPrimeBound;
};

int cmd_equiv(const Options& o, std::ostream& out) {
  const Field field = parse_field(o.field);
  const DiagForm f = parse_diag(o.lhs, field);
  const DiagForm g = parse_diag(o.rhs, field);
  if (f.dim() != g.dim())
    throw Usage("dimension mismatch: lhs has " + std::to_string(f.dim()) + " entries, rhs has " + std::to_string(g.dim()));
  const Comparison c = compare_forms(f.to_form(), g.to_form(), o.prime_bound);
  if (o.json) {
    out << json{{"field", to_string(field)},
                {"lhs", to_string(f)},
                {"rhs", to_string(g)},
                {"equivalent", c.equivalent},
                {"differing", c.equivalent ? json(nullptr) : json(c.differing)}}
               .dump(2)
        << "\n";
  } else if (c.equivalent) {
    out << "EQUIVALENT\n";
  } else {
    out << "INEQUIVALENT (" << c.differing << ")\n";
  }
  return c.equivalent ? kOk : kNegative;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  const Field field = parse_field(o.field);
  const DiagForm f = parse_diag(o.form, field);
  const std::string det = to_string(det_class(f));
  const Signature id = signature_at(f, Embedding::Identity);
  if (field == Field::Q) {
    const RamSetQ s = hasse_Q(f, o.prime_bound);
    if (o.json) {
      out << json{{"field", "Q"}, {"form", to_string(f)}, {"det_class", det}, {"signature", {{"identity", jsonio::signature_to_json(id)}}},
                  {"ramification", jsonio::ramset_to_json(s)}}
                 .dump(2)
          << "\n";
    } else {
      out << "form         " << to_string(f) << "\n"
          << "det class    " << det << "\n"
          << "signature    " << sig(id) << "\n"
          << "ramification " << set_text(s) << "\n";
    }
    return kOk;
  }
  const Signature tau = signature_at(f, Embedding::Tau);
  const RamSetK5 s = hasse_K5(f, o.prime_bound);
  if (o.json) {
    out << json{{"field", "K5"},
                {"form", to_string(f)},
                {"det_class", det},
                {"signature",
                 {{"identity", jsonio::signature_to_json(id)}, {"tau", jsonio::signature_to_json(tau)}}},
                {"ramification", jsonio::ramset_to_json(s)}}
               .dump(2)
        << "\n";
  } else {
    out << "form          " << to_string(f) << "\n"
        << "det class     " << det << "\n"
        << "signature     " << sig(id) << "\n"
        << "signature tau " << sig(tau) << "\n"
        << "ramification  " << set_text(s) << "\n";
  }
  return kOk;
}

Int parse_prime_token(const std::string& token) {
  Int p;
  if (token.empty() || p.set_str(token, 10) != 0 || p < 2 || !is_prime(p))
    throw Usage("place \"" + token + "\" is not real, real-tau, a prime or pi:<element>");
  return p;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  const Field field = parse_field(o.field);
  const K5Elem a = parse_k5(o.a), b = parse_k5(o.b);
  if (a.is_zero() || b.is_zero()) throw Usage("hilbert: arguments must be nonzero");
  std::vector<std::pair<std::string, int>> rows;
  if (field == Field::Q) {
    if (!a.is_rational()) throw Usage("entry \"" + o.a + "\" is not rational but the field is Q");
    if (!b.is_rational()) throw Usage("entry \"" + o.b + "\" is not rational but the field is Q");
    if (o.place.empty()) {
      for (const auto& [v, s] : hilbert_table_Q(a.a(), b.a(), o.prime_bound)) rows.emplace_back(to_string(v), s);
    } else if (o.place == "real") {
      rows.emplace_back("real", hilbert_Q(a.a(), b.a(), PlaceQ::real()));
    } else {
      const PlaceQ v = PlaceQ::finite(parse_prime_token(o.place));
      rows.emplace_back(to_string(v), hilbert_Q(a.a(), b.a(), v));
    }
  } else {
    const auto table = hilbert_table_K5(a, b, o.prime_bound);
    std::optional<PlaceK5> want;
    if (o.place == "real") {
      want = PlaceK5::real(Embedding::Identity);
    } else if (o.place == "real-tau") {
      want = PlaceK5::real(Embedding::Tau);
    } else if (o.place == "dyadic" || o.place == "2") {
      want = PlaceK5::dyadic();
    } else if (o.place.rfind("pi:", 0) == 0) {
      const auto g = OInt::from_k5(parse_k5(o.place.substr(3)));
      if (!g) throw Usage("place \"" + o.place + "\" is not an algebraic integer");
      want = PlaceK5::odd(prime_of_generator(*g));
    } else if (!o.place.empty()) {
      const auto above = primes_above(parse_prime_token(o.place));
      if (above.size() != 1) throw Usage("place \"" + o.place + "\" splits in K5; name one prime as pi:<element>");
      want = PlaceK5::odd(above[0]);
    }
    for (const auto& [v, s] : table) {
      if (!want || v == *want) rows.emplace_back(to_string(v), s);
    }
    if (want && rows.empty()) rows.emplace_back(to_string(*want), hilbert_K5(a, b, *want));
  }
  if (o.json) {
    json symbols = json::array();
    for (const auto& [v, s] : rows) symbols.push_back({{"place", v}, {"value", std::to_string(s)}});
    out << json{{"field", to_string(field)}, {"a", to_string(a)}, {"b", to_string(b)}, {"symbols", symbols}}.dump(2) << "\n";
  } else {
    for (const auto& [v, s] : rows) out << std::left << std::setw(16) << v << (s > 0 ? "+1" : "-1") << "\n";
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const KleinianClass k = classify_kleinian(parse_diag(o.form, Field::Q));
  out << jsonio::kleinian_to_json(k).dump(o.json ? 2 : -1) << "\n";
  return kOk;
}

int cmd_primes(const Options& o, std::ostream& out) {
  if (o.limit < 2) throw Usage("--limit must be at least 2");
  const auto entries = prime_set_P_entries(o.limit);
  if (o.json) {
    json rows = json::array();
    for (const auto& e : entries) rows.push_back(jsonio::prime_entry_to_json(e));
    out << json{{"limit", std::to_string(o.limit)}, {"entries", rows}}.dump(2) << "\n";
  } else {
    out << std::left << std::setw(8) << "q" << std::setw(16) << "pi" << std::setw(8) << "norm" << "phi\n";
    for (const auto& e : entries)
      out << std::left << std::setw(8) << e.q.get_str() << std::setw(16) << to_string(e.prime.pi) << std::setw(8)
          << norm(e.prime.pi).get_str() << e.prime.root << "\n";
  }
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  if (o.bound < 1) throw Usage("--bound must be positive");
  const DiagForm f = parse_diag(o.lhs, Field::Q);
  const DiagForm g = parse_diag(o.rhs, Field::Q);
  if (f.dim() != g.dim())
    throw Usage("dimension mismatch: lhs has " + std::to_string(f.dim()) + " entries, rhs has " + std::to_string(g.dim()));
  const auto w = find_witness(f, g, o.bound);
  if (!w) {
    if (o.json) out << json{{"found", false}}.dump(2) << "\n";
    else out << "NOT-FOUND\n";
    return kNotFound;
  }
  out << jsonio::witness_to_json(*w).dump(o.json ? 2 : -1) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.dmax < 1) throw Usage("--dmax must be positive");
  const VerifyOptions vo{o.dmax, o.prime_bound};
  std::vector<Report> reports;
  if (o.section.empty()) {
    reports = verify_all(vo);
  } else {
    const auto& names = paper_sections();
    if (std::find(names.begin(), names.end(), o.section) == names.end())
      throw Usage("unknown section \"" + o.section + "\"");
    reports.push_back(verify_paper(o.section, vo));
  }
  const bool all = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  if (o.json) {
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(jsonio::report_to_json(r));
    out << json{{"status", all ? "pass" : "fail"}, {"reports", rs}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.section << "\n";
      for (const auto& i : r.items)
        out << "  [" << (i.ok ? "ok" : "FAIL") << "] " << i.claim << ": " << i.computed
            << (i.ok ? "" : " (expected " + i.expected + ")") << "\n";
    }
  }
  return all ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact quadratic form invariants over Q and Q(sqrt5)", "formhasse"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Emit JSON with exact string numerals");
  const auto field = CLI::IsMember({"Q", "K5"});

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two diagonal forms");
  equiv->add_option("--field", o.field)->check(field);
  equiv->add_option("--lhs", o.lhs)->required();
  equiv->add_option("--rhs", o.rhs)->required();

  auto* hasse = app.add_subcommand("hasse", "Determinant class, signatures and ramification set");
  hasse->add_option("--field", o.field)->check(field);
  hasse->add_option("--form", o.form)->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbols (a,b) at one place or all relevant places");
  hilbert->add_option("--field", o.field)->check(field);
  hilbert->add_option("--a", o.a)->required();
  hilbert->add_option("--b", o.b)->required();
  hilbert->add_option("--place", o.place, "p, real, real-tau, dyadic or pi:<element>");

  auto* classify = app.add_subcommand("classify", "Kleinian invariants of <1,a,b,c>");
  classify->add_option("--form", o.form)->required();

  auto* primes = app.add_subcommand("primes", "Members of the prime set P up to a limit");
  primes->add_option("--limit", o.limit)->required();

  auto* witness = app.add_subcommand("witness", "Search for an explicit rational equivalence");
  witness->add_option("--lhs", o.lhs)->required();
  witness->add_option("--rhs", o.rhs)->required();
  witness->add_option("--bound", o.bound)->capture_default_str();

  auto* verify = app.add_subcommand("verify-paper", "Run the bundled verification reports");
  std::string section_names;
  for (const auto& n : paper_sections()) section_names += (section_names.empty() ? "" : ", ") + n;
  verify->add_option("--section", o.section, "One of: " + section_names);
  verify->add_option("--dmax", o.dmax)->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  for (const auto& a : args) {
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "formhasse: unknown subcommand \"" << a << "\"\n";
      return kUsage;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "formhasse: " << e.what() << "\n";
    return kUsage;
  }

  try {
    o.prime_bound = prime_bound_from_env();
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (hasse->parsed()) return cmd_hasse(o, out);
    if (hilbert->parsed()) return cmd_hilbert(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (primes->parsed()) return cmd_primes(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "formhasse: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace formhasse::cli
