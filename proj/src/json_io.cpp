#include "formhasse/json_io.hpp"

namespace formhasse::jsonio {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("JSON: missing key \"") + key + "\"");
  return j.at(key);
}

std::string text(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw Error(std::string("JSON: \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Int integer(const json& j, const char* key) {
  const std::string s = text(j, key);
  Int out;
  if (out.set_str(s, 10) != 0) throw Error("JSON: \"" + s + "\" is not an integer");
  return out;
}

}  // namespace

json matrix_to_json(const KMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

KMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error("JSON: matrix must be a non-empty array of rows");
  KMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw Error("JSON: ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!j[r][c].is_string()) throw Error("JSON: matrix entries must be strings");
      m(r, c) = parse_k5(j[r][c].get<std::string>());
    }
  }
  return m;
}

json witness_to_json(const Witness& w) {
  return {{"found", true},
          {"field", to_string(w.source().field())},
          {"matrix", matrix_to_json(w.matrix())},
          {"determinant", to_string(w.determinant())}};
}

json report_to_json(const Report& r) {
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"claim", i.claim}, {"computed", i.computed}, {"expected", i.expected}, {"ok", i.ok}});
  return {{"section", r.section}, {"status", r.passed() ? "pass" : "fail"}, {"items", std::move(items)}};
}

Report report_from_json(const json& j) {
  Report r{text(j, "section"), {}};
  const json& items = field(j, "items");
  if (!items.is_array()) throw Error("JSON: \"items\" must be an array");
  for (const auto& i : items) {
    const json& ok = field(i, "ok");
    if (!ok.is_boolean()) throw Error("JSON: \"ok\" must be a boolean");
    r.items.push_back({text(i, "claim"), text(i, "computed"), text(i, "expected"), ok.get<bool>()});
  }
  const std::string status = text(j, "status");
  if (status != (r.passed() ? "pass" : "fail")) throw Error("JSON: status disagrees with items");
  return r;
}

json kleinian_to_json(const KleinianClass& k) {
  return {{"field_disc", k.field_disc.get_str()},
          {"symbol", {k.symbol.first.get_str(), k.symbol.second.get_str()}},
          {"cocompact", k.cocompact}};
}

KleinianClass kleinian_from_json(const json& j) {
  KleinianClass k;
  k.field_disc = integer(j, "field_disc");
  const json& s = field(j, "symbol");
  if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string())
    throw Error("JSON: \"symbol\" must be a pair of strings");
  k.symbol = {Int(s[0].get<std::string>()), Int(s[1].get<std::string>())};
  const json& c = field(j, "cocompact");
  if (!c.is_boolean()) throw Error("JSON: \"cocompact\" must be a boolean");
  k.cocompact = c.get<bool>();
  return k;
}

json prime_entry_to_json(const PrimeSetPEntry& e) {
  return {{"q", e.q.get_str()},
          {"pi", to_string(e.prime.pi)},
          {"norm", norm(e.prime.pi).get_str()},
          {"phi_root", std::to_string(e.prime.root)}};
}

json signature_to_json(const Signature& s) { return {std::to_string(s.plus), std::to_string(s.minus)}; }

}  // namespace formhasse::jsonio
