#pragma once

// JSON encodings. Every exact value is a string ("n/d", "a+b*s5"), never a
// float, so documents round-trip without loss.

#include <json.hpp>

#include "formhasse/arithgroups.hpp"
#include "formhasse/localglobal.hpp"
#include "formhasse/witness.hpp"

namespace formhasse::jsonio {

using nlohmann::json;

json matrix_to_json(const KMatrix& m);
KMatrix matrix_from_json(const json& j);

json witness_to_json(const Witness& w);

json report_to_json(const Report& r);
Report report_from_json(const json& j);

json kleinian_to_json(const KleinianClass& k);
KleinianClass kleinian_from_json(const json& j);

json prime_entry_to_json(const PrimeSetPEntry& e);

json signature_to_json(const Signature& s);

template <class Place>
json ramset_to_json(const RamSet<Place>& s) {
  json out = json::array();
  for (const auto& v : s.places) out.push_back(to_string(v));
  return out;
}

}  // namespace formhasse::jsonio
