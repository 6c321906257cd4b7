#pragma once

// Named form families, the Kleinian classification of <1,a,b,c>, the prime
// set P, and bundled verification reports.

#include <string>
#include <string_view>
#include <vector>

#include "formhasse/exact.hpp"
#include "formhasse/localglobal.hpp"
#include "formhasse/qforms.hpp"

namespace formhasse {

/// Order of the finite Coxeter group E6, 2^7 * 3^4 * 5.
inline constexpr long kE6Order = 51840;

namespace family {

DiagForm p_d_bianchi(long d);  // <d,1,1,-1>
DiagForm q_d_7(long d);        // <d,d,d,d,1,1,-1>
DiagForm p_d_cc(long d);       // <1,1,1,-d>
DiagForm q_d_5(long d);        // <d,1,1,1,-d>
DiagForm f_n(long n);          // <1,...,1,-1>, n+1 entries
DiagForm form_24cell();        // f_4
DiagForm form_120cell();       // <1,1,1,1,-phi>
DiagForm form_6dim();          // f_6
DiagForm form_swd();           // <1,1,1,-1-2*s5>
DiagForm p_pi(const OInt& pi);  // <1,1,1,pi>
DiagForm q_pi(const OInt& pi);  // <-pi*phi,1,1,1,pi>

/// Builds a family member by name with an integer parameter (ignored by the
/// parameterless constructors).
DiagForm by_name(std::string_view name, long parameter = 0);

}  // namespace family

/// Invariants of SO_0(<1,a,b,c>; Z) as a Kleinian group.
struct KleinianClass {
  Int field_disc;             // squarefree part of abc; trace field Q(sqrt(field_disc))
  std::pair<Int, Int> symbol;  // (-ac, -bc)
  bool cocompact = false;
};

KleinianClass classify_kleinian(const Int& a, const Int& b, const Int& c);

/// Accepts any integral quaternary form with one negative entry and a
/// positive entry equal to 1, reordered to <1,a,b,c>.
KleinianClass classify_kleinian(const DiagForm& form);

enum class Commensurability { Incommensurable, Indeterminate };

/// Distinct trace fields separate commensurability classes; equal fields
/// are reported as indeterminate.
Commensurability compare_commensurability(const KleinianClass& x, const KleinianClass& y);

/// Each d prime and 7 mod 8. True iff every <1,1,1,-d> is cocompact and the
/// trace fields are pairwise distinct.
bool incommensurable_family_check(const std::vector<long>& ds);

bool in_prime_set_P(const Int& q);

struct PrimeSetPEntry {
  Int q;
  PrimeK5 prime;  // prime.pi is the normalized generator
};

std::vector<PrimeSetPEntry> prime_set_P_entries(long limit);

/// The first `count` entries of P in increasing order.
std::vector<PrimeSetPEntry> first_prime_set_P_entries(std::size_t count);

struct ReportItem {
  std::string claim;
  std::string computed;
  std::string expected;
  bool ok = false;
};

struct Report {
  std::string section;
  std::vector<ReportItem> items;
  bool passed() const;
};

struct VerifyOptions {
  long dmax = 300;
  std::int64_t prime_bound = kDefaultPrimeBound;
};

const std::vector<std::string>& paper_sections();

Report verify_paper(std::string_view section, const VerifyOptions& opts = {});

/// All sections, run concurrently, returned in section order.
std::vector<Report> verify_all(const VerifyOptions& opts = {});

}  // namespace formhasse
