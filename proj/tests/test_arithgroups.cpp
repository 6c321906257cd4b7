#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "formhasse/arithgroups.hpp"
#include "oracles.hpp"

using namespace formhasse;

TEST_CASE("E6 order") { CHECK(kE6Order == 128 * 81 * 5); }

TEST_CASE("families") {
  CHECK(family::f_n(6) == diag_q({1, 1, 1, 1, 1, 1, -1}));
  CHECK(family::form_24cell() == family::f_n(4));
  CHECK(family::form_6dim() == family::f_n(6));
  CHECK(family::p_d_bianchi(7) == diag_q({7, 1, 1, -1}));
  CHECK(family::q_d_7(3) == diag_q({3, 3, 3, 3, 1, 1, -1}));
  CHECK(family::p_d_cc(7) == diag_q({1, 1, 1, -7}));
  CHECK(family::q_d_5(7) == diag_q({7, 1, 1, 1, -7}));
  CHECK(family::form_120cell() == parse_diag("1,1,1,1,-phi", Field::K5));
  CHECK(family::form_swd()[3] == parse_k5("-1-2*s5"));
  const OInt pi = *OInt::from_k5(parse_k5("3-2*s5"));
  const DiagForm p = family::p_pi(pi);
  CHECK(signature_at(p, Embedding::Identity) == Signature{3, 1});
  CHECK(signature_at(p, Embedding::Tau) == Signature{4, 0});
  CHECK(family::q_pi(pi)[0] == -(pi.to_k5() * K5Elem::phi()));
  CHECK(family::by_name("q_d_5", 23) == family::q_d_5(23));
  CHECK(family::by_name("form_120cell") == family::form_120cell());
  CHECK_THROWS_AS(family::by_name("nosuch", 1), Error);
  CHECK_THROWS_AS(family::q_d_7(12), Error);
  CHECK_THROWS_AS(family::p_d_cc(0), Error);
  CHECK_THROWS_AS(family::f_n(0), Error);
  CHECK_THROWS_AS(family::p_pi(tau(pi)), Error);  // wrong signs
  CHECK_THROWS_AS(family::q_pi(OInt(-6)), Error);  // not prime
}

TEST_CASE("classify_kleinian") {
  const KleinianClass c7 = classify_kleinian(family::p_d_cc(7));
  CHECK(c7.field_disc == -7);
  CHECK(c7.cocompact);
  CHECK(c7.symbol == std::pair<Int, Int>{7, -1});
  for (long d : {1L, 2L, 3L, 5L, 7L, 11L, 15L}) {
    // <d,1,1,-1> read as <1, -1, 1, d>
    const KleinianClass b = classify_kleinian(family::p_d_bianchi(d));
    CHECK(b.field_disc == -d);
    CHECK_FALSE(b.cocompact);
  }
  const KleinianClass one = classify_kleinian(-1, 1, 1);
  CHECK(one.field_disc == -1);
  CHECK_FALSE(one.cocompact);
  CHECK(classify_kleinian(-12, 1, 1).field_disc == -3);
  CHECK_THROWS_AS(classify_kleinian(1, 1, 1), Error);
  CHECK_THROWS_AS(classify_kleinian(-1, -1, 1), Error);
  CHECK_THROWS_AS(classify_kleinian(diag_q({2, 3, 5, -1})), Error);
  CHECK(compare_commensurability(c7, classify_kleinian(-23, 1, 1)) == Commensurability::Incommensurable);
  CHECK(compare_commensurability(c7, classify_kleinian(-28, 1, 1)) == Commensurability::Indeterminate);
}

TEST_CASE("cocompactness follows the three-square obstruction") {
  const auto table = oracle::three_square_table(2000);
  for (long d = 1; d <= 2000; ++d) {
    if (!oracle::squarefree(d)) continue;
    CHECK(classify_kleinian(family::p_d_cc(d)).cocompact == !table[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("incommensurable_family_check") {
  CHECK(incommensurable_family_check({7, 23, 31}));
  CHECK_FALSE(incommensurable_family_check({7, 7}));
  CHECK_THROWS_AS(incommensurable_family_check({7, 15}), Error);
  CHECK_THROWS_AS(incommensurable_family_check({7, 11}), Error);
}

TEST_CASE("prime set P") {
  CHECK(in_prime_set_P(11));
  CHECK(in_prime_set_P(19));
  CHECK_FALSE(in_prime_set_P(3));
  CHECK(oracle::quartic_root_count(3) == 0);
  CHECK_FALSE(in_prime_set_P(2));
  CHECK_FALSE(in_prime_set_P(5));
  CHECK_THROWS_AS(in_prime_set_P(21), Error);
  CHECK(oracle::discriminant({1, 0, -1, 0, -1}) == -400);
  for (long q = 3; q < 2000; ++q) {
    if (!oracle::small_prime(q) || q == 5) continue;
    CHECK(in_prime_set_P(q) == (oracle::quartic_root_count(q) >= 1));
  }
}

TEST_CASE("prime set P entries") {
  const auto e20 = prime_set_P_entries(20);
  REQUIRE(e20.size() == 2);
  CHECK(e20[0].q == 11);
  CHECK(associates(e20[0].prime.pi, OInt(Int(5), Int(-4))));
  CHECK(e20[1].q == 19);
  CHECK(associates(e20[1].prime.pi, OInt(Int(1), Int(-4))));
  CHECK(associates(e20[1].prime.pi, *OInt::from_k5(parse_k5("-1-2*s5"))));
  CHECK(prime_set_P_entries(10).empty());
  const auto e100 = prime_set_P_entries(100);
  REQUIRE(e100.size() >= e20.size());
  for (std::size_t i = 0; i < e20.size(); ++i) {
    CHECK(e100[i].q == e20[i].q);
    CHECK(e100[i].prime == e20[i].prime);
  }
  for (const auto& e : prime_set_P_entries(3000)) {
    CHECK(in_prime_set_P(e.q));
    CHECK(abs(norm(e.prime.pi)) == e.q);
    CHECK(sign_at(e.prime.pi, Embedding::Identity) < 0);
    CHECK(sign_at(e.prime.pi, Embedding::Tau) > 0);
    CHECK(residue_square(K5Elem::phi(), e.prime));
    CHECK(oracle::legendre(static_cast<long>(e.prime.root), e.q.get_si()) == 1);
  }
  CHECK(first_prime_set_P_entries(10).size() == 10);
  CHECK(first_prime_set_P_entries(2)[1].q == 19);
  CHECK_THROWS_AS(prime_set_P_entries(1), Error);
}

TEST_CASE("the set P is not sparse below 1000") {
  std::size_t members = 0;
  for (long q = 2; q < 1000; ++q)
    if (oracle::small_prime(q) && in_prime_set_P(q)) ++members;
  CHECK(members >= 20);
}

TEST_CASE("verify_paper sections") {
  VerifyOptions quick;
  quick.dmax = 60;
  for (const auto& name : paper_sections()) {
    const Report r = verify_paper(name, quick);
    CHECK(r.section == name);
    CHECK_FALSE(r.items.empty());
    for (const auto& item : r.items) {
      INFO(name << ": " << item.claim << " computed " << item.computed << " expected " << item.expected);
      CHECK(item.ok);
    }
  }
  CHECK_THROWS_AS(verify_paper("nosuch"), Error);
  const Report swd = verify_paper("swd-19");
  CHECK(swd.passed());
  const auto all = verify_all(quick);
  REQUIRE(all.size() == paper_sections().size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].section == paper_sections()[i]);
}

TEST_CASE("five-dimensional report lists the d sweep") {
  VerifyOptions o;
  o.dmax = 40;
  const Report r = verify_paper("lemma64", o);
  CHECK(r.passed());
  int det_items = 0;
  for (const auto& i : r.items)
    if (i.claim.rfind("det class", 0) == 0) {
      ++det_items;
      CHECK(i.computed == "-1");
    }
  CHECK(det_items == 3);  // 7, 23, 31
}
