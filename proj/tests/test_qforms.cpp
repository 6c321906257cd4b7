#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "formhasse/qforms.hpp"
#include "oracles.hpp"
#include "random_forms.hpp"

using namespace formhasse;

namespace {
K5Elem k(const char* s) { return parse_k5(s); }
}  // namespace

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Form(Field::Q, KMatrix{{1, 2}, {3, 4}}), Error);
  CHECK_THROWS_AS(Form(Field::Q, KMatrix{{1, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(Form(Field::Q, KMatrix{{K5Elem::phi()}}), Error);
  CHECK_THROWS_AS(parse_diag("1,0,1", Field::Q), Error);
  CHECK_THROWS_AS(parse_diag("1,,1", Field::Q), Error);
  CHECK_THROWS_AS(parse_diag("1,phi", Field::Q), Error);
  CHECK(parse_diag("1,1,1,1,-phi", Field::K5)[4] == -K5Elem::phi());
  CHECK(to_string(parse_diag("1, 1,-7", Field::Q)) == "<1,1,-7>");
  CHECK_THROWS_AS(parse_field("R"), Error);
}

TEST_CASE("orthogonal_sum") {
  for (long d : {2L, 7L, 15L}) {
    CHECK(orthogonal_sum(diag_q({d, d, d}), diag_q({d, 1, 1, -1})) == diag_q({d, d, d, d, 1, 1, -1}));
    CHECK(orthogonal_sum(diag_q({d}), diag_q({1, 1, 1, -d})) == diag_q({d, 1, 1, 1, -d}));
  }
  CHECK(orthogonal_sum(diag_q({3}), diag_q({-2})).dim() == 2);
  const Form s = orthogonal_sum(Form(Field::Q, KMatrix{{0, 1}, {1, 0}}), diag_q({5}).to_form());
  CHECK(s.gram() == KMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}});
  CHECK_THROWS_AS(orthogonal_sum(diag_q({1}), DiagForm(Field::K5, {1})), Error);
}

TEST_CASE("diagonalize") {
  const auto same = diagonalize(diag_q({3, -1, 5}).to_form());
  CHECK(same.diag == diag_q({3, -1, 5}));
  CHECK(same.transform == KMatrix::identity(3));

  const KMatrix hyp{{0, 1}, {1, 0}};
  const auto h = diagonalize(Form(Field::Q, hyp));
  CHECK(h.diag == DiagForm(Field::Q, {2, Rat(-1, 2)}));
  CHECK(h.transform == KMatrix{{1, Rat(-1, 2)}, {1, Rat(1, 2)}});
  CHECK(h.transform.transpose() * hyp * h.transform == KMatrix::diagonal(std::span<const K5Elem>(h.diag.entries())));

  oracle::Rng rng(21);
  for (Field field : {Field::Q, Field::K5}) {
    for (int i = 0; i < 100; ++i) {
      const Form f = gen::form(rng, field, 5);
      for (PivotOrder order : {PivotOrder::Natural, PivotOrder::Reversed}) {
        const auto d = diagonalize(f, order);
        CHECK(d.transform.transpose() * f.gram() * d.transform ==
              KMatrix::diagonal(std::span<const K5Elem>(d.diag.entries())));
        CHECK_FALSE(d.transform.determinant().is_zero());
      }
    }
  }
}

TEST_CASE("signatures") {
  const DiagForm q = parse_diag("1,1,1,1,-phi", Field::K5);
  CHECK(signature_at(q, Embedding::Identity) == Signature{4, 1});
  CHECK(signature_at(q, Embedding::Tau) == Signature{5, 0});
  for (int n = 1; n <= 8; ++n) {
    std::vector<K5Elem> e(static_cast<std::size_t>(n), K5Elem(1));
    e.emplace_back(-1);
    CHECK(signature_at(DiagForm(Field::Q, e), Embedding::Identity) == Signature{n, 1});
  }
  const DiagForm p(Field::K5, {1, 1, 1, k("3-2*s5")});
  CHECK(signature_at(p, Embedding::Identity) == Signature{3, 1});
  CHECK(signature_at(p, Embedding::Tau) == Signature{4, 0});
  CHECK(signature_at(Form(Field::Q, KMatrix{{0, 1}, {1, 0}}), Embedding::Identity) == Signature{1, 1});
  CHECK_THROWS_AS(signature_at(diag_q({1}), Embedding::Tau), Error);
}

TEST_CASE("det_class") {
  for (long d = 1; d <= 60; ++d) {
    if (!oracle::squarefree(d)) continue;
    CHECK(det_class(diag_q({d, d, d, d, 1, 1, -1})) == K5Elem(-1));
  }
  CHECK(same_square_class(det_class(parse_diag("1,1,1,1,-phi", Field::K5)), -K5Elem::phi(), Field::K5));
  CHECK(det_class(diag_q({1, 1, 1})) == K5Elem(1));
  CHECK(det_class(DiagForm(Field::Q, {Rat(3, 4), Rat(2, 9)})) == K5Elem(6));
}

TEST_CASE("same_square_class") {
  CHECK(same_square_class(-7, -7, Field::Q));
  CHECK(same_square_class(k("9+4*s5"), 1, Field::K5));
  CHECK(k("(2+s5)*(2+s5)") == k("9+4*s5"));
  CHECK_FALSE(same_square_class(-1, -7, Field::Q));
  CHECK_FALSE(same_square_class(5, 1, Field::Q));
  CHECK(same_square_class(5, 1, Field::K5));
  CHECK_FALSE(same_square_class(K5Elem::phi(), 1, Field::K5));
  CHECK(same_square_class(pow(K5Elem::phi(), 3), K5Elem::phi(), Field::K5));

  oracle::Rng rng(22);
  std::vector<K5Elem> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(gen::nonzero_scalar(rng, Field::K5, 12));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const K5Elem& x = xs[i];
    CHECK(same_square_class(x, x, Field::K5));
    const K5Elem s = gen::nonzero_scalar(rng, Field::K5, 12);
    CHECK(same_square_class(x, x * s * s, Field::K5));
    const K5Elem& y = xs[(i + 1) % xs.size()];
    CHECK(same_square_class(x, y, Field::K5) == same_square_class(y, x, Field::K5));
    // x ~ x s^2 and x ~ y force x s^2 ~ y
    if (same_square_class(x, y, Field::K5)) CHECK(same_square_class(x * s * s, y, Field::K5));
    CHECK(sqrt_in_field(x * x, Field::K5).has_value());
  }
}

TEST_CASE("three squares") {
  CHECK_FALSE(three_squares_representable(7));
  CHECK(three_squares_representable(3));
  CHECK_FALSE(three_squares_representable(28));
  const auto table = oracle::three_square_table(5000);
  for (long d = 1; d <= 5000; ++d) CHECK(three_squares_representable(d) == table[static_cast<std::size_t>(d)]);
}

TEST_CASE("represents_zero over Q") {
  CHECK_FALSE(represents_zero_Q(diag_q({1, 1, 1, -7})));
  CHECK(represents_zero_Q(diag_q({7, 1, 1, -1})));
  CHECK(represents_zero_Q(diag_q({1, 1, 1, 1, -1})));
  CHECK_FALSE(represents_zero_Q(diag_q({1, 1})));
  CHECK(represents_zero_Q(diag_q({2, -8})));
  CHECK_FALSE(represents_zero_Q(diag_q({1, 1, 1})));
  CHECK(represents_zero_Q(diag_q({1, 1, -2})));
  CHECK_FALSE(represents_zero_Q(diag_q({1, 1, -3})));
  CHECK_FALSE(represents_zero_Q(diag_q({1})));
}

TEST_CASE("<1,1,1,-d> isotropic iff d is a sum of three squares") {
  for (long d = 1; d <= 2000; ++d) {
    if (!oracle::squarefree(d)) continue;
    const bool iso = represents_zero_Q(diag_q({1, 1, 1, -d}));
    CHECK(iso == three_squares_representable(d));
    if (d <= 200) CHECK(iso == oracle::three_squares_times(d, 40));
  }
}

TEST_CASE("ternary isotropy against a point search") {
  // a x^2 + b y^2 + c z^2 = 0 has a nonzero integer point in a small box
  auto point = [](long a, long b, long c) {
    for (long x = 0; x <= 30; ++x)
      for (long y = 0; y <= 30; ++y)
        for (long z = 0; z <= 30; ++z)
          if ((x || y || z) && a * x * x + b * y * y + c * z * z == 0) return true;
    return false;
  };
  oracle::Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    const long a = oracle::squarefree_part(oracle::nonzero(rng, 12));
    const long b = oracle::squarefree_part(oracle::nonzero(rng, 12));
    const long c = oracle::squarefree_part(oracle::nonzero(rng, 12));
    const bool iso = represents_zero_Q(diag_q({a, b, c}));
    // small coefficients: Legendre's bound puts a zero inside the box
    CHECK(iso == point(a, b, c));
  }
}

TEST_CASE("indefinite forms of dimension >= 5 are isotropic") {
  oracle::Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 5, 8));
    const DiagForm d = gen::diag(rng, Field::Q, n, 500);
    const Signature s = signature_at(d, Embedding::Identity);
    CHECK(represents_zero_Q(d) == (s.plus > 0 && s.minus > 0));
  }
}

TEST_CASE("represents_zero over K5 shortcuts") {
  CHECK(represents_zero_K5(parse_diag("1,1,1,1,-phi", Field::K5)) == std::optional<bool>(false));
  CHECK(represents_zero_K5(parse_diag("1,1,1,-1-2*s5", Field::K5)) == std::optional<bool>(false));
  CHECK(represents_zero_K5(parse_diag("1,1,1,-phi,-1", Field::K5)) == std::optional<bool>(true));
  CHECK_FALSE(represents_zero_K5(parse_diag("1,1,-1,-1", Field::K5)).has_value());
}
