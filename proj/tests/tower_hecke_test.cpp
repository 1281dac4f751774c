#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "coxcanon/enumerate.hpp"
#include "coxcanon/tower_hecke.hpp"
#include "test_support.hpp"

using namespace coxcanon;
using coxcanon::test::W;

namespace {

using LP = LaurentPolynomial;

HeckeElement g(const Word& w) { return HeckeElement::basis(element_of(w)); }

}  // namespace

TEST_SUITE("tower on words") {
  TEST_CASE("defining substitution") {
    CHECK(embed_word(W(affine_a(2), "a")) == W(affine_a(3), "s3 a s3"));
    CHECK(embed_word(W(affine_a(2), "s1 s2")) == W(affine_a(3), "s1 s2"));
    auto img = embed_word(W(affine_a(2), "s2 s1 a s2 s1 a"));
    CHECK(img.size() == 10);
    CHECK(length_of(element_of(img)) == 10);
  }

  TEST_CASE("only type A-tilde is accepted") {
    CHECK_THROWS_AS(embed_word(W(affine_b(3), "t")), InputError);
  }

  TEST_CASE("image is reduced iff the input is affine-length reduced") {
    const auto t = affine_a(2);
    // a s1 a = s1 a s1: reduced, but a-count 2 exceeds the affine length 1
    CHECK(is_reduced(W(t, "a s1 a")));
    CHECK_FALSE(is_reduced(embed_word(W(t, "a s1 a"))));
    CHECK(is_reduced(embed_word(W(t, "s1 a s1"))));

    for (const auto& f : enumerate_forms_a(2, 6)) {
      auto g0 = element_of(form_word(f));
      for (const auto& w : reduced_words_of(g0)) {
        const bool affine_reduced = w.count(2) == f.affine_length();
        CHECK(is_reduced(embed_word(w)) == affine_reduced);
      }
    }
  }

  TEST_CASE("the tower is a homomorphism") {
    std::mt19937 rng(29);
    const auto t = affine_a(3);
    for (int k = 0; k < 100; ++k) {
      auto u = test::random_word(t, 6, rng);
      auto v = test::random_word(t, 6, rng);
      if (element_of(u) == element_of(v))
        CHECK(element_of(embed_word(u)) == element_of(embed_word(v)));
      CHECK(element_of(embed_word(u * v)) ==
            element_of(embed_word(u)) * element_of(embed_word(v)));
    }
  }
}

TEST_SUITE("tower on canonical forms") {
  TEST_CASE("image of a") {
    CanonicalFormA f{{2, {{3, 0}}}, {2, {}}};
    auto e = embed_canonical(f);
    CHECK(e.block.bricks == std::vector<Brick>{{3, 0}});
    CHECK(e.finite.runs == std::vector<Run>{{3, 3}});
    CHECK(form_word(e) == W(affine_a(3), "s3 a s3"));
  }

  TEST_CASE("image of two bricks") {
    CanonicalFormA f{{2, {{2, 1}, {2, 1}}}, {2, {}}};
    auto e = embed_canonical(f);
    CHECK(e.block.bricks == std::vector<Brick>{{2, 1}, {2, 2}});
    CHECK(e.finite.runs == std::vector<Run>{{3, 3}});
    CHECK(f.length() == 6);
    CHECK(e.length() == 10);
  }

  TEST_CASE("closed form agrees with canonicalizing the image word") {
    for (int n = 2; n <= 3; ++n) {
      for (const auto& f : enumerate_forms_a(n, n == 2 ? 8 : 7)) {
        auto e = embed_canonical(f);
        CHECK(e == canonicalize(embed_word(form_word(f))));
        CHECK(e.affine_length() == f.affine_length());
        CHECK(e.length() == f.length() + 2 * f.affine_length());
      }
    }
  }

  TEST_CASE("preimage examples") {
    auto pre = in_image(canonicalize(W(affine_a(3), "s3 a s3")));
    REQUIRE(pre.has_value());
    CHECK(*pre == canonicalize(W(affine_a(2), "a")));
    CHECK_FALSE(in_image(canonicalize(W(affine_a(3), "a"))).has_value());
  }

  TEST_CASE("preimages invert the tower") {
    for (const auto& f : enumerate_forms_a(2, 8)) {
      auto pre = in_image(embed_canonical(f));
      REQUIRE(pre.has_value());
      CHECK(*pre == f);
    }
  }

  TEST_CASE("membership matches the enumerated image") {
    std::set<std::vector<std::int32_t>> image;
    for (const auto& f : enumerate_forms_a(2, 8))
      image.insert(element_of(embed_word(form_word(f))).data());
    for (const auto& f : enumerate_forms_a(3, 8)) {
      const bool member = image.count(element_of(form_word(f)).data()) > 0;
      CHECK(in_image(f).has_value() == member);
    }
  }
}

TEST_SUITE("laurent polynomials") {
  TEST_CASE("arithmetic") {
    LP q = LP::q_power(1);
    LP p = (q - 1) * (q + 1);
    CHECK(p == LP::q_power(2) - 1);
    CHECK((LP::q_power(-1) * q) == LP(1));
    CHECK((p - p).is_zero());
    int k = 0;
    CHECK(LP::q_power(-3).is_q_power(&k));
    CHECK(k == -3);
    CHECK_FALSE((q + 1).is_q_power());
    CHECK_FALSE(LP::q_power(2, 2).is_q_power());
  }

  TEST_CASE("formatting") {
    CHECK(LP().str() == "0");
    CHECK((LP::q_power(1) - 1).str() == "q - 1");
    CHECK((LP::q_power(-1) - 1).str() == "-1 + q^-1");
    CHECK(LP::q_power(2, 3).str() == "3*q^2");
  }
}

TEST_SUITE("hecke algebra") {
  TEST_CASE("generator relations") {
    const auto t = affine_a(2);
    auto one = HeckeElement::one(t);
    CHECK(hecke_mult(0, one) == g(W(t, "s1")));
    HeckeElement sq = hecke_mult(0, g(W(t, "s1")));
    HeckeElement want = one.scaled(LP::q_power(1));
    want += g(W(t, "s1")).scaled(LP::q_power(1) - 1);
    CHECK(sq == want);
    CHECK(hecke_mult(0, g(W(t, "s2"))) == g(W(t, "s1 s2")));
  }

  TEST_CASE("inverse generator") {
    const auto t = affine_a(3);
    for (Gen s = 0; s < t.rank(); ++s) {
      auto x = g(W(t, "s2 a s1"));
      CHECK(hecke_mult_inverse(s, hecke_mult(s, x)) == x);
      CHECK(hecke_mult(s, hecke_mult_inverse(s, x)) == x);
    }
  }

  TEST_CASE("braid relations hold on a basis element") {
    const auto t = affine_a(2);
    auto x = g(W(t, "a s1"));
    auto lhs = hecke_mult(0, hecke_mult(1, hecke_mult(0, x)));
    auto rhs = hecke_mult(1, hecke_mult(0, hecke_mult(1, x)));
    CHECK(lhs == rhs);
  }

  TEST_CASE("left and right actions commute") {
    const auto t = affine_a(2);
    auto x = g(W(t, "s1 a s2"));
    for (Gen s = 0; s < 3; ++s)
      for (Gen r = 0; r < 3; ++r)
        CHECK(hecke_mult_right(hecke_mult(s, x), r) ==
              hecke_mult(s, hecke_mult_right(x, r)));
  }

  TEST_CASE("product of basis elements along reduced words") {
    const auto t = affine_a(2);
    CHECK(g(W(t, "s1")) * g(W(t, "s2 a")) == g(W(t, "s1 s2 a")));
  }

  TEST_CASE("image of e_a") {
    const auto t2 = affine_a(2);
    const auto t3 = affine_a(3);
    auto emb = hecke_embed(g(W(t2, "a")));
    HeckeElement want = g(W(t3, "s3 a s3")).scaled(LP::q_power(-1));
    want += g(W(t3, "s3 a")).scaled(LP::q_power(-1) - 1);
    CHECK(emb.image == want);
    REQUIRE(emb.reports.size() == 1);
    const auto& rep = emb.reports.front();
    CHECK(rep.verified);
    CHECK(rep.leading_coeff == LP::q_power(-1));
    REQUIRE(rep.lower.size() == 1);
    CHECK(length_of(rep.lower.front().first) == 2);
  }

  TEST_CASE("image of e_s1 is g_s1") {
    auto emb = hecke_embed(g(W(affine_a(2), "s1")));
    CHECK(emb.image == g(W(affine_a(3), "s1")));
    CHECK(emb.reports.front().verified);
    CHECK(emb.reports.front().lower.empty());
  }

  TEST_CASE("expansion does not depend on the reduced word") {
    for (const auto& f : enumerate_forms_a(2, 6)) {
      auto words = reduced_words_of(element_of(form_word(f)));
      auto first = hecke_embed_word(words.front());
      for (const auto& w : words) CHECK(hecke_embed_word(w) == first);
    }
  }

  TEST_CASE("triangularity with distinct leading terms") {
    std::set<std::vector<std::int32_t>> leads;
    int count = 0;
    for (const auto& f : enumerate_forms_a(2, 6)) {
      auto emb = hecke_embed(HeckeElement::basis(element_of(form_word(f))));
      for (const auto& rep : emb.reports) {
        CHECK(rep.verified);
        leads.insert(rep.leading.data());
        ++count;
      }
    }
    CHECK(count == 64);
    CHECK(static_cast<int>(leads.size()) == count);
  }

  TEST_CASE("the embedding is multiplicative") {
    const auto t = affine_a(2);
    auto x = g(W(t, "s1 a"));
    auto y = g(W(t, "a s2"));
    CHECK(hecke_embed(x * y).image ==
          hecke_embed(x).image * hecke_embed(y).image);
  }
}
