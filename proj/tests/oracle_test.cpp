#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "coxcanon/affine_a.hpp"
#include "coxcanon/affine_bd.hpp"
#include "coxcanon/oracle.hpp"
#include "test_support.hpp"

using namespace coxcanon;
using coxcanon::test::W;

namespace {

GenSet gens(std::initializer_list<Gen> gs) {
  GenSet out;
  for (Gen g : gs) out.insert(g);
  return out;
}

// Every word over t of length exactly len, in lexicographic order.
template <typename F>
void for_each_word(const CoxeterType& t, int len, F&& f) {
  Word w(t, std::vector<Gen>(len, 0));
  while (true) {
    f(w);
    int k = len - 1;
    while (k >= 0 && w.letters[k] == t.rank() - 1) w.letters[k--] = 0;
    if (k < 0) return;
    ++w.letters[k];
  }
}

}  // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("generator counts per family") {
    CHECK(finite_a(3).rank() == 3);
    CHECK(finite_d(3).rank() == 4);
    CHECK(affine_a(2).rank() == 3);
    CHECK(affine_b(3).rank() == 5);
    CHECK(affine_d(3).rank() == 5);
  }

  TEST_CASE("rank ranges are enforced") {
    CHECK_THROWS_AS(affine_a(0), InputError);
    CHECK_THROWS_AS(affine_d(2), InputError);
    CHECK_THROWS_AS(finite_d(1), InputError);
  }

  TEST_CASE("affine A closes the cycle") {
    const auto t = affine_a(3);
    CHECK(t.coxeter_m(0, 1) == 3);
    CHECK(t.coxeter_m(0, 2) == 2);
    CHECK(t.coxeter_m(0, 3) == 3);
    CHECK(t.coxeter_m(2, 3) == 3);
    CHECK(t.cartan(1, 1) == 2);
  }

  TEST_CASE("affine A with n = 1 has an infinite bond") {
    CHECK(affine_a(1).coxeter_m(0, 1) == 0);
  }

  TEST_CASE("B-tilde double bond between sigma_n and t") {
    const auto t = affine_b(3);
    CHECK(t.coxeter_m(2, 4) == 4);
    CHECK(t.cartan(2, 4) * t.cartan(4, 2) == 2);
    CHECK(t.coxeter_m(3, 1) == 3);  // b1 hangs off sigma_2
    CHECK(t.coxeter_m(3, 0) == 2);
  }

  TEST_CASE("D-tilde forks at both ends") {
    const auto t = affine_d(4);
    CHECK(t.coxeter_m(4, 1) == 3);
    CHECK(t.coxeter_m(5, 2) == 3);
    CHECK(t.coxeter_m(5, 3) == 2);
  }

  TEST_CASE("default orders") {
    auto b = GeneratorOrder::default_for(affine_b(3));
    CHECK(b.ascending() == std::vector<Gen>{3, 0, 1, 2, 4});
    auto a = GeneratorOrder::default_for(affine_a(3));
    CHECK(a.ascending() == std::vector<Gen>{0, 1, 2, 3});
  }
}

TEST_SUITE("element representation") {
  TEST_CASE("empty word is the identity") {
    CHECK(element_of(Word(affine_a(2))).is_identity());
  }

  TEST_CASE("generators are involutions") {
    for (auto t : {affine_a(2), affine_b(3), affine_d(3), finite_d(3)})
      for (Gen s = 0; s < t.rank(); ++s)
        CHECK(element_of(Word(t, {s, s})).is_identity());
  }

  TEST_CASE("braid relations follow the diagram") {
    for (auto t : {affine_a(3), affine_b(3), affine_d(4)}) {
      for (Gen i = 0; i < t.rank(); ++i) {
        for (Gen j = i + 1; j < t.rank(); ++j) {
          const int m = t.coxeter_m(i, j);
          if (m == 0) continue;
          Word u(t), v(t);
          for (int k = 0; k < m; ++k) {
            u.letters.push_back(k % 2 ? j : i);
            v.letters.push_back(k % 2 ? i : j);
          }
          CHECK(element_of(u) == element_of(v));
          // and no shorter alternation closes up
          Word p(t), q(t);
          for (int k = 0; k + 1 < m; ++k) {
            p.letters.push_back(k % 2 ? j : i);
            q.letters.push_back(k % 2 ? i : j);
          }
          CHECK_FALSE(element_of(p) == element_of(q));
        }
      }
    }
  }

  TEST_CASE("mixed-type words are rejected") {
    CHECK_THROWS_AS(Word(affine_a(2), {0}) * Word(affine_a(3), {0}),
                    InputError);
  }

  TEST_CASE("determinant is +-1 via inverse") {
    std::mt19937 rng(7);
    const auto t = affine_b(3);
    for (int k = 0; k < 50; ++k) {
      auto g = element_of(test::random_word(t, 12, rng));
      CHECK((g * inverse(g)).is_identity());
    }
  }
}

TEST_SUITE("reducedness and descents") {
  TEST_CASE("is_reduced examples") {
    CHECK(is_reduced(W(affine_a(2), "s2 s1 a")));
    CHECK_FALSE(is_reduced(W(affine_a(2), "s1 s1")));
    CHECK_FALSE(is_reduced(W(affine_a(3), "s2 s1 a s1 a")));
  }

  TEST_CASE("length and descents of the identity") {
    auto ld = length_and_descents(GroupElement::identity(affine_a(2)));
    CHECK(ld.length == 0);
    CHECK(ld.left.empty());
    CHECK(ld.right.empty());
  }

  TEST_CASE("length and descents of a brick") {
    const auto t = affine_a(2);
    auto ld = length_and_descents(element_of(W(t, "s2 s1 a")));
    CHECK(ld.length == 3);
    CHECK(ld.left == gens({1}));
    CHECK(ld.right == gens({2}));
    auto ld5 = length_and_descents(element_of(W(t, "s1 a s2 s1 a")));
    CHECK(ld5.length == 5);
    CHECK(ld5.right == gens({2}));
  }

  TEST_CASE("reducedness agrees with length, exhaustively") {
    for (auto [t, max_len] : {std::pair{affine_a(2), 8}, {affine_a(3), 7},
                              {affine_b(2), 6}, {affine_d(3), 5}}) {
      int mismatches = 0;
      for (int len = 0; len <= max_len; ++len)
        for_each_word(t, len, [&](const Word& w) {
          if (is_reduced(w) !=
              (length_of(element_of(w)) == static_cast<int>(w.size())))
            ++mismatches;
        });
      CHECK(mismatches == 0);
    }
  }

  TEST_CASE("reducedness agrees with length on long random words") {
    std::mt19937 rng(11);
    const auto t = affine_a(4);
    for (int k = 0; k < 300; ++k) {
      auto w = test::random_word(t, 14, rng);
      CHECK(is_reduced(w) ==
            (length_of(element_of(w)) == static_cast<int>(w.size())));
    }
  }

  TEST_CASE("left descents are right descents of the inverse") {
    std::mt19937 rng(3);
    const auto t = affine_d(3);
    for (int k = 0; k < 100; ++k) {
      auto g = element_of(test::random_word(t, 10, rng));
      CHECK(left_descents(g) == inverse(g).right_descents());
    }
  }

  TEST_CASE("almost rigid words are reduced") {
    for (int n = 2; n <= 6; ++n) {
      const auto t = affine_a(n);
      Word w(t, {n});
      for (int k = 1; k <= n; ++k) w.letters.push_back(k - 1);
      for (int k = n - 1; k >= 1; --k) w.letters.push_back(k - 1);
      w.letters.push_back(n);
      CHECK(is_reduced(w));
    }
  }
}

TEST_SUITE("cosets and exchange") {
  TEST_CASE("distinguished representative example") {
    const auto t = affine_a(2);
    auto split = distinguished_rep(element_of(W(t, "s2 s1 a s1")), gens({0, 1}));
    CHECK(split.rep == W(t, "s2 s1 a"));
    CHECK(split.tail == W(t, "s1"));
  }

  TEST_CASE("element of the parabolic has an empty representative") {
    const auto t = affine_a(3);
    auto g = element_of(W(t, "s2 s1 s2 s3"));
    auto split = distinguished_rep(g, finite_part(t));
    CHECK(split.rep.empty());
    CHECK(element_of(split.tail) == g);
  }

  TEST_CASE("coset splits are length additive") {
    std::mt19937 rng(5);
    for (int n = 3; n <= 5; ++n) {
      const auto t = affine_a(n);
      const GenSet P = parabolic_P(t);
      for (int k = 0; k < 100; ++k) {
        auto g = element_of(test::random_word(t, 12, rng));
        auto split = distinguished_rep(g, P);
        CHECK(element_of(split.rep * split.tail) == g);
        CHECK(static_cast<int>(split.rep.size() + split.tail.size()) ==
              length_of(g));
        for (Gen s : P.members())
          CHECK_FALSE(element_of(split.rep).has_right_descent(s));
        for (Gen s : split.tail.letters) CHECK(P.contains(s));
      }
    }
  }

  TEST_CASE("hat partner examples") {
    CHECK(hat_partner(W(affine_a(3), "s2 s1 a s1"), 3) == std::size_t{2});
    CHECK_FALSE(hat_partner(W(affine_a(3), "s1"), 1).has_value());
    CHECK_FALSE(hat_partner(W(affine_a(3), "s1 s2"), 0).has_value());
    CHECK(hat_partner(W(affine_a(3), "s1 s2 s1"), 0) == std::size_t{3});
    CHECK_THROWS_AS(hat_partner(W(affine_a(3), "s1 s1"), 0), InputError);
  }

  TEST_CASE("hat partner deletion matches every possible deletion") {
    std::mt19937 rng(9);
    for (auto t : {affine_a(3), affine_b(3), affine_d(3)}) {
      for (int k = 0; k < 200; ++k) {
        auto prefix = test::random_reduced(t, 8, rng);
        const Gen s = std::uniform_int_distribution<int>(0, t.rank() - 1)(rng);
        const auto target = element_of(prefix * s);
        std::vector<std::size_t> hits;
        for (std::size_t j = 0; j < prefix.size(); ++j) {
          Word del = prefix;
          del.letters.erase(del.letters.begin() + static_cast<long>(j));
          if (element_of(del) == target) hits.push_back(j + 1);
        }
        auto hp = hat_partner(prefix, s);
        if (hits.empty()) {
          CHECK_FALSE(hp.has_value());
        } else {
          REQUIRE(hits.size() == 1);
          CHECK(hp == hits.front());
        }
      }
    }
  }

  TEST_CASE("Deodhar dichotomy on distinguished elements") {
    const auto t = affine_a(2);
    const GenSet I = gens({0, 1});
    auto ball = enumerate_ball(t, 8);
    int checked = 0;
    for (const auto& e : ball.entries) {
      if (!(e.element.right_descents() & I).empty()) continue;
      for (Gen s = 0; s < t.rank(); ++s) {
        auto sw = e.element.left_times(s);
        GenSet bad = sw.right_descents() & I;
        if (bad.empty()) continue;
        REQUIRE(bad.size() == 1);
        CHECK(sw == e.element.times(bad.members().front()));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_SUITE("enumeration") {
  TEST_CASE("ball of radius 0 and 1") {
    CHECK(enumerate_ball(affine_a(2), 0).size() == 1);
    CHECK(enumerate_ball(affine_a(2), 1).size() == 4);
  }

  TEST_CASE("growth of the affine A2 ball") {
    auto ball = enumerate_ball(affine_a(2), 6);
    std::vector<int> per_length(7, 0);
    for (const auto& e : ball.entries) ++per_length[e.length];
    CHECK(per_length == std::vector<int>{1, 3, 6, 9, 12, 15, 18});
  }

  TEST_CASE("finite groups have the right order") {
    CHECK(enumerate_ball(finite_a(3), 6).size() == 24);
    CHECK(enumerate_ball(finite_d(3), 12).size() == 192);
    CHECK(enumerate_ball(finite_d(2), 6).size() == 24);  // D_3 = A_3
  }

  TEST_CASE("witnesses are reduced and reach their element") {
    auto ball = enumerate_ball(affine_b(3), 6);
    for (std::size_t k = 0; k < ball.size(); ++k) {
      auto w = ball.witness(k);
      CHECK(static_cast<int>(w.size()) == ball.entries[k].length);
      CHECK(element_of(w) == ball.entries[k].element);
    }
  }

  TEST_CASE("parallel ball equals the serial reference") {
    for (auto t : {affine_a(3), affine_d(3)}) {
      auto a = enumerate_ball(t, 7);
      auto b = enumerate_ball_serial(t, 7);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a.entries[k].element == b.entries[k].element);
        CHECK(a.entries[k].parent == b.entries[k].parent);
        CHECK(a.entries[k].letter == b.entries[k].letter);
      }
    }
  }

  TEST_CASE("resource limits") {
    CHECK_THROWS_AS(enumerate_ball(affine_a(2), 17), ResourceLimitError);
    Limits small;
    small.max_ball = 10;
    CHECK_THROWS_AS(enumerate_ball(affine_a(2), 5, small), ResourceLimitError);
  }
}

TEST_SUITE("reduced words and lex-min") {
  TEST_CASE("reduced words of the identity") {
    auto words = reduced_words_of(GroupElement::identity(affine_a(2)));
    REQUIRE(words.size() == 1);
    CHECK(words.front().empty());
  }

  TEST_CASE("longest element of A2 has two reduced words") {
    auto words = reduced_words_of(element_of(W(finite_a(2), "s1 s2 s1")));
    CHECK(words.size() == 2);
  }

  TEST_CASE("left truncations of the rigid element have one reduced word") {
    const auto t = affine_a(2);
    Word full = W(t, "s1 s2 a s1 s2 a");
    for (std::size_t k = 0; k <= full.size(); ++k) {
      Word suffix(t, {full.letters.begin() + static_cast<long>(k),
                      full.letters.end()});
      CHECK(reduced_words_of(element_of(suffix)).size() == 1);
    }
  }

  TEST_CASE("right lex-min of the A2 longest element") {
    const auto t = finite_a(2);
    CHECK(right_lexmin(element_of(W(t, "s2 s1 s2"))) == W(t, "s1 s2 s1"));
  }

  TEST_CASE("right lex-min is the minimum over all reduced words") {
    std::mt19937 rng(13);
    for (auto t : {affine_a(3), affine_b(3), affine_d(3)}) {
      const auto order = GeneratorOrder::default_for(t);
      for (int k = 0; k < 60; ++k) {
        auto g = element_of(test::random_reduced(t, 8, rng));
        auto words = reduced_words_of(g);
        auto key = [&](const Word& w) {
          std::vector<int> r;
          for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            r.push_back(order.rank_of(*it));
          return r;
        };
        auto best = *std::min_element(
            words.begin(), words.end(),
            [&](const Word& a, const Word& b) { return key(a) < key(b); });
        CHECK(right_lexmin(g, order) == best);
      }
    }
  }

  TEST_CASE("affine count oracle") {
    const auto t = affine_a(2);
    AffineCountOracle oracle(2);
    CHECK(oracle.min_count(element_of(W(t, "a s2 s1 a s1"))) == 2);
    // a s1 a = s1 a s1
    auto c = oracle.count(element_of(W(t, "a s1 a")));
    CHECK(c.min == 1);
    CHECK(c.max == 2);
  }
}
