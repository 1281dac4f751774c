#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "coxcanon/affine_bd.hpp"
#include "coxcanon/enumerate.hpp"
#include "test_support.hpp"

using namespace coxcanon;
using coxcanon::test::W;

namespace {

std::set<DBrick> oracle_set_e(int n) {
  Limits lim;
  lim.max_length = n * (n + 1);
  const Ball ball = enumerate_ball(finite_d(n), n * (n + 1), lim);
  std::set<DBrick> out;
  for (std::size_t k = 0; k < ball.size(); ++k) {
    if (!(ball.entries[k].element.right_descents() == GenSet(1ULL << (n - 2))))
      continue;
    const FiniteDCanonical f = d_finite_canonicalize(ball.witness(k));
    DBrick b{n + 1, n};
    if (f.runs.size() == 2) b = {f.runs[0].m, f.runs[1].m};
    else if (f.runs.size() == 1) b = {n + 1, f.runs[0].m};
    out.insert(b);
  }
  return out;
}

}  // namespace

TEST_SUITE("segments and finite D") {
  TEST_CASE("segment words") {
    const auto t = finite_d(3);
    CHECK(segment_word(t, 2, 3) == W(t, "s2 s3"));
    CHECK(segment_word(t, -1, 3) == W(t, "b1 s2 s3"));
    CHECK(segment_word(t, 0, 3) == W(t, "s1 b1 s2 s3"));
    CHECK(segment_word(t, -2, 3) == W(t, "s2 s1 b1 s2 s3"));
    CHECK(segment_word(t, 4, 3).empty());
    for (int k = 1; k <= 3; ++k)
      for (int m = -k; m <= k + 1; ++m)
        CHECK(static_cast<int>(segment_word(t, m, k).size()) ==
              segment_length(m, k));
  }

  TEST_CASE("signed permutations agree with the matrix representation") {
    std::mt19937 rng(31);
    const auto t = finite_d(3);
    for (int k = 0; k < 200; ++k) {
      auto u = test::random_word(t, 9, rng);
      auto v = test::random_word(t, 9, rng);
      CHECK((signed_perm_of_word(3, u) == signed_perm_of_word(3, v)) ==
            (element_of(u) == element_of(v)));
    }
  }

  TEST_CASE("examples") {
    const auto t = finite_d(3);
    CHECK(d_finite_canonicalize(Word(t)).runs.empty());
    auto f = d_finite_canonicalize(W(t, "b1 s1"));
    CHECK(f.runs == std::vector<DRun>{{0, 1}});
    CHECK(finite_d_word(f, t) == W(t, "s1 b1"));
    auto g = d_finite_canonicalize(W(t, "s3 s2 b1 s2"));
    CHECK(finite_d_word(g, t) == right_lexmin(element_of(W(t, "s3 s2 b1 s2"))));
  }

  TEST_CASE("bijection onto W(D_{n+1}) with right lex-min words") {
    for (int n = 2; n <= 4; ++n) {
      const auto t = finite_d(n);
      auto forms = enumerate_finite_d(n);
      long order = 1L << n;
      for (int k = 2; k <= n + 1; ++k) order *= k;
      CHECK(static_cast<long>(forms.size()) == order);
      std::set<std::vector<std::int32_t>> seen;
      for (const auto& f : forms) {
        CHECK(validate_finite_d(f));
        auto w = finite_d_word(f, t);
        CHECK(static_cast<int>(w.size()) == finite_d_length(f));
        auto g = element_of(w);
        seen.insert(g.data());
        CHECK(right_lexmin(g) == w);
        CHECK(d_finite_canonical_of(signed_perm_of(f)) == f);
      }
      CHECK(seen.size() == forms.size());
    }
  }
}

TEST_SUITE("B-tilde") {
  TEST_CASE("pair rewrite examples") {
    auto r1 = b_pair_rewrite(3, 1, 2);
    REQUIRE(r1.has_value());
    CHECK(r1->left == 3);
    CHECK(r1->right == 1);
    auto r3 = b_pair_rewrite(3, 0, 1);
    REQUIRE(r3.has_value());
    CHECK(r3->left == -1);
    CHECK(r3->right == 1);
    CHECK_FALSE(b_pair_rewrite(4, 3, 2).has_value());
  }

  TEST_CASE("pair rewrites preserve the element and land on lex-min pairs") {
    for (int n = 3; n <= 4; ++n) {
      const auto t = affine_b(n);
      std::set<int> rules;
      for (int i = -n; i <= n + 1; ++i)
        for (int j = -n; j <= n; ++j) {
          const Word w = b_block_word({n, {i, j}});
          const bool lexmin = right_lexmin(element_of(w)) == w;
          CHECK(lexmin == b_valid_pair(n, i, j));
          auto rw = b_pair_rewrite(n, i, j);
          CHECK(rw.has_value() == !lexmin);
          if (!rw) continue;
          rules.insert(rw->rule);
          Word out = b_block_word({n, {rw->left, rw->right}}) * (n - 1);
          CHECK(element_of(out) == element_of(w));
          CHECK(out.size() == w.size());
          CHECK(right_lexmin(element_of(w)) == out);
        }
      CHECK(rules.size() == 6);
      (void)t;
    }
  }

  TEST_CASE("canonicalization examples") {
    const auto t = affine_b(3);
    auto e = b_canonicalize(W(t, "t t"));
    CHECK(e.block.js.empty());
    CHECK(e.finite.runs.empty());
    auto f = b_canonicalize(W(t, "b1 s2 s3 t b1 s2 s3 t"));
    CHECK(f.block.js == std::vector<int>{2, -1});
    CHECK(b_form_word(f) == W(t, "s2 s3 t b1 s2 s3 t s3"));
  }

  TEST_CASE("random words match right lex-min") {
    std::mt19937 rng(37);
    for (int n = 3; n <= 4; ++n) {
      const auto t = affine_b(n);
      for (int k = 0; k < 200; ++k) {
        auto w = test::random_word(t, 10, rng);
        auto f = b_canonicalize(w);
        CHECK(validate_b_form(f));
        auto fw = b_form_word(f);
        CHECK(fw == right_lexmin(element_of(w)));
        CHECK(fw.count(t.affine_gen()) == f.affine_length());
      }
    }
  }

  TEST_CASE("blocks are reduced and right lex-min") {
    const auto t = affine_b(3);
    for (const auto& b : enumerate_blocks_b(3, 3, 1000)) {
      auto w = b_block_word(b);
      CHECK(is_reduced(w));
      CHECK(right_lexmin(element_of(w)) == w);
      CHECK(w.count(t.affine_gen()) == static_cast<int>(b.js.size()));
    }
  }

  TEST_CASE("forms biject onto the ball") {
    const auto t = affine_b(3);
    auto ball = enumerate_ball(t, 8);
    auto forms = enumerate_forms_b(3, 8);
    CHECK(forms.size() == ball.size());
    for (const auto& f : forms) CHECK(ball.find(element_of(b_form_word(f))));
  }

  TEST_CASE("affine length is the same on every reduced word") {
    std::mt19937 rng(41);
    const auto t = affine_b(3);
    for (int k = 0; k < 60; ++k) {
      auto g = element_of(test::random_reduced(t, 8, rng));
      auto words = reduced_words_of(g);
      const int L = words.front().count(t.affine_gen());
      for (const auto& w : words) CHECK(w.count(t.affine_gen()) == L);
    }
  }

  TEST_CASE("left multiplication by t") {
    auto pre = b_left_mult(4, {3, {2, 1}});
    CHECK(pre.which == BLeftResult::Case::PrependT);
    CHECK(pre.block.js == std::vector<int>{4, 2, 1});
    auto drop = b_left_mult(4, {3, {4, 1}});
    CHECK(drop.which == BLeftResult::Case::DropFirst);
    CHECK(drop.block.js == std::vector<int>{1});
  }

  TEST_CASE("left multiplication agrees with canonicalization") {
    for (int n = 3; n <= 4; ++n) {
      const auto t = affine_b(n);
      for (const auto& f : enumerate_forms_b(n, n == 3 ? 9 : 7)) {
        for (Gen s = 0; s < t.rank(); ++s) {
          auto g = b_left_mult_form(s, f);
          CHECK(g == b_canonicalize(s * b_form_word(f)));
          CHECK(b_left_mult_form(s, g) == f);
        }
      }
    }
  }

  TEST_CASE("single-entry changes move one brick length by one") {
    for (int n = 3; n <= 4; ++n) {
      const auto t = affine_b(n);
      for (const auto& b : enumerate_blocks_b(n, 3, 1000)) {
        if (b.js.empty()) continue;
        for (Gen s = 0; s < t.rank(); ++s) {
          auto r = b_left_mult(s, b);
          if (r.which != BLeftResult::Case::OneEntry) continue;
          REQUIRE(r.block.js.size() == b.js.size());
          int diffs = 0;
          for (std::size_t k = 0; k < b.js.size(); ++k)
            diffs += b.js[k] != r.block.js[k];
          CHECK(diffs == 1);
          const int k = r.changed;
          CHECK(r.old_j == b.js[k]);
          CHECK(b_brick_length(n, r.block.js[k]) - b_brick_length(n, b.js[k]) ==
                r.delta);
          CHECK(validate_b_block(n, r.block.js));
        }
      }
    }
  }

  TEST_CASE("embedding") {
    CHECK(b_embed(W(affine_b(2), "t")) == W(affine_b(3), "s3 t s3"));
    CHECK(b_embed(W(affine_b(2), "b1 s2")) == W(affine_b(3), "b1 s2"));
    auto ball = enumerate_ball(affine_b(3), 7);
    for (std::size_t k = 0; k < ball.size(); ++k) {
      const Word w = ball.witness(k);
      const int L = w.count(4);
      const Word img = b_embed(w);
      CHECK(is_reduced(img));
      CHECK(static_cast<int>(img.size()) == ball.entries[k].length + 2 * L);
      CHECK(right_lexmin(element_of(img)).count(5) == L);
    }
  }

  TEST_CASE("right descents") {
    for (int n = 3; n <= 4; ++n) {
      for (const auto& f : enumerate_forms_b(n, n == 3 ? 9 : 7)) {
        auto r = b_right_descents(f);
        auto g = element_of(b_form_word(f));
        CHECK(r == g.right_descents());
      }
    }
  }

  TEST_CASE("t can be a descent even when x starts with sigma_n") {
    const auto t = affine_b(3);
    auto f = b_canonicalize(W(t, "s2 s3 t b1 s2 s3 t s3"));
    REQUIRE(f.block.js == std::vector<int>{2, -1});
    CHECK(b_right_descents(f).contains(t.affine_gen()));
    CHECK(element_of(W(t, "s2 s3 t b1 s2 s3 t s3")).right_descents() ==
          b_right_descents(f));
  }
}

TEST_SUITE("D-tilde") {
  TEST_CASE("brick validation examples") {
    CHECK(d_brick_validate(4, 4, 3, BrickPosition::First));
    CHECK_FALSE(d_brick_validate(4, 4, 3, BrickPosition::Interior));
    CHECK(d_brick_validate(3, 3, 0, BrickPosition::First));
    CHECK(d_brick_validate(3, 4, 3, BrickPosition::First));  // exceptional
    CHECK_FALSE(d_brick_validate(3, 4, 3, BrickPosition::Interior));
    CHECK_THROWS_AS(d_brick_validate(3, 5, 0, BrickPosition::First),
                    InputError);
    CHECK_THROWS_AS(d_brick_validate(2, 1, 0, BrickPosition::First),
                    InputError);
  }

  TEST_CASE("set E has 2n(n+1)-1 members and matches the oracle") {
    for (int n = 3; n <= 4; ++n) {
      auto param = d_set_e(n);
      CHECK(static_cast<int>(param.size()) == 2 * n * (n + 1) - 1);
      CHECK(std::set<DBrick>(param.begin(), param.end()) == oracle_set_e(n));
    }
  }

  TEST_CASE("canonicalization examples") {
    const auto t = affine_d(3);
    auto e = d_canonicalize(W(t, "bn bn"));
    CHECK(e.block.bricks.empty());
    CHECK(e.finite.runs.empty());
    auto f = d_canonicalize(W(t, "s3 s2 bn"));
    CHECK(f.block.bricks == std::vector<DBrick>{{3, 2}});
    CHECK(f.finite.runs.empty());
    auto g = d_canonicalize(W(t, "bn s3 bn"));
    CHECK(d_form_word(g) == right_lexmin(element_of(W(t, "bn s3 bn"))));
  }

  TEST_CASE("random words match right lex-min") {
    std::mt19937 rng(43);
    for (int n = 3; n <= 4; ++n) {
      const auto t = affine_d(n);
      for (int k = 0; k < 200; ++k) {
        auto w = test::random_word(t, 10, rng);
        auto f = d_canonicalize(w);
        CHECK(validate_d_block(f.block));
        auto fw = d_form_word(f);
        CHECK(fw == right_lexmin(element_of(w)));
        CHECK(fw.count(t.affine_gen()) == f.affine_length());
      }
    }
  }

  TEST_CASE("stored pair tables equal the oracle") {
    for (int n = 3; n <= 4; ++n) CHECK(d_pair_table(n) == d_pair_table_oracle(n));
  }

  TEST_CASE("closed-form clauses agree with the table where they apply") {
    for (int n = 3; n <= 5; ++n) {
      const auto& table = d_pair_table(n);
      auto all = d_set_e(n);
      all.push_back({n + 1, n});
      int described = 0;
      for (const DBrick& p : all)
        for (const DBrick& q : all) {
          if (!d_is_extremal(n, q)) continue;
          auto c = d_pair_clause(n, p, q);
          if (!c) continue;
          ++described;
          CHECK(*c == (table.count({p, q}) > 0));
        }
      CHECK(described > 0);
    }
  }

  TEST_CASE("pairwise validity suffices for three bricks") {
    const int n = 3;
    for (const auto& b : enumerate_blocks_d(n, 3, 1000)) {
      if (b.bricks.size() != 3) continue;
      auto w = d_block_word(b);
      CHECK(is_reduced(w));
      CHECK(right_lexmin(element_of(w)) == w);
    }
  }

  TEST_CASE("forms biject onto the ball") {
    const auto t = affine_d(3);
    auto ball = enumerate_ball(t, 8);
    auto forms = enumerate_forms_d(3, 8);
    CHECK(forms.size() == ball.size());
    for (const auto& f : forms) CHECK(ball.find(element_of(d_form_word(f))));
  }

  TEST_CASE("descent sandwich") {
    const auto t = affine_d(3);
    const GenSet bn(1ULL << t.affine_gen());
    for (const auto& f : enumerate_forms_d(3, 9)) {
      if (f.block.bricks.empty()) continue;
      GenSet rx = element_of(finite_d_word(f.finite, t)).right_descents();
      GenSet rw = element_of(d_form_word(f)).right_descents();
      CHECK(rx.subset_of(rw));
      CHECK(rw.subset_of(rx | bn));
    }
  }
}
