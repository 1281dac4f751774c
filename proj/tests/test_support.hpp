#ifndef COXCANON_TESTS_TEST_SUPPORT_HPP_
#define COXCANON_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <string>

#include "coxcanon/coxeter.hpp"
#include "coxcanon/oracle.hpp"
#include "coxcanon/word_io.hpp"

namespace coxcanon::test {

inline Word W(const CoxeterType& t, const std::string& text) {
  return parse_word(text, t);
}

inline Word random_word(const CoxeterType& t, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, t.rank() - 1);
  Word w(t);
  for (int k = 0; k < len; ++k) w.letters.push_back(pick(rng));
  return w;
}

/// Random reduced word, built by appending letters that keep it reduced.
inline Word random_reduced(const CoxeterType& t, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, t.rank() - 1);
  Word w(t);
  GroupElement g = GroupElement::identity(t);
  while (static_cast<int>(w.size()) < len) {
    Gen s = pick(rng);
    if (g.has_right_descent(s)) continue;
    g.right_mul_inplace(s);
    w.letters.push_back(s);
  }
  return w;
}

}  // namespace coxcanon::test

#endif  // COXCANON_TESTS_TEST_SUPPORT_HPP_
