#ifndef COXCANON_ORACLE_HPP_
#define COXCANON_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxcanon/coxeter.hpp"

namespace coxcanon {

/// Element of W acting on the root lattice. Column j holds w(alpha_j) in the
/// basis of simple roots.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(const CoxeterType& t);
  static GroupElement generator(const CoxeterType& t, Gen s);

  const CoxeterType& type() const { return type_; }
  int rank() const { return r_; }
  std::int32_t at(int row, int col) const { return m_[row * r_ + col]; }
  const std::vector<std::int32_t>& data() const { return m_; }

  bool is_identity() const;
  // w(alpha_s) < 0.
  bool has_right_descent(Gen s) const;
  GenSet right_descents() const;

  GroupElement times(Gen s) const;       // w * s
  GroupElement left_times(Gen s) const;  // s * w
  void right_mul_inplace(Gen s);
  void left_mul_inplace(Gen s);

  GroupElement operator*(const GroupElement& o) const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.type_ == b.type_ && a.m_ == b.m_;
  }

  std::size_t hash() const;

 private:
  CoxeterType type_;
  int r_ = 0;
  std::vector<std::int32_t> m_;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

template <typename V>
using ElementMap = std::unordered_map<GroupElement, V, ElementHash>;

struct Limits {
  int max_length = 16;
  std::size_t max_ball = 10'000'000;
};

GroupElement element_of(const Word& w);

std::vector<GroupElement> reflection_sequence(const Word& w);
bool is_reduced(const Word& w);

struct LengthDescents {
  int length = 0;
  GenSet left;
  GenSet right;
};

LengthDescents length_and_descents(const GroupElement& g);
int length_of(const GroupElement& g);
GenSet left_descents(const GroupElement& g);
GroupElement inverse(const GroupElement& g);

/// Greedy right-descent stripping; the result is the right-lex-min word.
Word right_lexmin(const GroupElement& g, const GeneratorOrder& order);
Word right_lexmin(const GroupElement& g);
Word reduced_word(const GroupElement& g);

struct CosetSplit {
  Word rep;
  Word tail;
};

/// g = rep * tail with tail in W_I and rep minimal in g W_I.
CosetSplit distinguished_rep(const GroupElement& g, GenSet I);

/// 1-based position j with prefix*s = prefix with letter j deleted, or
/// nothing when prefix*s is reduced. Throws InputError on unreduced prefix.
std::optional<std::size_t> hat_partner(const Word& prefix, Gen s);

/// All reduced words of g, sorted lexicographically by generator index.
std::vector<Word> reduced_words_of(const GroupElement& g,
                                   const Limits& limits = {});

/// Minimum and maximum number of occurrences of `gen` over reduced words.
struct GenCount {
  int min = 0;
  int max = 0;
};

class AffineCountOracle {
 public:
  explicit AffineCountOracle(Gen gen) : gen_(gen) {}
  GenCount count(const GroupElement& g);
  int min_count(const GroupElement& g) { return count(g).min; }

 private:
  Gen gen_;
  ElementMap<GenCount> memo_;
};

/// Ball of radius max_len around the identity.
struct Ball {
  struct Entry {
    GroupElement element;
    int length = 0;
    std::int64_t parent = -1;
    Gen letter = -1;
  };
  CoxeterType type;
  std::vector<Entry> entries;  // BFS order, level by level
  ElementMap<std::size_t> index;

  std::size_t size() const { return entries.size(); }
  Word witness(std::size_t i) const;
  std::optional<std::size_t> find(const GroupElement& g) const;
};

Ball enumerate_ball(const CoxeterType& t, int max_len,
                    const Limits& limits = {});
/// Single-threaded reference for enumerate_ball.
Ball enumerate_ball_serial(const CoxeterType& t, int max_len,
                           const Limits& limits = {});

}  // namespace coxcanon

#endif  // COXCANON_ORACLE_HPP_
