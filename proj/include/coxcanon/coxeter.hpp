#ifndef COXCANON_COXETER_HPP_
#define COXCANON_COXETER_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxcanon {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { FiniteA, FiniteD, AffineA, AffineB, AffineD };

// Generator indices are fixed per family:
//   sigma_k           -> k-1          (1 <= k <= n)
//   a_{n+1}           -> n            (AffineA)
//   sigma_1bar        -> n            (FiniteD, AffineB, AffineD)
//   t_{n+1}           -> n+1          (AffineB)
//   sigma_nbar        -> n+1          (AffineD)
using Gen = int;

class CoxeterType {
 public:
  CoxeterType() = default;
  CoxeterType(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  int rank() const;  // number of generators

  bool is_affine() const {
    return family_ == Family::AffineA || family_ == Family::AffineB ||
           family_ == Family::AffineD;
  }

  // C(i,j) with s_i(alpha_j) = alpha_j - C(i,j) alpha_i.
  int cartan(Gen i, Gen j) const;
  // Order of s_i s_j; 0 encodes infinity.
  int coxeter_m(Gen i, Gen j) const;

  Gen sigma(int k) const;
  Gen affine_gen() const;  // a, t or sigma_nbar; throws for finite types
  Gen bar1() const;        // sigma_1bar

  std::string label(Gen g) const;
  std::string name() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;

 private:
  Family family_ = Family::FiniteA;
  int n_ = 1;
};

/// Set of generators of one type, stored as a bitmask.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}

  static GenSet all(const CoxeterType& t) {
    return GenSet(t.rank() >= 64 ? ~0ULL : ((1ULL << t.rank()) - 1));
  }

  bool contains(Gen g) const { return (bits_ >> g) & 1U; }
  void insert(Gen g) { bits_ |= (1ULL << g); }
  void erase(Gen g) { bits_ &= ~(1ULL << g); }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  std::uint64_t bits() const { return bits_; }
  bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<Gen> members() const;

  GenSet operator|(GenSet o) const { return GenSet(bits_ | o.bits_); }
  GenSet operator&(GenSet o) const { return GenSet(bits_ & o.bits_); }
  friend bool operator==(GenSet, GenSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Word {
  CoxeterType type;
  std::vector<Gen> letters;

  Word() = default;
  explicit Word(CoxeterType t, std::vector<Gen> l = {})
      : type(t), letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Gen operator[](std::size_t i) const { return letters[i]; }

  int count(Gen g) const;
  Word reversed() const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Concatenation; mixing types is an input error.
Word operator*(const Word& lhs, const Word& rhs);
Word operator*(const Word& lhs, Gen g);
Word operator*(Gen g, const Word& rhs);

/// Strict total order on the generators, used for right-lex-min words.
class GeneratorOrder {
 public:
  GeneratorOrder() = default;
  // `ascending` lists every generator from smallest to largest.
  GeneratorOrder(const CoxeterType& t, std::vector<Gen> ascending);

  static GeneratorOrder default_for(const CoxeterType& t);

  const std::vector<Gen>& ascending() const { return ascending_; }
  int rank_of(Gen g) const { return position_[g]; }
  bool less(Gen a, Gen b) const { return position_[a] < position_[b]; }

 private:
  std::vector<Gen> ascending_;
  std::vector<int> position_;
};

/// The parabolic P = {sigma_2, ..., sigma_{n-1}} (types A and A-tilde).
GenSet parabolic_P(const CoxeterType& t);
/// All finite generators: everything but the affine generator.
GenSet finite_part(const CoxeterType& t);

}  // namespace coxcanon

#endif  // COXCANON_COXETER_HPP_
