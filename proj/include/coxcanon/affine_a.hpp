#ifndef COXCANON_AFFINE_A_HPP_
#define COXCANON_AFFINE_A_HPP_

#include <optional>
#include <vector>

#include "coxcanon/coxeter.hpp"
#include "coxcanon/oracle.hpp"
#include "coxcanon/perm.hpp"

namespace coxcanon {

// Notation for W(A_n) inside W(A~_n):
//   floor(k,l) = sigma_k sigma_{k+1} ... sigma_l    (floor(n+1,n) = 1)
//   ceil(i,1)  = sigma_i sigma_{i-1} ... sigma_1    (ceil(0,1) = 1)
//   h(j,i)     = floor(j,n) ceil(i,1)
//   B(j,i)     = h(j,i) a

struct Brick {
  int j = 0;
  int i = 0;
  friend bool operator==(const Brick&, const Brick&) = default;
  friend auto operator<=>(const Brick&, const Brick&) = default;
};

struct AffineBlockA {
  int n = 0;
  std::vector<Brick> bricks;
  friend bool operator==(const AffineBlockA&, const AffineBlockA&) = default;
};

/// Run floor(k,l) of the finite canonical form.
struct Run {
  int k = 0;
  int l = 0;
  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

struct FiniteACanonical {
  int n = 0;
  std::vector<Run> runs;  // l strictly decreasing
  friend bool operator==(const FiniteACanonical&,
                         const FiniteACanonical&) = default;
};

struct CanonicalFormA {
  AffineBlockA block;
  FiniteACanonical finite;
  int n() const { return block.n; }
  int affine_length() const { return static_cast<int>(block.bricks.size()); }
  int length() const;
  friend bool operator==(const CanonicalFormA&,
                         const CanonicalFormA&) = default;
};

struct ExtremalFormA {
  int r = 0;
  int i = 0;
  Word tail;  // supported in P
  bool extremal = false;
};

CoxeterType affine_a(int n);
CoxeterType finite_a(int n);

void check_brick(int n, Brick b);
int brick_length(int n, Brick b);
bool is_short(Brick b);
Word brick_word(int n, int j, int i);
Word brick_word(int n, Brick b);
Word h_word(int n, int j, int i);  // h(j,i) over A~_n

/// Bounds for a brick at an interior (non-first) position.
bool interior_bounds(int n, Brick b);
/// Conditions (2)-(5) for the consecutive pair (prev, next).
bool valid_pair(int n, Brick prev, Brick next);
bool validate_block(int n, const std::vector<Brick>& bricks);
Word block_word(const AffineBlockA& block);
int block_length(const AffineBlockA& block);

// Finite part. Words may be over A_n or over the finite letters of A~_n.
Perm perm_of_word(int n, const Word& w);
Perm perm_of(const FiniteACanonical& f);
FiniteACanonical finite_canonical_of(const Perm& p);
FiniteACanonical finite_canonicalize(const Word& w);
bool validate_finite(const FiniteACanonical& f);
/// Serialization of the runs over the given type (A_n or A~_n).
Word finite_word(const FiniteACanonical& f, const CoxeterType& t);
int finite_length(const FiniteACanonical& f);

ExtremalFormA extremal_decompose(const Perm& x);
ExtremalFormA extremal_decompose(const GroupElement& g);
Perm h_perm(int n, int j, int i);

struct BrickExchange {
  Brick left;
  Brick right;
  int trailing = 0;  // k of sigma_k, either 1 or n
  int rule = 0;      // 1..6 as listed; rule 4 also covers a right brick (1,0)
};

/// Rewrites an invalid pair B(j,u) B(s,v) = B(j',u') B(s',v') sigma_t.
/// Returns nothing for a valid pair.
std::optional<BrickExchange> brick_exchange(int n, Brick left, Brick right);

/// h(j_prev, i_prev) floor(j_m, n) = h(j', i') floor(u, n-1), j_m > 1.
struct SubcaseRewrite {
  Brick brick;
  int u = 0;
};
SubcaseRewrite subcase_rewrite(int n, Brick prev, int j_m);

CanonicalFormA canonicalize(const Word& w);
Word form_word(const CanonicalFormA& f);
bool validate_form(const CanonicalFormA& f);
GroupElement element_of(const CanonicalFormA& f);

}  // namespace coxcanon

#endif  // COXCANON_AFFINE_A_HPP_
