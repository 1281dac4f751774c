#ifndef COXCANON_AFFINE_BD_HPP_
#define COXCANON_AFFINE_BD_HPP_

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "coxcanon/coxeter.hpp"
#include "coxcanon/oracle.hpp"
#include "coxcanon/perm.hpp"

namespace coxcanon {

// Segments of W(D_{n+1}), for 1 <= k <= n:
//   <m,k]  = sigma_m ... sigma_k                         (1 <= m <= k)
//   <-1,k] = sigma_1bar sigma_2 ... sigma_k
//   <0,k]  = sigma_1 sigma_1bar sigma_2 ... sigma_k
//   <-i,k] = sigma_i ... sigma_2 sigma_1 sigma_1bar sigma_2 ... sigma_k
//   <k+1,k] = 1

CoxeterType finite_d(int n);
CoxeterType affine_b(int n);
CoxeterType affine_d(int n);

/// Length of <m,k].
int segment_length(int m, int k);
/// Letters of <m,k] over a type containing D_{n+1} (FiniteD, AffineB, AffineD).
Word segment_word(const CoxeterType& t, int m, int k);
/// Signed permutation of <m,k] in W(D_{n+1}).
SignedPerm segment_perm(int n, int m, int k);

struct DRun {
  int m = 0;
  int k = 0;
  friend bool operator==(const DRun&, const DRun&) = default;
  friend auto operator<=>(const DRun&, const DRun&) = default;
};

struct FiniteDCanonical {
  int n = 0;
  std::vector<DRun> runs;  // k strictly decreasing, -k <= m <= k
  friend bool operator==(const FiniteDCanonical&,
                         const FiniteDCanonical&) = default;
};

/// Finite D letters of t (sigma_k or sigma_1bar) as a SignedPerm generator.
int signed_gen(const CoxeterType& t, Gen g);
SignedPerm signed_perm_of_word(int n, const Word& w);
SignedPerm signed_perm_of(const FiniteDCanonical& f);
FiniteDCanonical d_finite_canonical_of(const SignedPerm& x);
/// Word over D_{n+1} or over the finite letters of B~/D~ with the same n.
FiniteDCanonical d_finite_canonicalize(const Word& w);
bool validate_finite_d(const FiniteDCanonical& f);
Word finite_d_word(const FiniteDCanonical& f, const CoxeterType& t);
int finite_d_length(const FiniteDCanonical& f);

// ---- B~_{n+1}: bricks <j,n] t.

int b_brick_length(int n, int j);
/// Consecutive-brick condition for B~ blocks.
bool b_valid_pair(int n, int prev, int next);
bool validate_b_block(int n, const std::vector<int>& js);

struct BBlock {
  int n = 0;
  std::vector<int> js;
  friend bool operator==(const BBlock&, const BBlock&) = default;
};

struct CanonicalFormB {
  BBlock block;
  FiniteDCanonical finite;
  int n() const { return block.n; }
  int affine_length() const { return static_cast<int>(block.js.size()); }
  friend bool operator==(const CanonicalFormB&,
                         const CanonicalFormB&) = default;
};

struct BPairRewrite {
  int left = 0;
  int right = 0;
  int rule = 0;  // 1..6; the trailing letter is always sigma_n
};

/// <i,n]t<j,n]t = <i',n]t<j',n]t sigma_n when the pair is not right-lex-min.
std::optional<BPairRewrite> b_pair_rewrite(int n, int i, int j);

Word b_block_word(const BBlock& block);
Word b_form_word(const CanonicalFormB& f);
bool validate_b_form(const CanonicalFormB& f);
CanonicalFormB b_canonicalize(const Word& w);

struct BLeftResult {
  enum class Case { PrependT, DropFirst, TimesSigma, OneEntry };
  Case which = Case::OneEntry;
  BBlock block;
  Gen sigma = -1;      // TimesSigma: the letter left on the right of the block
  int changed = -1;    // OneEntry: 0-based brick index
  int old_j = 0;
  int delta = 0;       // length change, +1 or -1
};

/// Canonical form of s * block, s a generator of B~_{n+1}.
BLeftResult b_left_mult(Gen s, const BBlock& block);
CanonicalFormB b_left_mult_form(Gen s, const CanonicalFormB& f);

/// E_n: W(B~_n) -> W(B~_{n+1}); the input type is affine_b(n - 1).
Word b_embed(const Word& w);

/// Right descents of block * x: R(x), plus t when x is not B~-extremal.
GenSet b_right_descents(const CanonicalFormB& f);

// ---- D~_{n+1}: bricks <j,n]<i,n-1] sigma_nbar.

struct DBrick {
  int j = 0;
  int i = 0;
  friend bool operator==(const DBrick&, const DBrick&) = default;
  friend auto operator<=>(const DBrick&, const DBrick&) = default;
};

enum class BrickPosition { First, Interior };

bool d_is_exceptional(int n, DBrick b);
/// Parametrization of the set E (right descent set exactly {sigma_{n-1}}).
bool d_in_set_e(int n, DBrick b);
/// The D~-extremal members of E.
bool d_is_extremal(int n, DBrick b);
/// All (j,i) allowed by the set-E parametrization.
std::vector<DBrick> d_set_e(int n);

Word d_brick_word(const CoxeterType& t, DBrick b);  // includes sigma_nbar

/// Ordered pairs (prev, next) whose two-brick word is reduced and
/// right-lex-min. Stored for n = 3, 4; computed with the oracle otherwise.
const std::set<std::pair<DBrick, DBrick>>& d_pair_table(int n);
/// Fresh oracle computation of the pair table.
std::set<std::pair<DBrick, DBrick>> d_pair_table_oracle(int n);
/// Closed-form consecutive-brick clauses, as far as they go. Nothing for
/// pairs they do not describe.
std::optional<bool> d_pair_clause(int n, DBrick prev, DBrick next);

bool d_brick_validate(int n, int j, int i, BrickPosition pos,
                      std::optional<DBrick> successor = std::nullopt);

struct DBlock {
  int n = 0;
  std::vector<DBrick> bricks;
  friend bool operator==(const DBlock&, const DBlock&) = default;
};

struct CanonicalFormD {
  DBlock block;
  FiniteDCanonical finite;
  int n() const { return block.n; }
  int affine_length() const { return static_cast<int>(block.bricks.size()); }
  friend bool operator==(const CanonicalFormD&,
                         const CanonicalFormD&) = default;
};

bool validate_d_block(const DBlock& block);
Word d_block_word(const DBlock& block);
Word d_form_word(const CanonicalFormD& f);
CanonicalFormD d_canonicalize(const Word& w);

}  // namespace coxcanon

#endif  // COXCANON_AFFINE_BD_HPP_
