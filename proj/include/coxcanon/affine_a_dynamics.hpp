#ifndef COXCANON_AFFINE_A_DYNAMICS_HPP_
#define COXCANON_AFFINE_A_DYNAMICS_HPP_

#include <optional>

#include "coxcanon/affine_a.hpp"

namespace coxcanon {

/// Cases of the left-multiplication automaton on a single brick. A..J are
/// sigma_u cases, K..N are the a_{n+1} cases.
enum class AutomatonCase { A, B, C, D, E, F, G, H, I, J, K, L, M, N };

char case_letter(AutomatonCase c);

struct LeftBrickResult {
  enum class Kind { BrickTimesSigma, NewBrick, TwoBricks, Identity };
  Kind kind = Kind::Identity;
  Brick brick;   // resulting (or unchanged) brick; second brick for TwoBricks
  int v = 0;     // sigma_v on the right for BrickTimesSigma
  AutomatonCase rule = AutomatonCase::A;
};

/// Canonical form of s * B(j,i); s is a generator index of A~_n.
LeftBrickResult left_mult_brick(int n, Gen s, Brick b);

struct LeftFormResult {
  enum class Kind { FormTimesSigma, Form };
  // Which case of left multiplication on a block occurred.
  enum class Case { TimesSigma, DropFirst, Prepend, OneEntry };
  Kind kind = Kind::Form;
  Case which = Case::OneEntry;
  AffineBlockA block;
  int v = 0;      // for FormTimesSigma
  int delta = 0;  // +1 or -1
  int changed_brick = -1;  // 0-based, for OneEntry
  bool changed_j = false;  // otherwise i changed
};

LeftFormResult left_mult_block(Gen s, const AffineBlockA& block);

CanonicalFormA left_mult_form(Gen s, const CanonicalFormA& f);

struct RightDescentsA {
  enum class Source { Finite, Table, Dynamics, SufficientList, Oracle };
  GenSet set;
  std::optional<std::size_t> hat_partner;  // 1-based position in form_word
  Source source = Source::Finite;
};

RightDescentsA right_descents_form(const CanonicalFormA& f);

}  // namespace coxcanon

#endif  // COXCANON_AFFINE_A_DYNAMICS_HPP_
