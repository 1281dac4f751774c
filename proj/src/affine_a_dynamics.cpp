#include "coxcanon/affine_a_dynamics.hpp"

#include <stdexcept>

namespace coxcanon {

char case_letter(AutomatonCase c) {
  return static_cast<char>('a' + static_cast<int>(c));
}

LeftBrickResult left_mult_brick(int n, Gen s, Brick b) {
  check_brick(n, b);
  using K = LeftBrickResult::Kind;
  using C = AutomatonCase;
  const int j = b.j, i = b.i;
  if (s == n) {
    if (j == n + 1 && i == 0) return {K::Identity, b, 0, C::N};
    if ((i > 0 && j < n + 1) || (j == 1 && i == 0))
      return {K::TwoBricks, b, 0, C::K};
    if (i == 0) return {K::BrickTimesSigma, b, n, C::L};
    return {K::BrickTimesSigma, b, 1, C::M};
  }
  if (s < 0 || s >= n) throw InputError("generator index out of range");
  const int u = s + 1;
  if (u < j - 1) {
    if (u > i + 1) return {K::BrickTimesSigma, b, u, C::A};
    if (u == i + 1) return {K::NewBrick, {j, i + 1}, 0, C::B};
    if (u == i) return {K::NewBrick, {j, i - 1}, 0, C::C};
    return {K::BrickTimesSigma, b, u + 1, C::D};
  }
  if (u == j - 1) return {K::NewBrick, {j - 1, i}, 0, C::E};
  if (u == j) return {K::NewBrick, {j + 1, i}, 0, C::F};
  if (u - 1 > i + 1) return {K::BrickTimesSigma, b, u - 1, C::G};
  if (u - 1 == i + 1) return {K::NewBrick, {j, i + 1}, 0, C::H};
  if (u - 1 == i) return {K::NewBrick, {j, i - 1}, 0, C::I};
  return {K::BrickTimesSigma, b, u, C::J};
}

LeftFormResult left_mult_block(Gen s, const AffineBlockA& block) {
  const int n = block.n;
  const std::size_t m = block.bricks.size();
  if (m == 0) throw InputError("left_mult_block needs a nonempty block");
  using R = LeftFormResult;
  std::vector<Brick> bricks = block.bricks;
  Gen pending = s;
  std::size_t pos = 0;
  for (;;) {
    if (pos >= m) {
      return {R::Kind::FormTimesSigma, R::Case::TimesSigma, {n, bricks},
              pending + 1, +1};
    }
    const LeftBrickResult r = left_mult_brick(n, pending, bricks[pos]);
    switch (r.kind) {
      case LeftBrickResult::Kind::Identity: {
        bricks.erase(bricks.begin());
        return {R::Kind::Form, R::Case::DropFirst, {n, bricks}, 0, -1};
      }
      case LeftBrickResult::Kind::TwoBricks: {
        bricks.insert(bricks.begin(), Brick{n + 1, 0});
        return {R::Kind::Form, R::Case::Prepend, {n, bricks}, 0, +1};
      }
      case LeftBrickResult::Kind::BrickTimesSigma:
        pending = r.v - 1;
        ++pos;
        continue;
      case LeftBrickResult::Kind::NewBrick:
        break;
    }
    const Brick old = bricks[pos];
    bricks[pos] = r.brick;
    if (pos > 0 && !valid_pair(n, bricks[pos - 1], bricks[pos]))
      throw std::logic_error("left multiplication broke the previous pair");
    if (pos + 1 < m && !valid_pair(n, bricks[pos], bricks[pos + 1])) {
      auto ex = brick_exchange(n, bricks[pos], bricks[pos + 1]);
      if (!ex || !(ex->left == old) || !(ex->right == bricks[pos + 1]))
        throw std::logic_error("exchange did not restore the block");
      bricks[pos] = old;
      pending = ex->trailing - 1;
      pos += 2;
      continue;
    }
    const int delta =
        brick_length(n, r.brick) > brick_length(n, old) ? +1 : -1;
    R out{R::Kind::Form, R::Case::OneEntry, {n, bricks}, 0, delta};
    out.changed_brick = static_cast<int>(pos);
    out.changed_j = r.brick.j != old.j;
    return out;
  }
}

CanonicalFormA left_mult_form(Gen s, const CanonicalFormA& f) {
  const int n = f.n();
  if (s < 0 || s > n) throw InputError("generator index out of range");
  CanonicalFormA out = f;
  auto left_finite = [&](int v) {
    Perm x = perm_of(out.finite);
    x.left_mul(v);
    out.finite = finite_canonical_of(x);
  };
  if (f.block.bricks.empty()) {
    if (s == n) out.block.bricks.push_back({n + 1, 0});
    else left_finite(s + 1);
    return out;
  }
  LeftFormResult r = left_mult_block(s, f.block);
  out.block = r.block;
  if (r.kind == LeftFormResult::Kind::FormTimesSigma) left_finite(r.v);
  return out;
}

namespace {

// Deficient cases for B(jm,im) x a with x = h(j,i) p, h(j,i) != 1.
// Returns the 1-based hat-partner position inside h(jm,im).
std::optional<std::size_t> deficient(int n, Brick last, int j, int i) {
  const int jm = last.j, im = last.i;
  if (j == n + 1 && i >= 1 && im >= i) return (n - jm + 1) + (im - i + 1);
  if (i != 0) return std::nullopt;
  if (1 < j && j <= n && jm <= j && im < j - 1) return j - jm + 1;
  if (2 < j && j <= n && jm < j && im >= j - 1) return j - jm;
  // printed with im = 1 only; every im >= 1 is deficient
  if (j == 2 && jm == 1 && im >= 1) return 1;
  return std::nullopt;
}

struct PairHit {
  bool in_prev = false;  // otherwise: the a left of the last brick
  std::size_t pos = 0;
};

std::optional<PairHit> two_brick_case(int n, Brick prev, Brick last, int j,
                                      int i) {
  if (j != n) return std::nullopt;
  const int j1 = prev.j, i1 = prev.i, j2 = last.j, i2 = last.i;
  if (i == 1 && j2 > 1 && 1 <= i2 && i2 < n - 1) return PairHit{false, 0};
  if (i >= 2 && i <= i2 && i2 < n - 1 && i < j2 && i1 >= i - 1)
    return PairHit{true, static_cast<std::size_t>((n - j1 + 1) + (i1 - i + 2))};
  if (i >= 1 && i <= i2 && i2 < n - 1 && i >= j2 && i1 >= i)
    return PairHit{true, static_cast<std::size_t>((n - j1 + 1) + (i1 - i + 1))};
  return std::nullopt;
}

// Position of the hat partner of a in w a, by left-building w[k..] a with
// the automaton: the partner is the largest k where the length drops.
std::optional<std::size_t> partner_by_dynamics(const Word& w) {
  const int n = w.type.n();
  CanonicalFormA g{{n, {{n + 1, 0}}}, {n, {}}};
  for (std::size_t k = w.size(); k-- > 0;) {
    CanonicalFormA h = left_mult_form(w[k], g);
    if (h.length() < g.length()) return k + 1;
    g = std::move(h);
  }
  return std::nullopt;
}

}  // namespace

RightDescentsA right_descents_form(const CanonicalFormA& f) {
  const int n = f.n();
  const Gen a = n;
  RightDescentsA out;
  const Perm x = perm_of(f.finite);
  for (int k = 1; k <= n; ++k)
    if (x.right_descent(k)) out.set.insert(k - 1);
  const auto& bricks = f.block.bricks;
  const std::size_t m = bricks.size();
  if (m == 0) return out;

  std::vector<std::size_t> offset(m + 1, 0);
  for (std::size_t s = 0; s < m; ++s)
    offset[s + 1] = offset[s] + brick_length(n, bricks[s]);

  out.source = m <= 2 ? RightDescentsA::Source::Table
                      : RightDescentsA::Source::SufficientList;
  const ExtremalFormA ext = extremal_decompose(x);
  auto hit = [&](std::size_t pos) {
    out.set.insert(a);
    out.hat_partner = pos;
    return out;
  };
  if (ext.r == n + 1 && ext.i == 0) return hit(offset[m]);
  if (auto p = deficient(n, bricks[m - 1], ext.r, ext.i))
    return hit(offset[m - 1] + *p);
  if (m >= 2) {
    if (auto h = two_brick_case(n, bricks[m - 2], bricks[m - 1], ext.r, ext.i))
      return hit(h->in_prev ? offset[m - 2] + h->pos : offset[m - 1]);
  }
  if (m == 1) return out;
  if (m == 2) {
    // The printed two-brick list misses cases; the automaton settles them.
    out.source = RightDescentsA::Source::Dynamics;
    if (auto p = partner_by_dynamics(form_word(f))) return hit(*p);
    return out;
  }

  out.source = RightDescentsA::Source::Oracle;
  const Word w = form_word(f);
  if (auto p = hat_partner(w, a)) return hit(*p);
  return out;
}

}  // namespace coxcanon
