#include "coxcanon/affine_a.hpp"

#include <string>

#include "coxcanon/affine_a_dynamics.hpp"

namespace coxcanon {

CoxeterType affine_a(int n) { return CoxeterType(Family::AffineA, n); }
CoxeterType finite_a(int n) { return CoxeterType(Family::FiniteA, n); }

void check_brick(int n, Brick b) {
  if (b.j < 1 || b.j > n + 1 || b.i < 0 || b.i > n - 1) {
    throw InputError("brick (" + std::to_string(b.j) + "," +
                     std::to_string(b.i) + ") out of range for n=" +
                     std::to_string(n));
  }
}

int brick_length(int n, Brick b) { return n + 2 + b.i - b.j; }

bool is_short(Brick b) { return b.j > b.i + 1; }

Word h_word(int n, int j, int i) {
  check_brick(n, {j, i});
  Word w(affine_a(n));
  for (int k = j; k <= n; ++k) w.letters.push_back(k - 1);
  for (int k = i; k >= 1; --k) w.letters.push_back(k - 1);
  return w;
}

Word brick_word(int n, int j, int i) { return h_word(n, j, i) * n; }

Word brick_word(int n, Brick b) { return brick_word(n, b.j, b.i); }

bool interior_bounds(int n, Brick b) {
  if (b.j == 1 && b.i == 0) return true;
  return b.i >= 1 && b.i <= n - 1 && b.j >= 1 && b.j <= n;
}

bool valid_pair(int n, Brick prev, Brick next) {
  if (!interior_bounds(n, next)) return false;
  if (next.j > prev.j || next.i < prev.i) return false;
  if (prev.j > prev.i + 1 && !(next.j < prev.j)) return false;
  if (next.j > next.i + 1 && !(next.i > prev.i)) return false;
  return true;
}

bool validate_block(int n, const std::vector<Brick>& bricks) {
  if (bricks.empty()) return true;
  const Brick& b = bricks.front();
  if (b.j < 1 || b.j > n + 1 || b.i < 0 || b.i > n - 1) return false;
  for (std::size_t s = 1; s < bricks.size(); ++s)
    if (!valid_pair(n, bricks[s - 1], bricks[s])) return false;
  return true;
}

Word block_word(const AffineBlockA& block) {
  Word w(affine_a(block.n));
  for (const Brick& b : block.bricks) w = w * brick_word(block.n, b);
  return w;
}

int block_length(const AffineBlockA& block) {
  int len = 0;
  for (const Brick& b : block.bricks) len += brick_length(block.n, b);
  return len;
}

Perm perm_of_word(int n, const Word& w) {
  Perm p(n);
  for (Gen g : w.letters) {
    if (g < 0 || g >= n) throw InputError("word is not in the finite part");
    p.right_mul(g + 1);
  }
  return p;
}

Perm perm_of(const FiniteACanonical& f) {
  Perm p(f.n);
  for (const Run& r : f.runs)
    for (int t = r.k; t <= r.l; ++t) p.right_mul(t);
  return p;
}

FiniteACanonical finite_canonical_of(const Perm& p) {
  FiniteACanonical f;
  f.n = p.n();
  Perm x = p;
  for (int k = f.n; k >= 1; --k) {
    const int r = x(k) + 1;
    if (r > k) continue;
    f.runs.push_back({r, k});
    for (int t = r; t <= k; ++t) x.left_mul(t);
  }
  return f;
}

FiniteACanonical finite_canonicalize(const Word& w) {
  return finite_canonical_of(perm_of_word(w.type.n(), w));
}

bool validate_finite(const FiniteACanonical& f) {
  int prev = f.n + 1;
  for (const Run& r : f.runs) {
    if (r.l >= prev || r.l < 1 || r.k < 1 || r.k > r.l) return false;
    prev = r.l;
  }
  return true;
}

Word finite_word(const FiniteACanonical& f, const CoxeterType& t) {
  Word w(t);
  for (const Run& r : f.runs)
    for (int k = r.k; k <= r.l; ++k) w.letters.push_back(k - 1);
  return w;
}

int finite_length(const FiniteACanonical& f) {
  int len = 0;
  for (const Run& r : f.runs) len += r.l - r.k + 1;
  return len;
}

Perm h_perm(int n, int j, int i) {
  Perm p(n);
  for (int k = j; k <= n; ++k) p.right_mul(k);
  for (int k = i; k >= 1; --k) p.right_mul(k);
  return p;
}

ExtremalFormA extremal_decompose(const Perm& x) {
  const int n = x.n();
  ExtremalFormA out;
  out.r = x(n) + 1;
  out.i = x(0) < out.r - 1 ? x(0) : x(0) - 1;
  // Peel h(r,i) off the left.
  Perm p = x;
  for (int k = out.r; k <= n; ++k) p.left_mul(k);
  for (int k = out.i; k >= 1; --k) p.left_mul(k);
  out.tail = finite_word(finite_canonical_of(p), finite_a(n));
  out.extremal = (out.r == 1 && out.i == 0) || (out.i >= 1 && out.r <= n);
  return out;
}

ExtremalFormA extremal_decompose(const GroupElement& g) {
  Word w = reduced_word(g);
  return extremal_decompose(perm_of_word(g.type().n(), w));
}

std::optional<BrickExchange> brick_exchange(int n, Brick left, Brick right) {
  check_brick(n, left);
  if (!interior_bounds(n, right))
    throw InputError("right brick violates interior bounds");
  if (valid_pair(n, left, right)) return std::nullopt;
  const int r = left.j, u = left.i, s = right.j, v = right.i;
  if (r > u + 1 && s >= r) return BrickExchange{{s + 1, u}, {r, v}, 1, 1};
  if (s > u + 1 && u + 1 >= v + 1)
    return BrickExchange{{r, v - 1}, {s, u}, n, 2};
  if (v + 1 < s && s <= u + 1)
    return BrickExchange{{r, v - 1}, {s - 1, u - 1}, n, 3};
  // Also covers v = 0, i.e. a right brick (1,0).
  if (s <= v + 1 && v < u) return BrickExchange{{r, v}, {s, u - 1}, n, 4};
  if (r <= u + 1 && u + 1 < s)
    return BrickExchange{{s + 1, u + 1}, {r + 1, v}, 1, 5};
  if (r < s && s <= u + 1) return BrickExchange{{s, u}, {r + 1, v}, 1, 6};
  throw std::logic_error("no exchange rule for an invalid brick pair");
}

SubcaseRewrite subcase_rewrite(int n, Brick prev, int j_m) {
  check_brick(n, prev);
  const int a = prev.i, b = prev.j, c = j_m;
  if (c <= 1 || c > n) throw InputError("subcase rewrite needs 1 < j_m <= n");
  if (b > c && c > a + 1) return {{c, a}, b - 1};
  if (b > a + 1 && a + 1 >= c) return {{c - 1, a - 1}, b - 1};
  if (a + 1 >= b && b >= c) return {{c - 1, a}, b};
  throw InputError("subcase rewrite outside the pairwise inequalities");
}

int CanonicalFormA::length() const {
  return block_length(block) + finite_length(finite);
}

CanonicalFormA canonicalize(const Word& w) {
  if (w.type.family() != Family::AffineA)
    throw InputError("canonicalize expects a word over A~_n");
  const int n = w.type.n();
  CanonicalFormA f{{n, {}}, {n, {}}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    f = left_mult_form(*it, f);
  return f;
}

Word form_word(const CanonicalFormA& f) {
  if (!validate_form(f)) throw InputError("invalid canonical form");
  return block_word(f.block) * finite_word(f.finite, affine_a(f.n()));
}

bool validate_form(const CanonicalFormA& f) {
  return f.block.n == f.finite.n && f.block.n >= 1 &&
         validate_block(f.block.n, f.block.bricks) && validate_finite(f.finite);
}

GroupElement element_of(const CanonicalFormA& f) {
  return element_of(form_word(f));
}

}  // namespace coxcanon
