#include "coxcanon/affine_bd.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace coxcanon {

namespace {

// Stored pair tables, generated by tools/gen_d_pair_table.
struct StoredPair {
  int n, j1, i1, j2, i2;
};
#include "d_pair_table.inc"

void require_d_letters(const CoxeterType& t) {
  if (t.family() != Family::FiniteD && t.family() != Family::AffineB &&
      t.family() != Family::AffineD)
    throw InputError("type " + t.name() + " has no D_{n+1} parabolic");
}

// Signed index of <m,n] e_{n+1}.
int segment_point(int m) {
  if (m >= 1) return m;
  if (m == -1) return -1;
  if (m == 0) return -2;
  return m - 1;
}

int segment_of_point(int p) {
  if (p >= 1) return p;
  if (p == -1) return -1;
  if (p == -2) return 0;
  return p + 1;
}

// Action of a SignedPerm generator on a signed index.
int act(int g, int p) {
  const int s = p < 0 ? -1 : 1;
  const int a = std::abs(p);
  if (g == 0) {
    if (a == 1) return -s * 2;
    if (a == 2) return -s * 1;
    return p;
  }
  if (a == g) return s * (g + 1);
  if (a == g + 1) return s * g;
  return p;
}

void check_segment(int m, int k) {
  if (k < 1 || m < -k || m > k + 1) throw InputError("segment out of range");
}

}  // namespace

CoxeterType finite_d(int n) { return CoxeterType(Family::FiniteD, n); }
CoxeterType affine_b(int n) { return CoxeterType(Family::AffineB, n); }
CoxeterType affine_d(int n) { return CoxeterType(Family::AffineD, n); }

int segment_length(int m, int k) {
  check_segment(m, k);
  if (m >= -1) return k - std::abs(m) + 1;
  return k - m;
}

Word segment_word(const CoxeterType& t, int m, int k) {
  require_d_letters(t);
  check_segment(m, k);
  if (k > t.n()) throw InputError("segment beyond the diagram");
  Word w(t);
  const Gen b1 = t.n();
  if (m >= 1) {
    for (int r = m; r <= k; ++r) w.letters.push_back(r - 1);
    return w;
  }
  for (int r = -m; r >= 2; --r) w.letters.push_back(r - 1);
  if (m != -1) w.letters.push_back(0);
  w.letters.push_back(b1);
  for (int r = 2; r <= k; ++r) w.letters.push_back(r - 1);
  return w;
}

int signed_gen(const CoxeterType& t, Gen g) {
  require_d_letters(t);
  if (g >= 0 && g < t.n()) return g + 1;
  if (g == t.n()) return 0;
  throw InputError("letter " + t.label(g) + " is not in D_{n+1}");
}

SignedPerm signed_perm_of_word(int n, const Word& w) {
  if (w.type.n() != n) throw InputError("rank mismatch");
  SignedPerm x(n);
  for (Gen g : w.letters) x.right_mul(signed_gen(w.type, g));
  return x;
}

SignedPerm segment_perm(int n, int m, int k) {
  return signed_perm_of_word(n, segment_word(finite_d(n), m, k));
}

SignedPerm signed_perm_of(const FiniteDCanonical& f) {
  return signed_perm_of_word(f.n, finite_d_word(f, finite_d(f.n)));
}

FiniteDCanonical d_finite_canonical_of(const SignedPerm& x0) {
  const int n = x0.n();
  FiniteDCanonical out{n, {}};
  SignedPerm x = x0;
  const CoxeterType t = finite_d(n);
  for (int k = n; k >= 1; --k) {
    const int m = segment_of_point(x(k + 1));
    if (m == k + 1) continue;
    out.runs.push_back({m, k});
    for (Gen g : segment_word(t, m, k).letters) x.left_mul(signed_gen(t, g));
  }
  return out;
}

FiniteDCanonical d_finite_canonicalize(const Word& w) {
  require_d_letters(w.type);
  return d_finite_canonical_of(signed_perm_of_word(w.type.n(), w));
}

bool validate_finite_d(const FiniteDCanonical& f) {
  int prev = f.n + 1;
  for (const DRun& r : f.runs) {
    if (r.k >= prev || r.k < 1 || r.m < -r.k || r.m > r.k) return false;
    prev = r.k;
  }
  return true;
}

Word finite_d_word(const FiniteDCanonical& f, const CoxeterType& t) {
  if (t.n() != f.n) throw InputError("rank mismatch");
  Word w(t);
  for (const DRun& r : f.runs) w = w * segment_word(t, r.m, r.k);
  return w;
}

int finite_d_length(const FiniteDCanonical& f) {
  int l = 0;
  for (const DRun& r : f.runs) l += segment_length(r.m, r.k);
  return l;
}

int b_brick_length(int n, int j) { return segment_length(j, n) + 1; }

bool b_valid_pair(int n, int prev, int next) {
  if (next < -n || next > n) return false;
  const int lp = segment_length(prev, n), lq = segment_length(next, n);
  if (lp > lq) return false;
  if (lp < n) return lp < lq;
  if (lp == n) return lp < lq || next == -prev;
  return true;
}

bool validate_b_block(int n, const std::vector<int>& js) {
  for (std::size_t s = 0; s < js.size(); ++s) {
    const int hi = s == 0 ? n + 1 : n;
    if (js[s] < -n || js[s] > hi) return false;
    if (s > 0 && !b_valid_pair(n, js[s - 1], js[s])) return false;
  }
  return true;
}

std::optional<BPairRewrite> b_pair_rewrite(int n, int i, int j) {
  if (i < -n || i > n + 1 || j < -n || j > n)
    throw InputError("pair parameters out of range");
  if (b_valid_pair(n, i, j)) return std::nullopt;
  if ((1 <= i && i <= j) || (-1 <= i && i <= 0 && 2 <= j) ||
      (i <= -2 && -i < j))
    return BPairRewrite{j + 1, i, 1};
  if (i == -1 && j == -1) return BPairRewrite{2, -1, 2};
  if (i == 0 && j == -1) return BPairRewrite{1, -1, 3};
  if (i == 0 && j == 1) return BPairRewrite{-1, 1, 3};
  if (i == -2) {
    switch (j) {
      case 0: return BPairRewrite{0, 0, 4};
      case 1: return BPairRewrite{-1, 0, 4};
      case -1: return BPairRewrite{1, 0, 4};
      case 2: return BPairRewrite{2, 0, 4};
      default: break;
    }
  }
  if (i <= -3 && (j == 0 || (2 <= j && j <= -i) || (i < j && j <= -2)))
    return BPairRewrite{j, i + 1, 5};
  if (i <= -3 && (j == 1 || j == -1)) return BPairRewrite{-j, i + 1, 6};
  throw std::logic_error("pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is not covered by the table");
}

Word b_block_word(const BBlock& block) {
  const CoxeterType t = affine_b(block.n);
  Word w(t);
  for (int j : block.js) w = w * segment_word(t, j, block.n) * t.affine_gen();
  return w;
}

Word b_form_word(const CanonicalFormB& f) {
  return b_block_word(f.block) * finite_d_word(f.finite, affine_b(f.n()));
}

bool validate_b_form(const CanonicalFormB& f) {
  return f.finite.n == f.n() && validate_b_block(f.n(), f.block.js) &&
         validate_finite_d(f.finite);
}

namespace {

// Splits a right-lex-min word at each occurrence of `aff`; the pieces before
// each occurrence are returned in `pieces`, the remainder in `tail`.
void split_at(const Word& w, Gen aff, std::vector<Word>& pieces, Word& tail) {
  Word cur(w.type);
  for (Gen g : w.letters) {
    if (g == aff) {
      pieces.push_back(cur);
      cur.letters.clear();
    } else {
      cur.letters.push_back(g);
    }
  }
  tail = cur;
}

FiniteDCanonical parse_finite(const Word& tail) {
  FiniteDCanonical f = d_finite_canonicalize(tail);
  if (!(finite_d_word(f, tail.type) == tail))
    throw std::logic_error("finite tail is not in canonical form");
  return f;
}

}  // namespace

CanonicalFormB b_canonicalize(const Word& w) {
  if (w.type.family() != Family::AffineB)
    throw InputError("b_canonicalize needs type Bt");
  const CoxeterType t = w.type;
  const int n = t.n();
  const Word lexmin = right_lexmin(element_of(w));
  std::vector<Word> pieces;
  Word tail(t);
  split_at(lexmin, t.affine_gen(), pieces, tail);
  CanonicalFormB out{{n, {}}, parse_finite(tail)};
  for (const Word& p : pieces) {
    bool found = false;
    for (int j = -n; j <= n + 1 && !found; ++j) {
      if (segment_word(t, j, n) == p) {
        out.block.js.push_back(j);
        found = true;
      }
    }
    if (!found) throw std::logic_error("brick prefix is not a segment");
  }
  if (!validate_b_block(n, out.block.js))
    throw std::logic_error("parsed block violates the block conditions");
  return out;
}

BLeftResult b_left_mult(Gen s, const BBlock& block) {
  const int n = block.n;
  const CoxeterType t = affine_b(n);
  if (block.js.empty()) throw InputError("b_left_mult needs a nonempty block");
  if (!validate_b_block(n, block.js)) throw InputError("invalid block");
  if (s < 0 || s >= t.rank()) throw InputError("generator index out of range");
  using C = BLeftResult::Case;
  BLeftResult out;
  out.block = block;
  auto& js = out.block.js;
  if (s == t.affine_gen()) {
    out.old_j = js.front();
    if (js.front() <= n) {
      out.which = C::PrependT;
      out.delta = +1;
      js.insert(js.begin(), n + 1);
    } else {
      out.which = C::DropFirst;
      out.delta = -1;
      js.erase(js.begin());
    }
    return out;
  }
  const std::size_t m = js.size();
  Gen pending = s;
  std::size_t pos = 0;
  for (;;) {
    if (pos >= m) {
      out.which = C::TimesSigma;
      out.sigma = pending;
      out.delta = +1;
      return out;
    }
    const int j = js[pos];
    const int g = signed_gen(t, pending);
    const int q = act(g, segment_point(j));
    if (q == segment_point(j)) {
      // sigma <j,n] = <j,n] r with r in W(D_n), which commutes with t.
      const Word seg = segment_word(t, j, n);
      SignedPerm conj = signed_perm_of_word(n, seg);
      conj.left_mul(g);
      for (Gen c : seg.letters) conj.left_mul(signed_gen(t, c));
      Gen r = -1;
      for (Gen c = 0; c <= n && r < 0; ++c) {
        if (c == n - 1) continue;
        SignedPerm gen(n);
        gen.right_mul(signed_gen(t, c));
        if (gen == conj) r = c;
      }
      if (r < 0) throw std::logic_error("conjugate is not a simple reflection");
      pending = r;
      ++pos;
      continue;
    }
    const int jn = segment_of_point(q);
    const int delta = segment_length(jn, n) > segment_length(j, n) ? +1 : -1;
    js[pos] = jn;
    if (pos > 0 && (jn > n || !b_valid_pair(n, js[pos - 1], jn)))
      throw std::logic_error("left multiplication broke the previous pair");
    if (pos + 1 < m && !b_valid_pair(n, jn, js[pos + 1])) {
      auto rw = b_pair_rewrite(n, jn, js[pos + 1]);
      if (!rw || rw->left != j || rw->right != js[pos + 1])
        throw std::logic_error("pair rewrite did not restore the block");
      js[pos] = j;
      pending = n - 1;
      pos += 2;
      continue;
    }
    out.which = C::OneEntry;
    out.changed = static_cast<int>(pos);
    out.old_j = j;
    out.delta = delta;
    return out;
  }
}

CanonicalFormB b_left_mult_form(Gen s, const CanonicalFormB& f) {
  const int n = f.n();
  const CoxeterType t = affine_b(n);
  CanonicalFormB out = f;
  auto left_finite = [&](Gen g) {
    SignedPerm x = signed_perm_of(out.finite);
    x.left_mul(signed_gen(t, g));
    out.finite = d_finite_canonical_of(x);
  };
  if (f.block.js.empty()) {
    if (s == t.affine_gen()) out.block.js.push_back(n + 1);
    else left_finite(s);
    return out;
  }
  BLeftResult r = b_left_mult(s, f.block);
  out.block = r.block;
  if (r.which == BLeftResult::Case::TimesSigma) left_finite(r.sigma);
  return out;
}

Word b_embed(const Word& w) {
  if (w.type.family() != Family::AffineB)
    throw InputError("b_embed needs type Bt");
  const int src = w.type.n();
  const int n = src + 1;
  Word out(affine_b(n));
  for (Gen g : w.letters) {
    if (g < src) out.letters.push_back(g);
    else if (g == src) out.letters.push_back(n);
    else out.letters.insert(out.letters.end(), {n - 1, n + 1, n - 1});
  }
  return out;
}

GenSet b_right_descents(const CanonicalFormB& f) {
  const CoxeterType t = affine_b(f.n());
  GenSet r = element_of(finite_d_word(f.finite, t)).right_descents();
  if (f.block.js.empty()) return r;
  bool extremal = false;
  for (const DRun& run : f.finite.runs) extremal |= run.k == f.n();
  if (!extremal) {
    r.insert(t.affine_gen());
    return r;
  }
  // Extremal x does not settle t on its own: the last brick can pair
  // with the leading segment of x. Build w t from the right instead.
  const Word w = b_form_word(f);
  CanonicalFormB g{{f.n(), {f.n() + 1}}, {f.n(), {}}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    g = b_left_mult_form(*it, g);
  if (b_form_word(g).size() < w.size()) r.insert(t.affine_gen());
  return r;
}

bool d_is_exceptional(int n, DBrick b) { return b.j == n + 1 && b.i == n; }

bool d_in_set_e(int n, DBrick b) {
  const int j = b.j, i = b.i;
  if (i < -(n - 1) || i > n - 1 || j < -n || j > n + 1) return false;
  if (i >= 2) return j > i;
  if (i == 1 || i == -1) return j == -i || j >= 2;
  if (i == 0) return j >= -1;
  return j >= i;
}

bool d_is_extremal(int n, DBrick b) {
  if (!d_in_set_e(n, b)) return false;
  const int j = b.j, i = b.i;
  if (i == -(n - 1)) return true;
  return j <= n - 1;
}

std::vector<DBrick> d_set_e(int n) {
  std::vector<DBrick> out;
  for (int j = -n; j <= n + 1; ++j)
    for (int i = -(n - 1); i <= n - 1; ++i)
      if (d_in_set_e(n, {j, i})) out.push_back({j, i});
  return out;
}

Word d_brick_word(const CoxeterType& t, DBrick b) {
  if (t.family() != Family::AffineD) throw InputError("D~ bricks need type Dt");
  const int n = t.n();
  return segment_word(t, b.j, n) * segment_word(t, b.i, n - 1) *
         t.affine_gen();
}

std::set<std::pair<DBrick, DBrick>> d_pair_table_oracle(int n) {
  const CoxeterType t = affine_d(n);
  std::vector<DBrick> firsts = d_set_e(n);
  firsts.push_back({n + 1, n});
  std::set<std::pair<DBrick, DBrick>> out;
  for (const DBrick& p : firsts) {
    for (const DBrick& q : firsts) {
      const Word w = d_brick_word(t, p) * d_brick_word(t, q);
      if (is_reduced(w) && right_lexmin(element_of(w)) == w)
        out.insert({p, q});
    }
  }
  return out;
}

const std::set<std::pair<DBrick, DBrick>>& d_pair_table(int n) {
  static std::mutex mu;
  static std::map<int, std::set<std::pair<DBrick, DBrick>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::set<std::pair<DBrick, DBrick>> table;
  bool stored = false;
  for (const StoredPair& p : kStoredPairs) {
    if (p.n != n) continue;
    stored = true;
    table.insert({{p.j1, p.i1}, {p.j2, p.i2}});
  }
  if (!stored) table = d_pair_table_oracle(n);
  return cache.emplace(n, std::move(table)).first->second;
}

std::optional<bool> d_pair_clause(int n, DBrick prev, DBrick next) {
  // The clauses only look at j_{s+1} and i_s. They do not describe pairs
  // after the bare sigma_nbar brick or before a brick with i = -(n-1), where
  // the oracle table also depends on j_s and i_{s+1}.
  if (d_is_exceptional(n, prev) || next.i == -(n - 1)) return std::nullopt;
  const int jn = next.j, ip = prev.i;
  if (jn >= n || jn <= -n) return false;
  if (jn >= 2) return ip > jn;
  if (jn == 1 || jn == -1) return ip == -jn || ip >= 2;
  if (jn == 0) return ip >= -1;
  // Printed as "n-1 >= i_{s+1} >= j_s"; read as "n-1 >= i_s >= j_{s+1}".
  return ip >= jn;
}

bool d_brick_validate(int n, int j, int i, BrickPosition pos,
                      std::optional<DBrick> successor) {
  if (n < 3 || j < -n || j > n + 1 || i < -(n - 1) || i > n)
    throw InputError("brick parameters out of range");
  const DBrick b{j, i};
  const bool ok = pos == BrickPosition::First
                      ? d_in_set_e(n, b) || d_is_exceptional(n, b)
                      : d_is_extremal(n, b);
  if (!ok) return false;
  if (!successor) return true;
  return d_is_extremal(n, *successor) &&
         d_pair_table(n).count({b, *successor}) > 0;
}

bool validate_d_block(const DBlock& block) {
  const int n = block.n;
  for (std::size_t s = 0; s < block.bricks.size(); ++s) {
    const DBrick b = block.bricks[s];
    if (b.j < -n || b.j > n + 1 || b.i < -(n - 1) || b.i > n) return false;
    std::optional<DBrick> next;
    if (s + 1 < block.bricks.size()) next = block.bricks[s + 1];
    if (!d_brick_validate(n, b.j, b.i,
                          s == 0 ? BrickPosition::First : BrickPosition::Interior,
                          next))
      return false;
  }
  return true;
}

Word d_block_word(const DBlock& block) {
  const CoxeterType t = affine_d(block.n);
  Word w(t);
  for (const DBrick& b : block.bricks) w = w * d_brick_word(t, b);
  return w;
}

Word d_form_word(const CanonicalFormD& f) {
  return d_block_word(f.block) * finite_d_word(f.finite, affine_d(f.n()));
}

CanonicalFormD d_canonicalize(const Word& w) {
  if (w.type.family() != Family::AffineD)
    throw InputError("d_canonicalize needs type Dt");
  const CoxeterType t = w.type;
  const int n = t.n();
  const Word lexmin = right_lexmin(element_of(w));
  std::vector<Word> pieces;
  Word tail(t);
  split_at(lexmin, t.affine_gen(), pieces, tail);
  CanonicalFormD out{{n, {}}, parse_finite(tail)};
  for (const Word& p : pieces) {
    if (p.letters.empty()) {
      out.block.bricks.push_back({n + 1, n});
      continue;
    }
    const FiniteDCanonical f = parse_finite(p);
    DBrick b{n + 1, n};
    if (f.runs.size() == 2 && f.runs[0].k == n && f.runs[1].k == n - 1) {
      b = {f.runs[0].m, f.runs[1].m};
    } else if (f.runs.size() == 1 && f.runs[0].k == n - 1) {
      b = {n + 1, f.runs[0].m};
    } else {
      throw std::logic_error("brick prefix does not end with sigma_{n-1}");
    }
    out.block.bricks.push_back(b);
  }
  if (!validate_d_block(out.block))
    throw std::logic_error("parsed block fails brick validation");
  return out;
}

}  // namespace coxcanon
