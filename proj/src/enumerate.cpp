#include "coxcanon/enumerate.hpp"

#include <functional>

namespace coxcanon {

std::vector<AffineBlockA> enumerate_blocks_a(int n, int max_affine,
                                             int max_len) {
  std::vector<AffineBlockA> out;
  std::vector<Brick> all;
  for (int j = 1; j <= n + 1; ++j)
    for (int i = 0; i <= n - 1; ++i) all.push_back({j, i});
  AffineBlockA cur{n, {}};
  std::function<void(int)> rec = [&](int l) {
    out.push_back(cur);
    if (max_affine >= 0 && static_cast<int>(cur.bricks.size()) >= max_affine)
      return;
    for (const Brick& b : all) {
      if (!cur.bricks.empty() && !valid_pair(n, cur.bricks.back(), b)) continue;
      const int nl = l + brick_length(n, b);
      if (nl > max_len) continue;
      cur.bricks.push_back(b);
      rec(nl);
      cur.bricks.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<FiniteACanonical> enumerate_finite_a(int n) {
  std::vector<FiniteACanonical> out;
  FiniteACanonical cur{n, {}};
  // For each l from n down to 1 pick floor(k,l) with 1 <= k <= l, or skip.
  std::function<void(int)> rec = [&](int l) {
    if (l == 0) {
      out.push_back(cur);
      return;
    }
    rec(l - 1);
    for (int k = 1; k <= l; ++k) {
      cur.runs.push_back({k, l});
      rec(l - 1);
      cur.runs.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<CanonicalFormA> enumerate_forms_a(int n, int max_len,
                                              int max_affine) {
  std::vector<CanonicalFormA> out;
  const auto finite = enumerate_finite_a(n);
  for (const AffineBlockA& b : enumerate_blocks_a(n, max_affine, max_len)) {
    const int bl = block_length(b);
    for (const FiniteACanonical& f : finite)
      if (bl + finite_length(f) <= max_len) out.push_back({b, f});
  }
  return out;
}

std::vector<FiniteDCanonical> enumerate_finite_d(int n) {
  std::vector<FiniteDCanonical> out;
  FiniteDCanonical cur{n, {}};
  std::function<void(int)> rec = [&](int k) {
    if (k == 0) {
      out.push_back(cur);
      return;
    }
    rec(k - 1);
    for (int m = -k; m <= k; ++m) {
      cur.runs.push_back({m, k});
      rec(k - 1);
      cur.runs.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<BBlock> enumerate_blocks_b(int n, int max_affine, int max_len) {
  std::vector<BBlock> out;
  BBlock cur{n, {}};
  std::function<void(int)> rec = [&](int l) {
    out.push_back(cur);
    if (max_affine >= 0 && static_cast<int>(cur.js.size()) >= max_affine)
      return;
    const int hi = cur.js.empty() ? n + 1 : n;
    for (int j = -n; j <= hi; ++j) {
      if (!cur.js.empty() && !b_valid_pair(n, cur.js.back(), j)) continue;
      const int nl = l + b_brick_length(n, j);
      if (nl > max_len) continue;
      cur.js.push_back(j);
      rec(nl);
      cur.js.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<CanonicalFormB> enumerate_forms_b(int n, int max_len,
                                              int max_affine) {
  std::vector<CanonicalFormB> out;
  const auto finite = enumerate_finite_d(n);
  for (const BBlock& b : enumerate_blocks_b(n, max_affine, max_len)) {
    int bl = 0;
    for (int j : b.js) bl += b_brick_length(n, j);
    for (const FiniteDCanonical& f : finite)
      if (bl + finite_d_length(f) <= max_len) out.push_back({b, f});
  }
  return out;
}

int d_brick_length(int n, DBrick b) {
  return segment_length(b.j, n) + segment_length(b.i, n - 1) + 1;
}

std::vector<DBlock> enumerate_blocks_d(int n, int max_affine, int max_len) {
  std::vector<DBlock> out;
  std::vector<DBrick> all = d_set_e(n);
  all.push_back({n + 1, n});
  DBlock cur{n, {}};
  std::function<void(int)> rec = [&](int l) {
    out.push_back(cur);
    if (max_affine >= 0 && static_cast<int>(cur.bricks.size()) >= max_affine)
      return;
    for (const DBrick& b : all) {
      const BrickPosition pos =
          cur.bricks.empty() ? BrickPosition::First : BrickPosition::Interior;
      if (!d_brick_validate(n, b.j, b.i, pos)) continue;
      if (!cur.bricks.empty()) {
        const DBrick p = cur.bricks.back();
        if (!d_brick_validate(
                n, p.j, p.i,
                cur.bricks.size() == 1 ? BrickPosition::First
                                       : BrickPosition::Interior,
                b))
          continue;
      }
      const int nl = l + d_brick_length(n, b);
      if (nl > max_len) continue;
      cur.bricks.push_back(b);
      rec(nl);
      cur.bricks.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<CanonicalFormD> enumerate_forms_d(int n, int max_len,
                                              int max_affine) {
  std::vector<CanonicalFormD> out;
  const auto finite = enumerate_finite_d(n);
  for (const DBlock& b : enumerate_blocks_d(n, max_affine, max_len)) {
    int bl = 0;
    for (const DBrick& x : b.bricks) bl += d_brick_length(n, x);
    for (const FiniteDCanonical& f : finite)
      if (bl + finite_d_length(f) <= max_len) out.push_back({b, f});
  }
  return out;
}

}  // namespace coxcanon
