#include "coxcanon/perm.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace coxcanon {

Perm::Perm(int n) : p_(static_cast<std::size_t>(n + 1)) {
  std::iota(p_.begin(), p_.end(), 0);
}

void Perm::right_mul(int k) { std::swap(p_[k - 1], p_[k]); }

void Perm::left_mul(int k) {
  for (int& v : p_) {
    if (v == k - 1) v = k;
    else if (v == k) v = k - 1;
  }
}

Perm Perm::inverse() const {
  Perm q(n());
  for (int x = 0; x <= n(); ++x) q.p_[p_[x]] = x;
  return q;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if (p_[i] > p_[j]) ++inv;
  return inv;
}

SignedPerm::SignedPerm(int n) : v_(static_cast<std::size_t>(n + 1)) {
  std::iota(v_.begin(), v_.end(), 1);
}

void SignedPerm::right_mul(int k) {
  // (x o s)(e_i) = x(s(e_i)).
  if (k == 0) {
    const int a = v_[0], b = v_[1];
    v_[0] = -b;
    v_[1] = -a;
  } else {
    std::swap(v_[k - 1], v_[k]);
  }
}

void SignedPerm::left_mul(int k) {
  for (int& v : v_) {
    const int s = v < 0 ? -1 : 1;
    const int a = std::abs(v);
    if (k == 0) {
      if (a == 1) v = -s * 2;
      else if (a == 2) v = -s * 1;
    } else {
      if (a == k) v = s * (k + 1);
      else if (a == k + 1) v = s * k;
    }
  }
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm q(n());
  for (int i = 0; i <= n(); ++i) {
    const int v = v_[i];
    const int target = std::abs(v) - 1;
    q.v_[target] = v < 0 ? -(i + 1) : (i + 1);
  }
  return q;
}

}  // namespace coxcanon
