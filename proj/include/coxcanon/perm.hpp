#ifndef COXCANON_PERM_HPP_
#define COXCANON_PERM_HPP_

#include <vector>

namespace coxcanon {

/// Permutation of {0..n}. sigma_k swaps k-1 and k. A word s_1...s_m maps to
/// the composition s_1 o ... o s_m.
class Perm {
 public:
  explicit Perm(int n);  // identity of Sym_{n+1}

  int n() const { return static_cast<int>(p_.size()) - 1; }
  int operator()(int x) const { return p_[x]; }
  const std::vector<int>& images() const { return p_; }

  void right_mul(int k);  // p o sigma_k
  void left_mul(int k);   // sigma_k o p
  bool right_descent(int k) const { return p_[k - 1] > p_[k]; }
  Perm inverse() const;
  int length() const;  // number of inversions

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

/// Signed permutation of e_1..e_{n+1} in W(D_{n+1}). Images are stored as
/// signed 1-based indices. Generator k in [1,n] is sigma_k; 0 is sigma_1bar.
class SignedPerm {
 public:
  explicit SignedPerm(int n);

  int n() const { return static_cast<int>(v_.size()) - 1; }
  // Signed image of e_i, 1 <= |i| <= n+1.
  int operator()(int i) const { return i > 0 ? v_[i - 1] : -v_[-i - 1]; }

  void right_mul(int k);
  void left_mul(int k);
  SignedPerm inverse() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> v_;
};

}  // namespace coxcanon

#endif  // COXCANON_PERM_HPP_
