#include "coxcanon/coxeter.hpp"

#include <algorithm>

namespace coxcanon {

namespace {

int min_n(Family f) {
  switch (f) {
    case Family::FiniteA: return 1;
    case Family::FiniteD: return 2;
    case Family::AffineA: return 1;
    case Family::AffineB: return 2;
    case Family::AffineD: return 3;
  }
  return 1;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::FiniteA: return "A";
    case Family::FiniteD: return "D";
    case Family::AffineA: return "At";
    case Family::AffineB: return "Bt";
    case Family::AffineD: return "Dt";
  }
  return "?";
}

}  // namespace

CoxeterType::CoxeterType(Family family, int n) : family_(family), n_(n) {
  if (n < min_n(family) || n > 60) {
    throw InputError("rank parameter " + std::to_string(n) +
                     " out of range for type " + family_name(family));
  }
}

int CoxeterType::rank() const {
  switch (family_) {
    case Family::FiniteA: return n_;
    case Family::FiniteD:
    case Family::AffineA: return n_ + 1;
    case Family::AffineB:
    case Family::AffineD: return n_ + 2;
  }
  return n_;
}

int CoxeterType::cartan(Gen i, Gen j) const {
  if (i == j) return 2;
  int lo = std::min(i, j), hi = std::max(i, j);
  const int n = n_;
  // Chain sigma_1 - ... - sigma_n.
  if (hi < n) return hi == lo + 1 ? -1 : 0;
  switch (family_) {
    case Family::FiniteA: return 0;
    case Family::AffineA:
      if (n == 1) return -2;
      return (lo == 0 || lo == n - 1) ? -1 : 0;
    case Family::FiniteD:
      return lo == 1 ? -1 : 0;
    case Family::AffineB:
      if (hi == n) return (lo == 1) ? -1 : 0;
      // hi is t.
      if (lo == n - 1) return i == n - 1 ? -2 : -1;
      return 0;
    case Family::AffineD:
      if (hi == n) return (lo == 1) ? -1 : 0;
      return lo == n - 2 ? -1 : 0;
  }
  return 0;
}

int CoxeterType::coxeter_m(Gen i, Gen j) const {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

Gen CoxeterType::sigma(int k) const {
  if (k < 1 || k > n_) throw InputError("sigma index out of range");
  return k - 1;
}

Gen CoxeterType::affine_gen() const {
  switch (family_) {
    case Family::AffineA: return n_;
    case Family::AffineB:
    case Family::AffineD: return n_ + 1;
    default: throw InputError("finite type has no affine generator");
  }
}

Gen CoxeterType::bar1() const {
  if (family_ == Family::FiniteD || family_ == Family::AffineB ||
      family_ == Family::AffineD)
    return n_;
  throw InputError("type has no sigma_1bar");
}

std::string CoxeterType::label(Gen g) const {
  if (g >= 0 && g < n_) return "s" + std::to_string(g + 1);
  switch (family_) {
    case Family::AffineA:
      if (g == n_) return "a";
      break;
    case Family::FiniteD:
      if (g == n_) return "b1";
      break;
    case Family::AffineB:
      if (g == n_) return "b1";
      if (g == n_ + 1) return "t";
      break;
    case Family::AffineD:
      if (g == n_) return "b1";
      if (g == n_ + 1) return "bn";
      break;
    default: break;
  }
  throw InputError("generator index out of range");
}

std::string CoxeterType::name() const {
  return std::string(family_name(family_)) + "(" + std::to_string(n_) + ")";
}

std::vector<Gen> GenSet::members() const {
  std::vector<Gen> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

int Word::count(Gen g) const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), g));
}

Word Word::reversed() const {
  return Word(type, std::vector<Gen>(letters.rbegin(), letters.rend()));
}

Word operator*(const Word& lhs, const Word& rhs) {
  if (!(lhs.type == rhs.type)) throw InputError("mixed-type word");
  Word out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(),
                     rhs.letters.end());
  return out;
}

Word operator*(const Word& lhs, Gen g) {
  Word out = lhs;
  out.letters.push_back(g);
  return out;
}

Word operator*(Gen g, const Word& rhs) {
  Word out = rhs;
  out.letters.insert(out.letters.begin(), g);
  return out;
}

GeneratorOrder::GeneratorOrder(const CoxeterType& t, std::vector<Gen> asc)
    : ascending_(std::move(asc)), position_(t.rank(), -1) {
  if (static_cast<int>(ascending_.size()) != t.rank()) {
    throw InputError("generator order must list every generator once");
  }
  for (std::size_t k = 0; k < ascending_.size(); ++k) {
    Gen g = ascending_[k];
    if (g < 0 || g >= t.rank() || position_[g] != -1) {
      throw InputError("generator order must list every generator once");
    }
    position_[g] = static_cast<int>(k);
  }
}

GeneratorOrder GeneratorOrder::default_for(const CoxeterType& t) {
  std::vector<Gen> asc;
  const int n = t.n();
  switch (t.family()) {
    case Family::FiniteA:
    case Family::AffineA:
      // sigma_1 < ... < sigma_n < a: the Stembridge tail is right-lex-min
      // only for this chain.
      for (int k = 0; k < t.rank(); ++k) asc.push_back(k);
      break;
    case Family::FiniteD:
    case Family::AffineB:
    case Family::AffineD:
      asc.push_back(n);
      for (int k = 0; k < n; ++k) asc.push_back(k);
      if (t.rank() > n + 1) asc.push_back(n + 1);
      break;
  }
  return GeneratorOrder(t, std::move(asc));
}

GenSet parabolic_P(const CoxeterType& t) {
  GenSet p;
  for (int k = 2; k <= t.n() - 1; ++k) p.insert(k - 1);
  return p;
}

GenSet finite_part(const CoxeterType& t) {
  GenSet all = GenSet::all(t);
  if (t.is_affine()) all.erase(t.affine_gen());
  return all;
}

}  // namespace coxcanon
