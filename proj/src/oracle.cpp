#include "coxcanon/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxcanon {

GroupElement GroupElement::identity(const CoxeterType& t) {
  GroupElement g;
  g.type_ = t;
  g.r_ = t.rank();
  g.m_.assign(static_cast<std::size_t>(g.r_ * g.r_), 0);
  for (int k = 0; k < g.r_; ++k) g.m_[k * g.r_ + k] = 1;
  return g;
}

GroupElement GroupElement::generator(const CoxeterType& t, Gen s) {
  GroupElement g = identity(t);
  g.left_mul_inplace(s);
  return g;
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (m_[i * r_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool GroupElement::has_right_descent(Gen s) const {
  // Column s is a root, so one negative coordinate means a negative root.
  for (int i = 0; i < r_; ++i)
    if (m_[i * r_ + s] < 0) return true;
  return false;
}

GenSet GroupElement::right_descents() const {
  GenSet out;
  for (int s = 0; s < r_; ++s)
    if (has_right_descent(s)) out.insert(s);
  return out;
}

void GroupElement::left_mul_inplace(Gen s) {
  // s(v) = v - (sum_j C(s,j) v_j) alpha_s changes only row s.
  std::vector<std::int32_t> row(static_cast<std::size_t>(r_), 0);
  for (int j = 0; j < r_; ++j) {
    const int c = type_.cartan(s, j);
    if (c == 0) continue;
    for (int k = 0; k < r_; ++k) row[k] += c * m_[j * r_ + k];
  }
  for (int k = 0; k < r_; ++k) m_[s * r_ + k] -= row[k];
}

void GroupElement::right_mul_inplace(Gen s) {
  // (w s)(alpha_j) = w(alpha_j) - C(s,j) w(alpha_s).
  for (int j = 0; j < r_; ++j) {
    if (j == s) continue;
    const int c = type_.cartan(s, j);
    if (c == 0) continue;
    for (int i = 0; i < r_; ++i) m_[i * r_ + j] -= c * m_[i * r_ + s];
  }
  for (int i = 0; i < r_; ++i) m_[i * r_ + s] = -m_[i * r_ + s];
}

GroupElement GroupElement::times(Gen s) const {
  GroupElement g = *this;
  g.right_mul_inplace(s);
  return g;
}

GroupElement GroupElement::left_times(Gen s) const {
  GroupElement g = *this;
  g.left_mul_inplace(s);
  return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (!(type_ == o.type_)) throw InputError("mixed-type product");
  GroupElement g = identity(type_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      std::int32_t acc = 0;
      for (int k = 0; k < r_; ++k) acc += m_[i * r_ + k] * o.m_[k * r_ + j];
      g.m_[i * r_ + j] = acc;
    }
  return g;
}

std::size_t GroupElement::hash() const {
  // FNV-1a over the row-major bytes.
  std::size_t h = 1469598103934665603ULL;
  const auto* p = reinterpret_cast<const unsigned char*>(m_.data());
  for (std::size_t k = 0; k < m_.size() * sizeof(std::int32_t); ++k) {
    h ^= p[k];
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

void check_letters(const Word& w) {
  const int r = w.type.rank();
  for (Gen g : w.letters)
    if (g < 0 || g >= r) throw InputError("generator index out of range");
}

}  // namespace

GroupElement element_of(const Word& w) {
  check_letters(w);
  GroupElement g = GroupElement::identity(w.type);
  for (Gen s : w.letters) g.right_mul_inplace(s);
  return g;
}

std::vector<GroupElement> reflection_sequence(const Word& w) {
  check_letters(w);
  std::vector<GroupElement> out;
  out.reserve(w.size());
  GroupElement prefix = GroupElement::identity(w.type);
  GroupElement prefix_inv = prefix;
  for (Gen s : w.letters) {
    out.push_back(prefix.times(s) * prefix_inv);
    prefix.right_mul_inplace(s);
    prefix_inv.left_mul_inplace(s);
  }
  return out;
}

bool is_reduced(const Word& w) {
  check_letters(w);
  GroupElement g = GroupElement::identity(w.type);
  for (Gen s : w.letters) {
    if (g.has_right_descent(s)) return false;
    g.right_mul_inplace(s);
  }
  return true;
}

Word right_lexmin(const GroupElement& g, const GeneratorOrder& order) {
  std::vector<Gen> rev;
  GroupElement x = g;
  for (;;) {
    Gen pick = -1;
    for (Gen s : order.ascending()) {
      if (x.has_right_descent(s)) {
        pick = s;
        break;
      }
    }
    if (pick < 0) break;
    rev.push_back(pick);
    x.right_mul_inplace(pick);
  }
  return Word(g.type(), std::vector<Gen>(rev.rbegin(), rev.rend()));
}

Word right_lexmin(const GroupElement& g) {
  return right_lexmin(g, GeneratorOrder::default_for(g.type()));
}

Word reduced_word(const GroupElement& g) { return right_lexmin(g); }

int length_of(const GroupElement& g) {
  return static_cast<int>(reduced_word(g).size());
}

GroupElement inverse(const GroupElement& g) {
  return element_of(reduced_word(g).reversed());
}

GenSet left_descents(const GroupElement& g) {
  return inverse(g).right_descents();
}

LengthDescents length_and_descents(const GroupElement& g) {
  Word w = reduced_word(g);
  LengthDescents out;
  out.length = static_cast<int>(w.size());
  out.right = g.right_descents();
  out.left = element_of(w.reversed()).right_descents();
  return out;
}

CosetSplit distinguished_rep(const GroupElement& g, GenSet I) {
  const GeneratorOrder order = GeneratorOrder::default_for(g.type());
  std::vector<Gen> rev;
  GroupElement x = g;
  for (;;) {
    Gen pick = -1;
    for (Gen s : order.ascending()) {
      if (I.contains(s) && x.has_right_descent(s)) {
        pick = s;
        break;
      }
    }
    if (pick < 0) break;
    rev.push_back(pick);
    x.right_mul_inplace(pick);
  }
  CosetSplit out;
  out.rep = reduced_word(x);
  out.tail = Word(g.type(), std::vector<Gen>(rev.rbegin(), rev.rend()));
  return out;
}

std::optional<std::size_t> hat_partner(const Word& prefix, Gen s) {
  if (!is_reduced(prefix)) throw InputError("hat_partner needs a reduced prefix");
  if (s < 0 || s >= prefix.type.rank())
    throw InputError("generator index out of range");
  GroupElement p = element_of(prefix);
  if (!p.has_right_descent(s)) return std::nullopt;
  // t = p s p^{-1} must appear in the reflection sequence of the prefix.
  GroupElement target = p.times(s) * element_of(prefix.reversed());
  std::vector<GroupElement> refl = reflection_sequence(prefix);
  for (std::size_t j = 0; j < refl.size(); ++j)
    if (refl[j] == target) return j + 1;
  throw std::logic_error("exchange condition failed in hat_partner");
}

namespace {

void collect_reduced_words(const GroupElement& g,
                           ElementMap<std::vector<std::vector<Gen>>>& memo,
                           const Limits& limits) {
  if (memo.count(g)) return;
  std::vector<std::vector<Gen>> out;
  if (g.is_identity()) {
    out.emplace_back();
  } else {
    for (Gen s = 0; s < g.rank(); ++s) {
      if (!g.has_right_descent(s)) continue;
      GroupElement h = g.times(s);
      collect_reduced_words(h, memo, limits);
      for (const auto& w : memo.at(h)) {
        out.push_back(w);
        out.back().push_back(s);
      }
      if (out.size() > limits.max_ball)
        throw ResourceLimitError("too many reduced words");
    }
  }
  memo.emplace(g, std::move(out));
}

}  // namespace

std::vector<Word> reduced_words_of(const GroupElement& g,
                                   const Limits& limits) {
  if (length_of(g) > limits.max_length)
    throw ResourceLimitError("element too long for reduced_words_of");
  ElementMap<std::vector<std::vector<Gen>>> memo;
  collect_reduced_words(g, memo, limits);
  std::vector<std::vector<Gen>> raw = memo.at(g);
  std::sort(raw.begin(), raw.end());
  std::vector<Word> out;
  out.reserve(raw.size());
  for (auto& w : raw) out.emplace_back(g.type(), std::move(w));
  return out;
}

GenCount AffineCountOracle::count(const GroupElement& g) {
  if (auto it = memo_.find(g); it != memo_.end()) return it->second;
  GenCount c;
  if (!g.is_identity()) {
    bool first = true;
    for (Gen s = 0; s < g.rank(); ++s) {
      if (!g.has_right_descent(s)) continue;
      GenCount sub = count(g.times(s));
      const int add = (s == gen_) ? 1 : 0;
      if (first) {
        c = {sub.min + add, sub.max + add};
        first = false;
      } else {
        c.min = std::min(c.min, sub.min + add);
        c.max = std::max(c.max, sub.max + add);
      }
    }
  }
  memo_.emplace(g, c);
  return c;
}

Word Ball::witness(std::size_t i) const {
  std::vector<Gen> rev;
  for (std::int64_t k = static_cast<std::int64_t>(i); entries[k].parent >= 0;
       k = entries[k].parent)
    rev.push_back(entries[k].letter);
  return Word(type, std::vector<Gen>(rev.rbegin(), rev.rend()));
}

std::optional<std::size_t> Ball::find(const GroupElement& g) const {
  auto it = index.find(g);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Candidate {
  GroupElement element;
  std::int64_t parent;
  Gen letter;
};

void check_ball_args(int max_len, const Limits& limits) {
  if (max_len < 0) throw InputError("negative ball radius");
  if (max_len > limits.max_length)
    throw ResourceLimitError("ball radius " + std::to_string(max_len) +
                             " exceeds the length limit");
}

Ball start_ball(const CoxeterType& t) {
  Ball b;
  b.type = t;
  b.entries.push_back({GroupElement::identity(t), 0, -1, -1});
  b.index.emplace(b.entries[0].element, 0);
  return b;
}

// Candidates must arrive ordered by (parent, letter) so that the first one
// kept for each element is the deterministic witness.
void absorb(Ball& b, std::vector<Candidate>& cands, int len,
            const Limits& limits) {
  for (auto& c : cands) {
    if (b.index.count(c.element)) continue;
    if (b.entries.size() >= limits.max_ball)
      throw ResourceLimitError("ball size limit exceeded");
    b.index.emplace(c.element, b.entries.size());
    b.entries.push_back({std::move(c.element), len, c.parent, c.letter});
  }
}

}  // namespace

Ball enumerate_ball_serial(const CoxeterType& t, int max_len,
                           const Limits& limits) {
  check_ball_args(max_len, limits);
  Ball b = start_ball(t);
  std::size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t hi = b.entries.size();
    std::vector<Candidate> cands;
    for (std::size_t p = lo; p < hi; ++p) {
      for (Gen s = 0; s < t.rank(); ++s) {
        const GroupElement& g = b.entries[p].element;
        if (g.has_right_descent(s)) continue;
        cands.push_back({g.times(s), static_cast<std::int64_t>(p), s});
      }
    }
    absorb(b, cands, len, limits);
    lo = hi;
  }
  return b;
}

Ball enumerate_ball(const CoxeterType& t, int max_len, const Limits& limits) {
#ifndef _OPENMP
  return enumerate_ball_serial(t, max_len, limits);
#else
  check_ball_args(max_len, limits);
  Ball b = start_ball(t);
  std::size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t hi = b.entries.size();
    const std::int64_t count = static_cast<std::int64_t>(hi - lo);
    const int nthreads = omp_get_max_threads();
    std::vector<std::vector<Candidate>> parts(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
      const int tid = omp_get_thread_num();
      const std::int64_t chunk = (count + nthreads - 1) / nthreads;
      const std::int64_t begin = std::min<std::int64_t>(count, tid * chunk);
      const std::int64_t end = std::min<std::int64_t>(count, begin + chunk);
      auto& out = parts[tid];
      for (std::int64_t k = begin; k < end; ++k) {
        const std::size_t p = lo + static_cast<std::size_t>(k);
        const GroupElement& g = b.entries[p].element;
        for (Gen s = 0; s < t.rank(); ++s) {
          if (g.has_right_descent(s)) continue;
          out.push_back({g.times(s), static_cast<std::int64_t>(p), s});
        }
      }
    }
    // Contiguous chunks in thread order keep (parent, letter) ordering.
    for (auto& part : parts) absorb(b, part, len, limits);
    lo = hi;
  }
  return b;
#endif
}

}  // namespace coxcanon
