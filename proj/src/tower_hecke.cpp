#include "coxcanon/tower_hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxcanon {

namespace {

void require_affine_a(const CoxeterType& t) {
  if (t.family() != Family::AffineA)
    throw InputError("tower maps act on type A~ only");
}

// s = max{k : i_k < n-k} over 1-based k, 0 when no brick qualifies.
int split_index(int n, const std::vector<Brick>& bricks) {
  int s = 0;
  for (std::size_t k = 1; k <= bricks.size(); ++k)
    if (bricks[k - 1].i < n - static_cast<int>(k)) s = static_cast<int>(k);
  return s;
}

}  // namespace

Word embed_word(const Word& w) {
  require_affine_a(w.type);
  const int src = w.type.n();
  const int n = src + 1;
  Word out(affine_a(n));
  for (Gen g : w.letters) {
    if (g == src) {
      out.letters.insert(out.letters.end(), {n - 1, n, n - 1});
    } else {
      out.letters.push_back(g);
    }
  }
  return out;
}

CanonicalFormA embed_canonical(const CanonicalFormA& f) {
  if (!validate_form(f)) throw InputError("invalid canonical form");
  const int n = f.n() + 1;
  CanonicalFormA out{{n, f.block.bricks}, {n, {}}};
  const int s = split_index(n, f.block.bricks);
  for (std::size_t k = static_cast<std::size_t>(s); k < out.block.bricks.size();
       ++k)
    out.block.bricks[k].i += 1;
  const int t = n - s + 1;
  if (t <= n) out.finite.runs.push_back({t, n});
  for (const Run& r : f.finite.runs) out.finite.runs.push_back(r);
  return out;
}

std::optional<CanonicalFormA> in_image(const CanonicalFormA& f) {
  if (!validate_form(f)) throw InputError("invalid canonical form");
  const int n = f.n();
  if (n < 2) throw InputError("in_image needs n >= 2");
  const auto& bricks = f.block.bricks;
  const int m = static_cast<int>(bricks.size());
  if (m >= 1 && !(bricks[0].j <= n && bricks[0].i < n - 1)) return std::nullopt;
  const int s = split_index(n, bricks);
  if (s < m && !(bricks[s].i > n - (s + 1))) return std::nullopt;
  const int t = n - s + 1;
  std::vector<Run> runs = f.finite.runs;
  if (t <= n) {
    if (runs.empty() || !(runs.front() == Run{t, n})) return std::nullopt;
    runs.erase(runs.begin());
  } else if (!runs.empty() && runs.front().l == n) {
    return std::nullopt;
  }
  CanonicalFormA pre{{n - 1, bricks}, {n - 1, runs}};
  for (int k = s; k < m; ++k) pre.block.bricks[k].i -= 1;
  if (!validate_form(pre))
    throw std::logic_error("preimage block violates the pairwise inequalities");
  return pre;
}

LaurentPolynomial::LaurentPolynomial(std::int64_t c) { add_term(0, c); }

LaurentPolynomial LaurentPolynomial::q_power(int k, std::int64_t c) {
  LaurentPolynomial p;
  p.add_term(k, c);
  return p;
}

void LaurentPolynomial::add_term(int k, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

bool LaurentPolynomial::is_q_power(int* k) const {
  if (terms_.size() != 1 || terms_.begin()->second != 1) return false;
  if (k) *k = terms_.begin()->first;
  return true;
}

std::int64_t LaurentPolynomial::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [k, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

HeckeElement HeckeElement::basis(const GroupElement& w) {
  HeckeElement h(w.type());
  h.add(w, 1);
  return h;
}

HeckeElement HeckeElement::one(const CoxeterType& t) {
  return basis(GroupElement::identity(t));
}

LaurentPolynomial HeckeElement::coeff(const GroupElement& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? LaurentPolynomial() : it->second;
}

void HeckeElement::add(const GroupElement& w, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto it = support_.find(w);
  if (it == support_.end()) {
    support_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) support_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (!(type_ == o.type_)) throw InputError("mixed-type Hecke sum");
  for (const auto& [w, c] : o.support_) add(w, c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPolynomial& c) const {
  HeckeElement out(type_);
  for (const auto& [w, d] : support_) out.add(w, c * d);
  return out;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (!(a.type_ == b.type_) || a.support_.size() != b.support_.size())
    return false;
  for (const auto& [w, c] : a.support_)
    if (!(b.coeff(w) == c)) return false;
  return true;
}

std::string HeckeElement::str() const {
  std::vector<std::pair<Word, std::string>> rows;
  for (const auto& [w, c] : support_) rows.emplace_back(reduced_word(w), c.str());
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size())
      return x.first.size() > y.first.size();
    return x.first.letters < y.first.letters;
  });
  std::ostringstream os;
  for (const auto& [w, c] : rows) {
    os << "(" << c << ") g[";
    for (std::size_t k = 0; k < w.size(); ++k)
      os << (k ? " " : "") << w.type.label(w[k]);
    os << "]\n";
  }
  return os.str();
}

namespace {

const LaurentPolynomial& q_minus_one() {
  static const LaurentPolynomial p = LaurentPolynomial::q_power(1) - 1;
  return p;
}

}  // namespace

HeckeElement hecke_mult(Gen s, const HeckeElement& h) {
  HeckeElement out(h.type());
  for (const auto& [w, c] : h.support()) {
    GroupElement sw = w.left_times(s);
    if (length_of(sw) > length_of(w)) {
      out.add(sw, c);
    } else {
      out.add(sw, LaurentPolynomial::q_power(1) * c);
      out.add(w, q_minus_one() * c);
    }
  }
  return out;
}

HeckeElement hecke_mult_right(const HeckeElement& h, Gen s) {
  HeckeElement out(h.type());
  for (const auto& [w, c] : h.support()) {
    GroupElement ws = w.times(s);
    if (!w.has_right_descent(s)) {
      out.add(ws, c);
    } else {
      out.add(ws, LaurentPolynomial::q_power(1) * c);
      out.add(w, q_minus_one() * c);
    }
  }
  return out;
}

HeckeElement hecke_mult_inverse(Gen s, const HeckeElement& h) {
  // g_s^-1 = q^-1 g_s + (q^-1 - 1) g_1.
  HeckeElement out = hecke_mult(s, h).scaled(LaurentPolynomial::q_power(-1));
  out += h.scaled(LaurentPolynomial::q_power(-1) - 1);
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (!(a.type() == b.type())) throw InputError("mixed-type Hecke product");
  HeckeElement out(a.type());
  for (const auto& [w, c] : a.support()) {
    HeckeElement term = b;
    const Word rw = reduced_word(w);
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
      term = hecke_mult(*it, term);
    out += term.scaled(c);
  }
  return out;
}

HeckeElement hecke_embed_word(const Word& reduced) {
  require_affine_a(reduced.type);
  const int src = reduced.type.n();
  const int n = src + 1;
  HeckeElement x = HeckeElement::one(affine_a(n));
  for (auto it = reduced.letters.rbegin(); it != reduced.letters.rend(); ++it) {
    if (*it == src) {
      x = hecke_mult_inverse(n - 1, x);
      x = hecke_mult(n, x);
      x = hecke_mult(n - 1, x);
    } else {
      x = hecke_mult(*it, x);
    }
  }
  return x;
}

int affine_length_a(const GroupElement& g) {
  require_affine_a(g.type());
  return canonicalize(reduced_word(g)).affine_length();
}

HeckeEmbedding hecke_embed(const HeckeElement& h, const Limits& limits) {
  require_affine_a(h.type());
  HeckeEmbedding out{HeckeElement(affine_a(h.type().n() + 1)), {}};
  for (const auto& [w, c] : h.support()) {
    const Word rw = reduced_word(w);
    if (static_cast<int>(rw.size()) > limits.max_length)
      throw ResourceLimitError("Hecke basis element too long");
    HeckeElement img = hecke_embed_word(rw);
    TriangularityReport rep;
    rep.source = w;
    rep.leading = element_of(embed_word(rw));
    rep.leading_coeff = img.coeff(rep.leading);
    const int lead_len = length_of(rep.leading);
    const int L = affine_length_a(w);
    rep.verified = rep.leading_coeff.is_q_power();
    for (const auto& [x, lam] : img.support()) {
      if (x == rep.leading) continue;
      rep.lower.emplace_back(x, lam);
      if (!(length_of(x) < lead_len && affine_length_a(x) <= L))
        rep.verified = false;
    }
    out.image += img.scaled(c);
    out.reports.push_back(std::move(rep));
  }
  return out;
}

}  // namespace coxcanon
