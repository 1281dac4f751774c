#ifndef COXCANON_TOWER_HECKE_HPP_
#define COXCANON_TOWER_HECKE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxcanon/affine_a.hpp"

namespace coxcanon {

// Tower R_n : W(A~_{n-1}) -> W(A~_n), sigma_i -> sigma_i, a_n -> sigma_n a_{n+1} sigma_n.
// Functions take the source form or word; the target rank is source n + 1.

Word embed_word(const Word& w);
CanonicalFormA embed_canonical(const CanonicalFormA& f);
/// Preimage under R_n of a form over A~_n, when it exists.
std::optional<CanonicalFormA> in_image(const CanonicalFormA& f);

/// Element of Z[q, q^-1].
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t c);  // NOLINT: constants convert implicitly
  static LaurentPolynomial q_power(int k, std::int64_t c = 1);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is exactly q^k; sets k.
  bool is_q_power(int* k = nullptr) const;
  std::int64_t coeff(int k) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

  std::string str() const;

 private:
  void add_term(int k, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

class HeckeElement {
 public:
  explicit HeckeElement(CoxeterType t) : type_(t) {}
  static HeckeElement basis(const GroupElement& w);
  static HeckeElement one(const CoxeterType& t);

  const CoxeterType& type() const { return type_; }
  const ElementMap<LaurentPolynomial>& support() const { return support_; }
  LaurentPolynomial coeff(const GroupElement& w) const;
  bool is_zero() const { return support_.empty(); }

  void add(const GroupElement& w, const LaurentPolynomial& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement scaled(const LaurentPolynomial& c) const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  /// Terms sorted by (length, reduced word), formatted one per line.
  std::string str() const;

 private:
  CoxeterType type_;
  ElementMap<LaurentPolynomial> support_;
};

HeckeElement hecke_mult(Gen s, const HeckeElement& h);        // g_s h
HeckeElement hecke_mult_right(const HeckeElement& h, Gen s);  // h g_s
HeckeElement hecke_mult_inverse(Gen s, const HeckeElement& h);  // g_s^-1 h
HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

struct TriangularityReport {
  GroupElement source;
  GroupElement leading;  // R_n(w)
  LaurentPolynomial leading_coeff;
  std::vector<std::pair<GroupElement, LaurentPolynomial>> lower;
  bool verified = false;
};

/// Image of e_w under HR_n, expanded along the given reduced word of w.
HeckeElement hecke_embed_word(const Word& reduced);

struct HeckeEmbedding {
  HeckeElement image;
  std::vector<TriangularityReport> reports;  // one per basis element
};

HeckeEmbedding hecke_embed(const HeckeElement& h, const Limits& limits = {});

/// Affine length of an element of W(A~_n), read from its canonical form.
int affine_length_a(const GroupElement& g);

}  // namespace coxcanon

#endif  // COXCANON_TOWER_HECKE_HPP_
