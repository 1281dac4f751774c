#include "coxcanon/word_io.hpp"

#include <charconv>

namespace coxcanon {

namespace {

bool is_sep(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f' || c == '*';
}

Gen parse_token(std::string_view tok, const CoxeterType& t) {
  auto fail = [&](const std::string& why) -> Gen {
    throw InputError("token '" + std::string(tok) + "': " + why);
  };
  if (tok == "a") {
    if (t.family() != Family::AffineA) return fail("no a in type " + t.name());
    return t.affine_gen();
  }
  if (tok == "t") {
    if (t.family() != Family::AffineB) return fail("no t in type " + t.name());
    return t.affine_gen();
  }
  if (tok == "bn") {
    if (t.family() != Family::AffineD) return fail("no bn in type " + t.name());
    return t.affine_gen();
  }
  if (tok == "b1") {
    if (t.family() == Family::FiniteA || t.family() == Family::AffineA)
      return fail("no b1 in type " + t.name());
    return t.bar1();
  }
  if (tok.size() >= 2 && tok[0] == 's') {
    int k = 0;
    auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), k);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok[1] == '0')
      return fail("bad generator index");
    if (k < 1 || k > t.n())
      return fail("index out of range for type " + t.name());
    return t.sigma(k);
  }
  return fail("unknown generator");
}

}  // namespace

Word parse_word(std::string_view text, const CoxeterType& type) {
  Word w(type);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) {
      const std::string_view tok = text.substr(i, j - i);
      if (tok != "1") w.letters.push_back(parse_token(tok, type));
    }
    i = j;
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (Gen g : w.letters) {
    if (!out.empty()) out += ' ';
    out += w.type.label(g);
  }
  return out;
}

Family parse_family(std::string_view name) {
  if (name == "At") return Family::AffineA;
  if (name == "Bt") return Family::AffineB;
  if (name == "Dt") return Family::AffineD;
  if (name == "A") return Family::FiniteA;
  if (name == "D") return Family::FiniteD;
  throw InputError("unknown type '" + std::string(name) +
                   "' (expected At, Bt, Dt, A or D)");
}

std::string family_flag(Family f) {
  switch (f) {
    case Family::AffineA: return "At";
    case Family::AffineB: return "Bt";
    case Family::AffineD: return "Dt";
    case Family::FiniteA: return "A";
    case Family::FiniteD: return "D";
  }
  return "?";
}

}  // namespace coxcanon
