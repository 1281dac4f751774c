#ifndef COXCANON_WORD_IO_HPP_
#define COXCANON_WORD_IO_HPP_

#include <string>
#include <string_view>

#include "coxcanon/coxeter.hpp"

namespace coxcanon {

// Tokens: s<k>, a, t, b1, bn, and "1" for the identity. Separators are ASCII
// whitespace and '*'.

Word parse_word(std::string_view text, const CoxeterType& type);
/// Space-separated labels; the empty word prints as "1".
std::string format_word(const Word& w);

/// "At", "Bt", "Dt", "A" or "D".
Family parse_family(std::string_view name);
std::string family_flag(Family f);

}  // namespace coxcanon

#endif  // COXCANON_WORD_IO_HPP_
