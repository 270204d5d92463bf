// Reads polynomials written as in print, e.g. "2 x1^2 x2 + x3", with
// letters x, y, z, w for alphabets 1..4.
#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hdpart/poly.hpp"

namespace polytext {

inline hdpart::MultiPoly parse(const std::string& text, const std::vector<int>& alphabets) {
  static const std::string letters = "xyzw";
  hdpart::MultiPoly out(alphabets);
  std::stringstream terms(text);
  std::string term;
  while (std::getline(terms, term, '+')) {
    std::istringstream tokens(term);
    std::string tok;
    mpz_class coeff = 1;
    std::vector<int> key(out.key_length(), 0);
    bool any = false;
    while (tokens >> tok) {
      any = true;
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        coeff *= mpz_class(tok);
        continue;
      }
      const auto a = letters.find(tok[0]);
      if (a == std::string::npos) throw std::runtime_error("bad variable " + tok);
      const auto caret = tok.find('^');
      const int index = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      const int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      key[out.offset(static_cast<int>(a)) + index - 1] += exp;
    }
    if (any) out.add_term(key, coeff);
  }
  return out;
}

/// sum over groups of (inner sum) * monomial.
inline hdpart::MultiPoly parse_groups(const std::vector<std::pair<std::string, std::string>>& groups,
                                      const std::vector<int>& alphabets) {
  hdpart::MultiPoly out(alphabets);
  for (const auto& [inner, factor] : groups) out = out + parse(inner, alphabets) * parse(factor, alphabets);
  return out;
}

inline const std::vector<int> kExampleAlphabets{3, 2, 2};

inline hdpart::MultiPoly example_a() {
  return parse_groups(
      {{"x1^2 x2 + x1^2 x3 + x1 x2^2 + x1 x3^2 + x2^2 x3 + x2 x3^2 + 2 x1 x2 x3", "y1^3 z1^2 z2"},
       {"x1^2 + x2^2 + x3^2 + x1 x2 + x1 x3 + x2 x3", "y1^2 z1 z2"}},
      kExampleAlphabets);
}

inline hdpart::MultiPoly example_b() {
  return parse_groups({{"x1^2 x2 + x1^2 x3 + x2^2 x3", "y1^2 y2 z1^2 z2"},
                       {"2 x1 x2 x3", "y1^2 y2 z1^2 z2"},
                       {"x1^2 + x2^2 + x3^2 + 2 x1 x2 + 2 x1 x3 + 2 x2 x3", "y1 y2 z1 z2"}},
                      kExampleAlphabets);
}

inline hdpart::MultiPoly example_c() {
  return parse_groups(
      {{"3 x1^2 x2 x3 + 3 x1 x2^2 x3 + 2 x1 x2 x3^2 + x1^2 x2^2 + x1^2 x3^2 + x2^2 x3^2 + x1^3 x2 + x1^3 x3 + "
        "x2^3 x3",
        "y1^3 y2 z1^3 z2"},
       {"4 x1 x2 x3 + 2 x1^2 x2 + 2 x1^2 x3 + 2 x2^2 x3 + 3 x1 x2^2 + 3 x1 x3^2 + 3 x2 x3^2 + x1^3 + x2^3 + x3^3",
        "y1^2 y2 z1^2 z2"}},
      kExampleAlphabets);
}

}  // namespace polytext
