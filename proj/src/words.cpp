#include "hyperoct/words.hpp"

#include <bit>
#include <cctype>
#include <string>

#include "hyperoct/error.hpp"

namespace hyperoct {

NormalForm normal_form(const GenWord& w) {
  std::uint64_t odd = 0;  // indices seen an odd number of times so far
  unsigned parity = 0;
  for (const Token& tok : w.tokens) {
    if (tok.kind == Token::Kind::Epsilon) {
      ++parity;
      continue;
    }
    if (tok.index >= w.degree)
      throw DegreeError("generator x" + std::to_string(tok.index + 1) + " outside degree " +
                        std::to_string(w.degree));
    const std::uint64_t above = tok.index >= 63 ? 0 : ~0ULL << (tok.index + 1);
    parity += static_cast<unsigned>(std::popcount(odd & above));
    odd ^= 1ULL << tok.index;
  }
  NormalForm nf;
  for (std::uint64_t bits = odd; bits != 0; bits &= bits - 1)
    nf.indices.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
  nf.delta = Z2(parity);
  return nf;
}

ExtElement evaluate(const GenWord& w) {
  ExtElement acc(w.degree);
  for (const Token& tok : w.tokens)
    acc = hn_mul(acc, tok.kind == Token::Kind::Epsilon ? ExtElement::epsilon(w.degree)
                                                       : ExtElement::generator(w.degree, tok.index));
  return acc;
}

ExtElement evaluate(const NormalForm& nf, std::size_t n) {
  ExtElement acc(n);
  for (std::size_t i : nf.indices) acc = hn_mul(acc, ExtElement::generator(n, i));
  if (nf.delta) acc = hn_mul(acc, ExtElement::epsilon(n));
  return acc;
}

GenWord parse_word(std::string_view text, std::size_t n) {
  check_degree(n);
  GenWord w{n, {}};
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view tok = text.substr(start, pos - start);
    if (tok.ends_with('\'')) tok.remove_suffix(1);

    if (tok == "eps") {
      w.tokens.push_back(Token::eps());
      continue;
    }
    const bool digits = tok.size() > 1 && tok.size() < 8 && tok[0] == 'x' &&
                        tok.substr(1).find_first_not_of("0123456789") == std::string_view::npos;
    if (!digits)
      throw ParseError(0, start + 1, "unknown token '" + std::string(tok) + "'");
    const std::size_t index = std::stoul(std::string(tok.substr(1)));
    if (index < 1 || index > n)
      throw ParseError(0, start + 1,
                       "generator x" + std::to_string(index) + " outside 1.." + std::to_string(n));
    w.tokens.push_back(Token::x(index - 1));
  }
  return w;
}

std::string to_string(const NormalForm& nf) {
  std::string out;
  for (std::size_t i : nf.indices) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(i + 1);
  }
  if (nf.delta) out += out.empty() ? "eps" : " eps";
  return out.empty() ? "1" : out;
}

}  // namespace hyperoct
