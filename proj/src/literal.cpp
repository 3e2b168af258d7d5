#include "hyperoct/literal.hpp"

#include <cctype>
#include <vector>

#include "hyperoct/error.hpp"

namespace hyperoct {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(0, column(), message); }

  void expect(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word)
      fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a point number");
    return value;
  }

  std::string_view bits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void advance() { ++pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SignedPerm parse_signed_perm(std::string_view text, std::size_t n) {
  check_degree(n);
  Cursor in(text);
  in.expect("cycles");
  in.expect(":");

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(n, false);
  if (in.peek() != '(') in.fail("expected '('");
  while (in.peek() == '(') {
    in.advance();
    std::vector<std::size_t> cycle;
    while (in.peek() != ')') {
      if (in.peek() == '\0') in.fail("unterminated cycle");
      const std::size_t col = in.column();
      const std::size_t point = in.number();
      if (point < 1 || point > n)
        throw ParseError(0, col, "point " + std::to_string(point) + " outside 1.." + std::to_string(n));
      if (seen[point - 1])
        throw ParseError(0, col, "point " + std::to_string(point) + " appears twice");
      seen[point - 1] = true;
      cycle.push_back(point - 1);
    }
    in.advance();
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }

  in.expect(";");
  in.expect("signs");
  in.expect(":");
  const std::size_t col = in.column();
  const std::string_view bits = in.bits();
  if (bits.size() != n)
    throw ParseError(0, col, "signs has length " + std::to_string(bits.size()) +
                                 ", expected " + std::to_string(n));
  if (!in.done()) in.fail("unexpected trailing text");

  SignVector signs;
  for (std::size_t i = 0; i < n; ++i)
    if (bits[i] == '1') signs.flip(i);
  return {signs, Permutation::from_cycles(n, cycles)};
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(p).cycles) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string to_bit_string(SignVector v, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (v.test(i)) out[i] = '1';
  return out;
}

std::string to_literal(const SignedPerm& g) {
  return "cycles:" + to_cycle_string(g.perm()) + "; signs:" + to_bit_string(g.signs(), g.degree());
}

}  // namespace hyperoct
