#include "hyperoct/cover_file.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "hyperoct/error.hpp"
#include "hyperoct/literal.hpp"

namespace hyperoct {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// A line with 0-based offsets into it, so errors can report columns.
class LineReader {
 public:
  LineReader(std::size_t number, std::string_view text) : number_(number), text_(text) {}

  std::size_t number() const { return number_; }
  std::size_t offset() const { return pos_; }

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw ParseError(number_, offset + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view rest() {
    skip_space();
    std::string_view r = text_.substr(pos_);
    pos_ = text_.size();
    return r;
  }

 private:
  std::size_t number_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

class CoverParser {
 public:
  CoverPresentation parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      parse_line(LineReader(++line_no, line));
      start = end + 1;
    }
    if (!degree_) throw ParseError(line_no, 1, "missing 'n <degree>' declaration");
    return std::move(cp_);
  }

 private:
  void parse_line(LineReader in) {
    if (in.at_end()) return;
    const std::size_t kw_at = in.offset();
    const std::string_view keyword = in.word();
    if (keyword == "n") {
      parse_degree(in, kw_at);
      return;
    }
    if (keyword != "gen" && keyword != "rel" && keyword != "torus")
      in.fail(kw_at, "unknown directive '" + std::string(keyword) + "'");
    if (!degree_) in.fail(kw_at, "'" + std::string(keyword) + "' before 'n <degree>'");

    if (keyword == "gen")
      parse_generator(in);
    else if (keyword == "rel")
      parse_relator(in);
    else
      parse_torus(in);
  }

  void parse_degree(LineReader& in, std::size_t kw_at) {
    if (degree_) in.fail(kw_at, "duplicate 'n' declaration");
    const std::size_t at = in.offset();
    const std::string_view value = in.word();
    if (value.empty() || value.size() > 3 || value.find_first_not_of("0123456789") != std::string_view::npos)
      in.fail(at, "expected a degree after 'n'");
    const std::size_t n = std::stoul(std::string(value));
    if (n < 1 || n > kMaxDegree)
      in.fail(at, "degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree));
    if (!in.at_end()) in.fail(in.offset(), "unexpected text after degree");
    degree_ = n;
    cp_.degree = n;
  }

  void parse_generator(LineReader& in) {
    in.skip_space();
    const std::size_t name_at = in.offset();
    const std::string_view name = in.word();
    if (!is_identifier(name)) in.fail(name_at, "expected a generator name");
    if (find_generator(name)) in.fail(name_at, "duplicate generator '" + std::string(name) + "'");
    const std::size_t eq_at = in.offset();
    if (in.word() != "=") in.fail(eq_at, "expected '=' after generator name");
    in.skip_space();
    const std::size_t literal_at = in.offset();
    const std::string_view literal = in.rest();
    try {
      cp_.generators.push_back({std::string(name), parse_signed_perm(literal, *degree_)});
    } catch (const ParseError& e) {
      in.fail(literal_at + e.column() - 1, e.message());
    }
  }

  void parse_relator(LineReader& in) {
    in.skip_space();
    const std::size_t at = in.offset();
    cp_.relators.push_back(parse_word(in, at, in.rest()));
  }

  void parse_torus(LineReader& in) {
    in.skip_space();
    const std::size_t at = in.offset();
    const std::string_view body = in.rest();
    const auto bar = body.find('|');
    if (bar == std::string_view::npos) in.fail(at, "expected '<meridian> | <longitude>'");
    if (body.find('|', bar + 1) != std::string_view::npos)
      in.fail(at + body.find('|', bar + 1), "more than one '|'");
    TorusSpec torus;
    torus.line = in.number();
    torus.meridian = parse_word(in, at, body.substr(0, bar));
    torus.longitude = parse_word(in, at + bar + 1, body.substr(bar + 1));
    cp_.tori.push_back(std::move(torus));
  }

  // `at` is the offset of `text` within the line.
  Word parse_word(const LineReader& in, std::size_t at, std::string_view text) {
    Word w;
    w.line = in.number();
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (is_space(text[pos])) {
        ++pos;
        continue;
      }
      const std::size_t start = pos;
      while (pos < text.size() && !is_space(text[pos])) ++pos;
      std::string_view name = text.substr(start, pos - start);
      Letter letter;
      if (name.ends_with('\'')) {
        letter.inverse = true;
        name.remove_suffix(1);
      }
      const auto index = find_generator(name);
      if (!index) in.fail(at + start, "unknown generator '" + std::string(name) + "'");
      letter.generator = *index;
      w.letters.push_back(letter);
      if (!w.text.empty()) w.text += ' ';
      w.text += text.substr(start, pos - start);
    }
    if (w.letters.empty()) in.fail(at, "empty word");
    return w;
  }

  std::optional<std::size_t> find_generator(std::string_view name) const {
    for (std::size_t i = 0; i < cp_.generators.size(); ++i)
      if (cp_.generators[i].name == name) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> degree_;
  CoverPresentation cp_;
};

std::string torus_name(std::size_t i) { return "torus " + std::to_string(i + 1); }

}  // namespace

CoverPresentation parse_cover(std::string_view text) { return CoverParser().parse(text); }

SignedPerm evaluate(const CoverPresentation& cp, const Word& w) {
  SignedPerm acc(cp.degree);
  for (const Letter& letter : w.letters) {
    const SignedPerm& g = cp.generators.at(letter.generator).image;
    acc = acc * (letter.inverse ? inverse(g) : g);
  }
  return acc;
}

int CoverReport::exit_code() const {
  bool identity_failure = false;
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::Violation) return 2;
    if (c.status == CheckStatus::IdentityFailure) identity_failure = true;
  }
  return identity_failure ? 3 : 0;
}

CoverReport check_cover(const CoverPresentation& cp) {
  CoverReport report;
  auto& checks = report.checks;

  for (std::size_t i = 0; i < cp.relators.size(); ++i) {
    const Word& rel = cp.relators[i];
    const SignedPerm image = evaluate(cp, rel);
    CheckResult r{"relator " + std::to_string(i + 1), CheckStatus::Pass, rel.text};
    if (!image.is_identity()) {
      r.status = CheckStatus::Violation;
      r.detail += " (line " + std::to_string(rel.line) + ") maps to " + to_literal(image);
    }
    checks.push_back(std::move(r));
  }

  std::vector<TorusMonodromy> valid;
  for (std::size_t i = 0; i < cp.tori.size(); ++i) {
    const TorusSpec& spec = cp.tori[i];
    const SignedPerm m = evaluate(cp, spec.meridian);
    const SignedPerm l = evaluate(cp, spec.longitude);
    const std::string name = torus_name(i);

    if (!is_commuting(m, l)) {
      checks.push_back({name + " commute", CheckStatus::Violation,
                        "m = " + to_literal(m) + " and l = " + to_literal(l) + " do not commute"});
      continue;
    }
    checks.push_back({name + " commute", CheckStatus::Pass, spec.meridian.text + " | " + spec.longitude.text});

    std::optional<MeridianNormalization> norm;
    try {
      norm = normalize_meridian(m, l);
    } catch (const HypothesisViolation& e) {
      checks.push_back({name + " meridian", CheckStatus::Violation, e.what()});
      continue;
    }
    checks.push_back({name + " meridian", CheckStatus::Pass,
                      norm->conjugator.is_identity()
                          ? "in S_n"
                          : "conjugated into S_n by " + to_literal(norm->conjugator)});

    const TorusIdentityReport identity = verify_torus_identity(norm->torus);
    checks.push_back({name + " identity",
                      identity.holds() ? CheckStatus::Pass : CheckStatus::IdentityFailure,
                      "lhs " + std::to_string(identity.lhs.value()) + " rhs " +
                          std::to_string(identity.rhs.value()) + " components " +
                          std::to_string(identity.components.size())});
    valid.push_back(norm->torus);
  }

  report.global = branch_divisor_pairing(valid);
  const auto global_check = [](std::string name, Z2 value) {
    return CheckResult{std::move(name), value ? CheckStatus::IdentityFailure : CheckStatus::Pass,
                       "value " + std::to_string(value.value())};
  };
  checks.push_back(global_check("global integral-sum", report.global.integral_sum));
  checks.push_back(global_check("global branch-divisor", report.global.divisor_pairing));
  return report;
}

}  // namespace hyperoct
