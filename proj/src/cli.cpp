#include "hyperoct/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "hyperoct/centralizer.hpp"
#include "hyperoct/cover.hpp"
#include "hyperoct/cover_file.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/literal.hpp"
#include "hyperoct/pairing.hpp"
#include "hyperoct/random.hpp"
#include "hyperoct/words.hpp"

namespace hyperoct::cli {
namespace {

// Rows are buffered so plain output can align columns; tsv joins with tabs.
class Table {
 public:
  explicit Table(Format format) : format_(format) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        const bool last = c + 1 == r.size();
        if (format_ == Format::Tsv) {
          out << r[c] << (last ? "" : "\t");
        } else if (last) {
          out << r[c];
        } else {
          out << std::left << std::setw(static_cast<int>(width[c] + 2)) << r[c];
        }
      }
      out << '\n';
    }
  }

 private:
  Format format_;
  std::vector<std::vector<std::string>> rows_;
};

std::string str(Z2 z) { return std::to_string(z.value()); }
std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string points_text(const std::vector<std::size_t>& points) {
  std::string out;
  for (std::size_t i : points) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  }
  return out;
}

bool alpha_congruence_holds(const TorusIdentityReport& r) {
  for (const ComponentData& c : r.components)
    if (c.alpha != Z2(c.d)) return false;
  return true;
}

void print_components(const TorusIdentityReport& r, Format format, std::ostream& out) {
  Table t(format);
  t.row({"component", "e", "t", "d", "alpha", "points"});
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const ComponentData& c = r.components[i];
    t.row({std::to_string(i + 1), std::to_string(c.e), std::to_string(c.t), std::to_string(c.d),
           str(c.alpha), points_text(c.indices)});
  }
  t.print(out);
}

}  // namespace

int cmd_verify_torus(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SignedPerm m(1), l(1);
  try {
    m = parse_signed_perm(cfg.meridian, cfg.degree);
  } catch (const std::exception& e) {
    err << "error: --m: " << e.what() << '\n';
    return 1;
  }
  try {
    l = parse_signed_perm(cfg.longitude, cfg.degree);
  } catch (const std::exception& e) {
    err << "error: --l: " << e.what() << '\n';
    return 1;
  }

  std::optional<MeridianNormalization> norm;
  try {
    norm = normalize_meridian(m, l);
  } catch (const NotCommutingError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const TorusIdentityReport r = verify_torus_identity(norm->torus);
  const bool ok = r.holds() && alpha_congruence_holds(r);

  Table head(cfg.format);
  head.row({"degree", std::to_string(cfg.degree)});
  head.row({"meridian", to_literal(m)});
  head.row({"longitude", to_literal(l)});
  head.row({"conjugator", to_literal(norm->conjugator)});
  head.print(out);
  print_components(r, cfg.format, out);
  Table tail(cfg.format);
  tail.row({"lhs", str(r.lhs)});
  tail.row({"rhs", str(r.rhs)});
  tail.row({"verdict", verdict(ok)});
  tail.print(out);
  return ok ? 0 : 3;
}

int cmd_exhaust(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.degree < 1 || cfg.degree > kExhaustCap) {
    err << "error: exhaust supports 1 <= n <= " << kExhaustCap << ", got " << cfg.degree << '\n';
    return 1;
  }
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  for_each_permutation(cfg.degree, [&](const Permutation& sigma) {
    const SignedPerm m = SignedPerm::from_perm(sigma);
    for_each_centralizer_element(sigma, [&](const SignedPerm& l) {
      ++pairs;
      const TorusIdentityReport r = verify_torus_identity(TorusMonodromy(m, l));
      if (!r.holds() || !alpha_congruence_holds(r)) ++failures;
    });
  });

  Table t(cfg.format);
  t.row({"degree", std::to_string(cfg.degree)});
  t.row({"pairs", std::to_string(pairs)});
  t.row({"pass", std::to_string(pairs - failures)});
  t.row({"fail", std::to_string(failures)});
  t.row({"verdict", verdict(failures == 0)});
  t.print(out);
  return failures == 0 ? 0 : 3;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.count < 1) {
    err << "error: --count must be at least 1\n";
    return 1;
  }
  try {
    check_degree(cfg.degree);
  } catch (const DegreeError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const SplitMix64 root(cfg.seed);
  std::uint64_t failures = 0;
  Table cases(cfg.format);
  cases.row({"case", "meridian", "longitude", "lhs", "rhs", "closed", "direct", "verdict"});
  for (std::size_t i = 0; i < cfg.count; ++i) {
    SplitMix64 rng = root.split(i);
    const Permutation sigma = random_permutation(cfg.degree, rng);
    const SignedPerm m = SignedPerm::from_perm(sigma);
    const SignedPerm l = centralizer_sample(sigma, rng.next());

    const TorusIdentityReport r = verify_torus_identity(TorusMonodromy(m, l));
    const Z2 closed = phi_closed_form(sigma, l);
    const Z2 direct = phi(m, l);
    const bool ok = r.holds() && alpha_congruence_holds(r) && closed == direct;
    if (!ok) ++failures;
    if (!cfg.quiet)
      cases.row({std::to_string(i + 1), to_literal(m), to_literal(l), str(r.lhs), str(r.rhs),
                 str(closed), str(direct), verdict(ok)});
  }
  if (!cfg.quiet) cases.print(out);

  Table t(cfg.format);
  t.row({"degree", std::to_string(cfg.degree)});
  t.row({"seed", std::to_string(cfg.seed)});
  t.row({"cases", std::to_string(cfg.count)});
  t.row({"fail", std::to_string(failures)});
  t.row({"verdict", verdict(failures == 0)});
  t.print(out);
  return failures == 0 ? 0 : 3;
}

int cmd_check_cover(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream file(cfg.input_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << cfg.input_path << "'\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();

  CoverPresentation cp;
  try {
    cp = parse_cover(buffer.str());
  } catch (const ParseError& e) {
    err << cfg.input_path << ":" << e.line() << ":" << e.column() << ": error: " << e.message()
        << '\n';
    return 1;
  }

  const CoverReport report = check_cover(cp);
  Table t(cfg.format);
  for (const CheckResult& c : report.checks) {
    if (cfg.quiet && c.status == CheckStatus::Pass) continue;
    t.row({c.status == CheckStatus::Pass ? "PASS" : "FAIL", c.name, c.detail});
  }
  t.print(out);
  const int code = report.exit_code();
  Table summary(cfg.format);
  summary.row({"exit", std::to_string(code)});
  summary.print(out);
  return code;
}

int cmd_normal_form(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GenWord w;
  try {
    w = parse_word(cfg.word, cfg.degree);
  } catch (const std::exception& e) {
    err << "error: --word: " << e.what() << '\n';
    return 1;
  }
  const NormalForm nf = normal_form(w);
  Table t(cfg.format);
  t.row({"normal-form", to_string(nf)});
  t.row({"indices", points_text(nf.indices)});
  t.row({"delta", str(nf.delta)});
  t.print(out);
  return 0;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::VerifyTorus: return cmd_verify_torus(cfg, out, err);
    case Command::Exhaust: return cmd_exhaust(cfg, out, err);
    case Command::Sample: return cmd_sample(cfg, out, err);
    case Command::CheckCover: return cmd_check_cover(cfg, out, err);
    case Command::NormalForm: return cmd_normal_form(cfg, out, err);
  }
  return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperoctahedral group, its Z/2 central extension, and branch-divisor checks"};
  app.footer("Limits: degree n <= " + std::to_string(kMaxDegree) + "; exhaust n <= " +
             std::to_string(kExhaustCap) + ".\nExit codes: 0 pass, 1 parse or usage error, "
             "2 relator/commutation/hypothesis violation, 3 identity or global-sum failure.");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "plain";
  app.add_option("--format", format, "Output layout")->check(CLI::IsMember({"plain", "tsv"}));
  app.add_flag("--quiet", cfg.quiet, "Suppress per-case and passing lines");

  const auto degree_option = [&](CLI::App* sub, std::size_t cap) {
    sub->add_option("--n", cfg.degree, "Degree")->required()->check(CLI::Range(std::size_t{1}, cap));
  };

  auto* verify = app.add_subcommand("verify-torus", "Check the torus identity for one (m, l) pair");
  degree_option(verify, kMaxDegree);
  verify->add_option("--m", cfg.meridian, "Meridian literal, e.g. 'cycles:(1 2); signs:00'")->required();
  verify->add_option("--l", cfg.longitude, "Longitude literal")->required();

  auto* exhaust = app.add_subcommand("exhaust", "All m in S_n and l in C(m); n <= " +
                                                    std::to_string(kExhaustCap));
  exhaust->add_option("--n", cfg.degree, "Degree")->required();

  auto* sample = app.add_subcommand("sample", "Seeded random (m, l) pairs");
  degree_option(sample, kMaxDegree);
  sample->add_option("--count", cfg.count, "Number of cases")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", cfg.seed, "Seed")->required();

  auto* check = app.add_subcommand("check-cover", "Check a cover presentation file");
  check->add_option("path", cfg.input_path, "Cover file")->required();

  auto* nf = app.add_subcommand("normal-form", "Normal form of a word in x1..xn, eps");
  degree_option(nf, kMaxDegree);
  nf->add_option("--word", cfg.word, "Tokens such as \"x2 x1 eps\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  cfg.format = format == "tsv" ? Format::Tsv : Format::Plain;
  if (verify->parsed()) cfg.command = Command::VerifyTorus;
  else if (exhaust->parsed()) cfg.command = Command::Exhaust;
  else if (sample->parsed()) cfg.command = Command::Sample;
  else if (check->parsed()) cfg.command = Command::CheckCover;
  else cfg.command = Command::NormalForm;

  return run(cfg, out, err);
}

}  // namespace hyperoct::cli
