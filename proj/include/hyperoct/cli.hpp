#ifndef HYPEROCT_CLI_HPP
#define HYPEROCT_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace hyperoct::cli {

/// Largest degree `exhaust` accepts.
inline constexpr std::size_t kExhaustCap = 4;

enum class Command { VerifyTorus, Exhaust, Sample, CheckCover, NormalForm };
enum class Format { Plain, Tsv };

struct RunConfig {
  Command command = Command::VerifyTorus;
  std::size_t degree = 1;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string input_path;
  std::string meridian;   // verify-torus
  std::string longitude;  // verify-torus
  std::string word;       // normal-form
  Format format = Format::Plain;
  bool quiet = false;
};

// Exit codes: 0 all checks pass, 1 parse/usage error, 2 relator, commutation
// or hypothesis violation, 3 identity or global-sum failure.
int cmd_verify_torus(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_exhaust(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_cover(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_normal_form(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Help goes to `out` and returns 0.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperoct::cli

#endif  // HYPEROCT_CLI_HPP
