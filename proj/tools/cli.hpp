#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asai::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kUnsupportedShape = 3, kIdentityFailure = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string command;  // lfactor | gamma | verify-theorem1 | zeta-tame | whittaker | oracle
  std::string shape = "cubic_tame";
  // Empty means symbolic. Exact commands: rationals or variable names, two per factor.
  // oracle: two complex numbers such as 0.5-0.866i.
  std::vector<std::string> satake;
  std::optional<std::string> basis_disc;  // "v:unit" or a rational
  std::optional<std::string> psi_twist;
  std::optional<double> q;                // residue field size; exact commands need an odd prime
  std::optional<std::string> s;           // complex, e.g. "2" or "1.5+0.25i"
  std::optional<long> N;
  std::optional<long> D;
  std::optional<std::string> out;
};

struct JobResult {
  int exit_code = kOk;
  std::string json;  // one JSON document, newline terminated
};

// Deterministic: identical specs give byte-identical output. Never throws.
JobResult run(const JobSpec& spec);

// Key-sorted JSON of every field that affects the output (excludes `out`).
std::string canonical_job(const JobSpec& spec);
std::uint64_t job_hash(const JobSpec& spec);

// Throws UsageError.
JobSpec job_from_json(const std::string& text);

// Flags or --job <file>; honours ASAI_CACHE_DIR.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace asai::cli
