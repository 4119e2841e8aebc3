#ifndef CURVELIM_JOBS_HPP
#define CURVELIM_JOBS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace curvelim {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitTheorem = 3,
  kExitNumeric = 4,
  kExitInternal = 5,
};

struct JobOptions {
  double tol = 1e-8;  // float verdict threshold (relative residuals)
  std::uint64_t seed = 1;
  std::size_t samples = 20;
};

struct JobResult {
  int exit_code = kExitOk;
  std::string report;  // canonical JSON text
};

/// "bezout", "curve vn", "vessel verify-theorems", ...
const std::vector<std::string>& job_commands();

/// Runs one job on JSON input text. Never throws: failures are encoded in the
/// report and the exit code.
JobResult run_job(const std::string& command, const std::string& input, const JobOptions& opts);

}  // namespace curvelim

#endif
