#pragma once

#include <string>
#include <vector>

namespace pcf {

/// 0 ok, 1 usage or malformed input, 2 divergence or a resource bound,
/// 3 a failed check.
enum ExitCode { kOk = 0, kUsage = 1, kBounds = 2, kCheckFailed = 3 };

struct CliResult {
  int code = kOk;
  std::string out;
  std::string err;
};

/// `args` excludes the program name. Output is a function of args and the
/// PCF_SEED environment variable only.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace pcf
