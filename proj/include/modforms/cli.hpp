#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mf::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidArgs = 2,
  kVerificationFailed = 3,
  kInterrupted = 4,
};

struct RunConfig {
  long mantissa_bits = 256;
  int threads = 1;
  std::string format = "json";  // json | table
  std::string checkpoint;
  bool full_scale = false;
  unsigned long seed = 0;       // reserved; no computation is randomized
  std::string emit_csv;
};

/// Runs one subcommand. `args` excludes the program name. JSON (or its
/// table rendering) goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace mf::cli
