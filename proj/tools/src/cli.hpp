#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecdlp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kValidation = 3,
  kExhausted = 4,
  kInvariant = 5,
};

// args excludes the program name: {"solve", "--q", "17", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecdlp::cli
