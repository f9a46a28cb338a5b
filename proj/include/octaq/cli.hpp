// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace octaq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidCoefficients = 2,
  kDisagree = 3,
  kInconclusive = 4,
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octaq::cli
