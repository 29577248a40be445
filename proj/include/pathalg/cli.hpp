#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pathalg::cli {

struct Outcome {
  int exit_code = 0;  // 0 success, 1 parse or usage error, 2 mathematical error
  std::string out;
  std::string err;
};

/// args excludes the program name. A problem argument of "-" reads stdin_text.
Outcome run(const std::vector<std::string>& args, std::string_view stdin_text = {});

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace pathalg::cli
