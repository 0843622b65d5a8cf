#pragma once

#include <nlohmann/json.hpp>

#include "flagcurv/document.hpp"

namespace flagcurv {

inline constexpr const char* kToolName = "flagcurv";
inline constexpr const char* kToolVersion = "0.1.0";

struct CommandOptions {
  bool json = false;
  bool kill_fiber = false;
  std::optional<std::string> volume_expression;
};

struct CommandResult {
  nlohmann::ordered_json report;
  std::string human;
  int exit_code = 0;  // 0 success, 1 verification failure, 2 input error
};

// check | reduce | curvature | invariant | gauge | cr over one document.
CommandResult run_command(const std::string& command, const std::string& input_text,
                          const CommandOptions& options);

std::string sha256_hex(const std::string& data);

}  // namespace flagcurv
