#pragma once

#include <functional>
#include <string>
#include <vector>

namespace edim {

enum class check_status { pass, fail, skip };

const char* to_string(check_status status);

struct CheckResult {
  std::string name;
  check_status status = check_status::pass;
  std::string detail;
};

struct VerifyOptions {
  // Directory with optional user-supplied edge lists for the checks that
  // need externally encoded graphs.  Empty means none given.
  std::string data_dir;
};

// Runs the whole built-in check suite in a fixed order.  Every check gets a
// result; on_result fires after each one so callers can stream progress.
std::vector<CheckResult> run_verification(
    const VerifyOptions& options,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace edim
