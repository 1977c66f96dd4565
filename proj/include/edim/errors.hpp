#pragma once

#include <stdexcept>
#include <string>

namespace edim {

enum class errc {
  disconnected,
  loop_edge,
  duplicate_edge,
  index_out_of_range,
  parse_error,
  unknown_name,
  bad_params,
  size_cap_exceeded,
  infeasible,
  requires_multiple_roots,
  rooted_path_excluded,
  h_too_small,
  too_few_components,
  io_error,
};

// Domain error carrying a machine-checkable code next to the message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace edim
