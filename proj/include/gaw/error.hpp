#pragma once

#include <stdexcept>
#include <string>

namespace gaw {

// Coarse error categories; the message carries the specific detail
// (offending value, row/column location, file name).
enum class ErrorCode {
  invalid_argument = 1,  // precondition violated by a caller-supplied value
  validation = 2,        // data fails a domain invariant
  parse = 3,             // malformed input file or stream
  io = 4,                // file cannot be opened / written
  unknown_rule = 5,      // rule id not registered with the runner
  version_mismatch = 6,  // manifest written by a different engine version
  checksum_mismatch = 7, // replayed output differs from recorded checksum
  internal = 8,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

} // namespace gaw
