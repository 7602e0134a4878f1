#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "gaw/error.hpp"

// Locale-independent number rendering. File emitters must funnel all floats
// through these so output bytes never depend on the host locale.

namespace gaw::numfmt {

inline std::string fixed(double v, int precision) {
  if (v == 0.0) v = 0.0; // collapse -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  if (res.ec != std::errc())
    fail(ErrorCode::internal, "number formatting failed");
  return std::string(buf, res.ptr);
}

inline std::string scientific(double v, int precision) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, precision);
  if (res.ec != std::errc())
    fail(ErrorCode::internal, "number formatting failed");
  return std::string(buf, res.ptr);
}

} // namespace gaw::numfmt
