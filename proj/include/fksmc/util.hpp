#pragma once

#include <charconv>
#include <string>

namespace fksmc {

// Shortest round-trip decimal form; keeps emitted files byte-stable.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace fksmc
