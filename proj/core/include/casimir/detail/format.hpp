#pragma once

#include <cstdio>
#include <string>

namespace casimir::detail {

/// Fixed "%.12g" rendering used by every CSV writer.
inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace casimir::detail
