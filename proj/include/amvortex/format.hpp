#ifndef AMVORTEX_FORMAT_HPP
#define AMVORTEX_FORMAT_HPP

#include <cstdio>
#include <string>

namespace amvortex {

/// %.17g: enough digits to round-trip any double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace amvortex

#endif  // AMVORTEX_FORMAT_HPP
