#include "moufang/errors.hpp"

#include <cstdio>

namespace moufang {

std::string DomainError::format_point(const std::vector<double>& p) {
  if (p.empty()) return {};
  std::string s = " at point (";
  char buf[32];
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", p[i]);
    if (i) s += ", ";
    s += buf;
  }
  return s + ")";
}

}  // namespace moufang
