#include "corrtree/common.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace corrtree {

std::string format_fixed6(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot format non-finite value");
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  if (ec != std::errc{}) throw std::runtime_error("format_fixed6: buffer too small");
  std::string s(buf, ptr);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

}  // namespace corrtree
