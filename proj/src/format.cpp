#include "horizon/format.hpp"

#include <charconv>
#include <cmath>

namespace horizon {

std::string format_real(double value, int sig_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::general, sig_digits);
  (void)ec;
  return std::string(buffer, ptr);
}

}  // namespace horizon
