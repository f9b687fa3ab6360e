#pragma once

#include <string>

namespace horizon {

/// Locale-independent decimal rendering with `sig_digits` significant digits;
/// "." decimal separator always, infinities as "inf"/"-inf", NaN as "nan".
std::string format_real(double value, int sig_digits);

}  // namespace horizon
