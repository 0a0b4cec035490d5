#pragma once

#include <string>

namespace polyflow {

/// Locale-independent shortest form with 17 significant digits.
std::string format_double(double value);

}  // namespace polyflow
