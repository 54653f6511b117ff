#pragma once

#include <string>

namespace jrc {

/// Scientific notation with 9 significant digits ("1.23456789e-09").
/// Non-finite values print as "inf", "-inf" or "nan". Output depends only on
/// the value, never on locale or platform.
std::string format_sci9(double value);

/// Shortest text that parses back to the same double.
std::string format_exact(double value);

}  // namespace jrc
