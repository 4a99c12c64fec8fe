// format.hpp — number formatting for CSV files and text reports

#pragma once

#include <string>

namespace jcq::format {

/// CSV cell: decimal, 12 significant digits.
std::string csv(double value);

/// Shortest text that parses back to exactly `value`.
std::string exact(double value);

/// `digits` significant digits, fixed or scientific as %g chooses.
std::string significant(double value, int digits);

} // namespace jcq::format
