#pragma once

#include <string>

#include "uncert/bounds.hpp"

namespace uncert {

/// Lossless JSON round-trip for BoundReport (doubles keep full precision).
std::string bound_report_to_json(const BoundReport& report);
BoundReport bound_report_from_json(const std::string& text);

/// Flat CSV: one header line, one data line; absent optionals are empty.
std::string bound_report_to_csv(const BoundReport& report);

}  // namespace uncert
