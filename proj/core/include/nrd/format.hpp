#pragma once

#include <string>

namespace nrd {

/// Locale-independent decimal rendering with 17 significant digits
/// (round-trip safe for doubles). Used for every numeric field written to
/// CSV or JSON artifacts.
std::string format_double(double value);

}  // namespace nrd
