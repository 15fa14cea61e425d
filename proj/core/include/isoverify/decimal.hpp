#pragma once

#include <string>

#include "isoverify/real_spec.hpp"

namespace isoverify {

/// Truncated decimal rendering with `digits` significant digits.
/// Annotations only: every verdict in the library derives from exact
/// comparisons, never from these strings.
std::string decimal_string(const Rational& value, unsigned digits);
std::string decimal_string(const QuadraticSurd& value, unsigned digits);
std::string decimal_string(const RealSpec& value, unsigned digits,
                           const Budget& budget = default_budget());

}  // namespace isoverify
