#pragma once

#include <string_view>

#include "isoverify/real_spec.hpp"

namespace isoverify {

/// Parses an alpha specification: "rat:355/113", "surd:(1+sqrt 5)/2",
/// "stream:e". Throws ParseError with caret position.
RealSpec parse_real_spec(std::string_view text, const Budget& budget = default_budget());

/// Parses a surd expression: integers, + - * /, parentheses and sqrt of a
/// nonnegative rational subexpression ("sqrt 2", "sqrt(221)", "5/sqrt(221)").
QuadraticSurd parse_surd_expression(std::string_view text,
                                    const Budget& budget = default_budget());

}  // namespace isoverify
