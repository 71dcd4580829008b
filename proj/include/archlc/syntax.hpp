#pragma once

// Text grammar for parameters and characters:
//
//   param   := ('C' | 'R') ':' [summand ('+' summand)*]
//   summand := 'chi(' int ',' gq ')' | 'lambda(' bit ',' gq ')' | 'phi(' int ',' gq ')'
//   gq      := rat | rat ('+' | '-') [rat] 'i'
//   rat     := int | int '/' posint
//
// Subscripts are written as in chi_{a,t}, so chi(-2, t) has N = 2.

#include "archlc/parameters.hpp"

#include <string_view>

namespace archlc {

/// Parses and normalizes. Throws ParseError (with position) on bad syntax
/// and FieldMismatch when a summand does not belong to the declared field.
Parameter parse_param(std::string_view text);

/// One summand without a field prefix, e.g. "lambda(1, 0)".
Constituent parse_constituent(std::string_view text);

/// A one-dimensional summand (chi or lambda); an optional "C:"/"R:" prefix is accepted.
Constituent parse_character(std::string_view text);

}  // namespace archlc
