#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qdeform/symexpr/ratfunc.hpp"

namespace qdeform {

/// Integer constants visible to the parser (e.g. {"N", 2} for hom templates).
using IntConstants = std::map<std::string, long>;

/// Parses the expression grammar
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' exponent)?
///   atom   := integer | symbol | '(' expr ')'
///   exponent := ['-'] integer | constant | '(' integer-expr ')'
///
/// over `declared` when given (unknown symbols are a ParseError), otherwise
/// over the symbols that occur.
RatFunc parse_ratfunc(std::string_view text, const ParamSetPtr& declared = nullptr,
                      const IntConstants& constants = {});

}  // namespace qdeform
