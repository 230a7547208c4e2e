#pragma once

#include <string_view>

#include "rnnids/signatures/regex_ast.hpp"

namespace rnnids::signatures {

// Largest count accepted in {m,n}.
inline constexpr int kMaxRepeat = 1000;

// Supported syntax: literals; escapes \. \/ \\ \xHH \n \r \t \f \v \0 and
// \d \D \w \W \s \S; classes with ranges and negation (a leading ']' is a
// member); '.', '|', '*', '+', '?', {m}, {m,}, {m,n}; grouping; ^ and $.
// Throws RegexSyntaxError carrying the offending offset.
RegexAst parse_regex(std::string_view pattern);

}  // namespace rnnids::signatures
