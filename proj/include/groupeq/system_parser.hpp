#pragma once

// Line-oriented system files over a loaded group:
//   vars X Y
//   eq  <word> [= <word>]          # "u = v" is sugar for u v^-1
//   neq <word> [= <word>]
//   constrain X in <recset-name>
// Word tokens: label, label^-1, X, X^-1, twist(tag, X), twist(tag, X^-1),
// twist(tag, X)^-1. '#' starts a comment.

#include "groupeq/system.hpp"
#include "groupeq/zoo.hpp"

#include <stdexcept>
#include <string>

namespace groupeq {

struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

System parse_system(const std::string& text, const GroupEnv& env);

/// Canonical text form; parse_system(print_system(s)) is structurally
/// equal to s for any parseable system (constants print as labels).
std::string print_system(const System& s, const GroupEnv& env);

bool system_equal(const System& a, const System& b);

}  // namespace groupeq
