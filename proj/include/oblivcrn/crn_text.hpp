#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "oblivcrn/crn.hpp"

namespace obliv {

// Line-oriented text format for single-output networks:
//
//   # comment (anywhere; rest of line ignored)
//   inputs: X1 X2          (omitted when the network has no inputs)
//   output: Y
//   leader: L              (optional)
//   X1 + X2 -> Y
//   2 X -> X + Y
//   K + Y -> 0             (an empty side is written "0")
//
// Coefficients default to 1.  parse_crn(print_crn(c)) == c for every
// single-output Crn (construction canonicalizes species and reaction order).

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string print_crn(const Crn& crn);
std::string print_reaction(const Crn& crn, const Reaction& r);
Crn parse_crn(std::string_view text);

}  // namespace obliv
