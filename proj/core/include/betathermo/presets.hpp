#pragma once

#include <string>
#include <vector>

#include "betathermo/digits.hpp"

namespace betathermo {

// Bundled example digit sequences used throughout the tools and tests.
//
//   golden        expansion of (1+sqrt 5)/2, periodic with period 2
//   three-halves  expansion of 3/2, aperiodic, stored to the given depth
//   tribonacci    expansion of the real root of x^3 = x^2 + x + 1,
//                 periodic with period 3
//   witness       scheduled sequence 1 0^2 1 0^4 1 0^8 ... whose zero runs
//                 grow geometrically (beta approximately 1.41638)
struct Preset {
  std::string name;
  std::string beta_text;  // parseable expression where exact, otherwise a description
  DigitSeq digits;
};

// depth controls the stored digits for aperiodic presets (the witness
// preset always stores at least 300 digits so its early runs resolve).
Preset make_preset(const std::string& name, int depth = 64);

std::vector<std::string> preset_names();

}  // namespace betathermo
