#pragma once

// The three builtin morphisms and the 48-letter synchronization constant.
// All of them are embedded verbatim as data; construction re-checks the
// expected lengths so a transcription slip fails loudly at first use.

#include "halfflip/word.hpp"

namespace halfflip {

// 95-uniform morphism over {0..4}; every image begins with the constant c.
const UniformMorphism& builtin_m();

// 7-uniform morphisms from {0..4} onto 3 and 2 letters.
const UniformMorphism& builtin_f3();
const UniformMorphism& builtin_f2();

// c: the common 48-letter image prefix, also the prefix of the fixed point.
const Word& sync_marker_c();

// m iterated from seed 0.
const FixedPointSpec& base_fixed_point();

// Lookup by name ("m", "f3", "f2"); nullptr when unknown.
const UniformMorphism* builtin_by_name(std::string_view name);

}  // namespace halfflip
