#pragma once

// Serial reference implementations kept for testing. These favor the most
// transparent data structures (plain content-keyed sets, no fingerprints,
// no OpenMP) and are differential-tested against the fast kernels; the
// benchmark target compares the two.

#include <optional>
#include <string_view>
#include <vector>

#include "halfflip/detect.hpp"
#include "halfflip/factors.hpp"
#include "halfflip/word.hpp"

namespace halfflip::ref {

// Distinct length-L factors of one finite word, sorted.
std::vector<Word> factors_of(const Word& w, std::size_t L);
std::vector<Word> factors_of(std::string_view raw, int alphabet_size,
                             std::size_t L);

// Window-closure factor set computed with a single serial loop.
FactorSet factor_set_exact(const FixedPointSpec& spec, std::size_t L,
                           const FactorLimits& limits = {});

// Bounded-period check over materialized factor sets, one period at a time.
std::optional<InfiniteHalfFlip> infinite_halfflip_check(
    const FixedPointSpec& spec, const UniformMorphism* f,
    const DetectOptions& opt, const FactorLimits& limits = {});

}  // namespace halfflip::ref
