#pragma once

// Half-flip semantics: the swap operator, detection in finite words, and
// the bounded-period check over the infinite words' exact factor sets.
//
// A word contains a half-flip of period p if factors uv and vu occur with
// |u| = |v| = p. By default u = v is allowed (a square uu is a half-flip);
// distinct_halves = true switches to the reading that requires uv != vu.

#include <optional>

#include "halfflip/factors.hpp"
#include "halfflip/word.hpp"

#include <json.hpp>

namespace halfflip {

struct HalfFlipWitness {
  std::size_t period = 0;
  Word uv;                  // length 2*period
  std::size_t pos_uv = 0;   // occurrence of uv in the host word
  std::size_t pos_vu = 0;   // occurrence of swap_halves(uv); may coincide

  nlohmann::ordered_json to_json() const;
};

struct DetectOptions {
  std::size_t min_period = 1;
  std::size_t max_period = 500;
  bool distinct_halves = false;
};

// Second half . first half. Throws on odd or empty input.
Word swap_halves(const Word& x);

// Scans periods in [min_period, min(max_period, |w|/2)] in increasing
// order; witness tie-break is smallest period, then smallest pos_uv, then
// smallest pos_vu. An empty period range yields absent.
//
// The brute version is the oracle: per period it builds a plain
// content-keyed occurrence map. The fast version reaches the same witness
// through rolling-hash pre-filtering with full-comparison confirmation,
// in O(|w| * max_period) letter operations.
std::optional<HalfFlipWitness> find_half_flip_brute(const Word& w,
                                                    const DetectOptions& opt);
std::optional<HalfFlipWitness> find_half_flip_fast(const Word& w,
                                                   const DetectOptions& opt);

struct InfiniteHalfFlip {
  std::size_t period = 0;
  Word uv;  // lexicographically least member x with swap_halves(x) in the set
};

// Decides, for each p in [min_period, max_period], whether the exact
// factor set of the infinite word (f applied to the fixed point when f is
// non-null) contains some x with swap_halves(x) also a factor. Reports the
// least such p; absent means the infinite word provably contains no
// half-flip with period in the range. Periods are checked over shared
// window material with per-period fingerprint passes; every reported hit
// is confirmed by full comparison.
std::optional<InfiniteHalfFlip> infinite_halfflip_check(
    const FixedPointSpec& spec, const UniformMorphism* f,
    const DetectOptions& opt, const FactorLimits& limits = {});

}  // namespace halfflip
