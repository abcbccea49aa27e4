#pragma once

// Exact factor sets of the fixed point and of its morphic images, plus
// occurrence-offset profiles modulo q.
//
// Exactness rests on the window-cover rule: once q^j >= L, every length-L
// factor of the fixed point lies inside m^j(ab) for some length-2 factor ab,
// and everything inside such a window is itself a factor. The same rule
// lifts through a second morphism f: every length-L factor of f(W) lies
// inside f(w) for a factor w of W of length ceil(L/q_f)+1.

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfflip/word.hpp"

namespace halfflip {

struct FactorLimits {
  // Total letters of window material a single query may expand.
  std::size_t max_window_letters = 100'000'000;
};

struct ResourceLimitError : std::runtime_error {
  std::size_t required;
  std::size_t cap;
  ResourceLimitError(std::size_t required_, std::size_t cap_)
      : std::runtime_error("window material of " + std::to_string(required_) +
                           " letters exceeds cap of " + std::to_string(cap_)),
        required(required_),
        cap(cap_) {}
};

struct FactorSet {
  std::size_t length = 0;
  std::vector<Word> factors;  // sorted lexicographically, deduplicated
  bool exact = false;
  std::string provenance;

  bool contains(std::string_view raw_letters) const;
  bool contains(const Word& w) const { return contains(w.view()); }
};

// The exact set of length-2 factors, by fixpoint iteration from the seed
// image: keep adding the pairs visible in m(x)m(y) for known pairs xy until
// stable.
FactorSet two_letter_factors(const FixedPointSpec& spec);

// The exact set of length-L factors of the fixed point (window-cover rule
// at the least j with q^j >= L).
FactorSet factor_set_exact(const FixedPointSpec& spec, std::size_t L,
                           const FactorLimits& limits = {});

// The exact set of length-L factors of f(fixed point): union over base
// factors w of length ceil(L/f.q)+1 of the length-L factors of f(w).
FactorSet image_factor_set(const FixedPointSpec& spec,
                           const UniformMorphism& f, std::size_t L,
                           const FactorLimits& limits = {});

struct OffsetProfile {
  int modulus = 0;
  // Factor -> residues (mod modulus) of its occurrence offsets, where
  // offset 0 is an image boundary. Covers every factor of the infinite
  // (image) word of the given length.
  std::map<Word, std::set<int>> entries;
};

// Profile of length-L factors of f(W) (or of W itself via the base
// morphism when f is null). modulus = f->q, or the base q when f is null.
OffsetProfile offset_profile(const FixedPointSpec& spec,
                             const UniformMorphism* f, std::size_t L,
                             const FactorLimits& limits = {});

// Sorted plain-text export, one digit-string factor per line.
std::string export_factor_lines(const FactorSet& set);

namespace windows {

// Expanded window material shared by the factor-set and detection paths.
// letter_blocks[a] holds the raw letters of m^j(a) (optionally pushed
// through a second morphism); a window for the pair ab is the
// concatenation letter_blocks[a] . letter_blocks[b].
struct WindowMaterial {
  int j = 0;
  std::size_t block_len = 0;
  std::vector<std::string> letter_blocks;
  std::vector<std::pair<Letter, Letter>> pairs;

  std::size_t total_letters() const {
    return pairs.size() * 2 * block_len;
  }
};

// Minimal j with q^j >= cover_len; blocks are m^j(a).
WindowMaterial base_material(const FixedPointSpec& spec,
                             std::size_t cover_len,
                             const FactorLimits& limits);

// Blocks are f(m^j(a)) with minimal j such that q^j >= base_cover_len.
WindowMaterial image_material(const FixedPointSpec& spec,
                              const UniformMorphism& f,
                              std::size_t base_cover_len,
                              const FactorLimits& limits);

}  // namespace windows

}  // namespace halfflip
