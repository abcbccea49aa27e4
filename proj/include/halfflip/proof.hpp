#pragma once

// Mechanized checks for the structural lemmas behind the avoidance proofs,
// the witness-descent step, and the end-to-end theorem pipelines.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halfflip/detect.hpp"
#include "halfflip/factors.hpp"
#include "halfflip/word.hpp"

#include <json.hpp>

namespace halfflip {

// Which letter differences (b - a mod modulus) may occur in two-letter
// factors of the base word. Two distinct letters are "consecutive" when
// they can both extend (or precede) a common non-empty word, i.e. their
// difference lies in {d1 - d2 : d1 != d2 allowed}.
struct SuccessorStructure {
  int modulus = 0;
  std::set<int> allowed_diffs;

  bool consecutive(int a, int b) const;
};

// The base word's structure: differences {1,2} mod 5.
SuccessorStructure base_successor_structure();

struct DistinctnessTable {
  UniformMorphism morphism;
  int alpha = 0;  // claimed prefix-distinctness length
  int beta = 0;   // claimed suffix-distinctness length
  std::vector<std::vector<int>> lcp;  // pairwise longest common prefixes
  std::vector<std::vector<int>> lcs;  // pairwise longest common suffixes
  std::set<std::pair<int, int>> prefix_exceptions;  // normalized a < b
  std::set<std::pair<int, int>> suffix_exceptions;
};

struct DistinctnessViolation {
  bool suffix_side = false;  // false: lcp/alpha side, true: lcs/beta side
  int a = 0, b = 0;
  int value = 0;  // the offending lcp/lcs
  bool excess = false;  // true: non-exception pair reaches the bound;
                        // false: claimed exception pair stays below it
};

struct DistinctnessBuild {
  std::optional<DistinctnessTable> table;  // set iff claims match exactly
  std::vector<DistinctnessViolation> violations;
  std::vector<std::vector<int>> lcp, lcs;  // always computed
};

// Computes full lcp/lcs matrices and validates the claimed
// (alpha, beta, exceptions) against them, both directions: non-exception
// pairs must stay strictly below the bound, exception pairs must reach it.
DistinctnessBuild build_distinctness_table(
    const UniformMorphism& f, int alpha, int beta,
    std::set<std::pair<int, int>> prefix_exceptions,
    std::set<std::pair<int, int>> suffix_exceptions);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json details;  // non-empty whenever passed == false
};

// Marker occurs and only at allowed residues (offset profile at |marker|).
CheckOutcome check_synchronization(const FixedPointSpec& spec,
                                   const UniformMorphism* f,
                                   const Word& marker,
                                   const std::set<int>& allowed_residues,
                                   const FactorLimits& limits = {});

// Every length-L factor of f(fixed point) contains the marker.
CheckOutcome check_marker_coverage(const FixedPointSpec& spec,
                                   const UniformMorphism& f,
                                   const Word& marker, std::size_t L,
                                   const FactorLimits& limits = {});

// Every two-letter factor ab satisfies (b - a) mod modulus in allowed.
CheckOutcome check_successor_property(const FixedPointSpec& spec,
                                      const std::set<int>& allowed_diffs,
                                      int modulus);

// Every exception pair of the table is non-consecutive, so the successor
// structure breaks the extension ambiguity the shared prefix/suffix leaves.
CheckOutcome check_exception_pairs_nonconsecutive(
    const DistinctnessTable& table, const SuccessorStructure& succ);

CheckOutcome check_alpha_beta_condition(int alpha, int beta, int q);

// Every length-L factor of f(fixed point) occurs at a single residue mod q.
CheckOutcome check_offset_classes_singleton(const FixedPointSpec& spec,
                                            const UniformMorphism& f,
                                            std::size_t L,
                                            const FactorLimits& limits = {});

// ---------------------------------------------------------------------
// Witness descent
// ---------------------------------------------------------------------

struct AlignmentInfo {
  int x_u = 0;  // residue mod q of all occurrences of u
  int x_v = 0;  // residue mod q of all occurrences of v
  int q = 0;
};

enum class DescentError {
  none,
  period_not_multiple,     // p not a multiple of q
  misaligned_occurrences,  // x_u != x_v, or positions off their residues
  alpha_beta_violated,     // table bound alpha+beta <= q+1 broken
  witness_malformed,       // |uv| != 2p and similar
  not_image_material,      // some q-block matches no image
  ambiguous_extension,     // extension matches two consecutive letters
  oracle_rejected,         // base oracle refuses a produced factor
  inconsistent_content,    // resolved letter's image contradicts the witness
};

std::string_view descent_error_name(DescentError e);

using BaseFactorOracle = std::function<bool(const Word&)>;

struct LetterResolution {
  std::optional<Letter> letter;
  DescentError error = DescentError::none;
  std::string message;
};

// The unique letter whose image starts with the given prefix; when the
// prefix matches several images, non-consecutive candidates are settled by
// asking the oracle which extension of the context is a real factor.
LetterResolution resolve_forward_letter(const UniformMorphism& f,
                                        const SuccessorStructure& succ,
                                        std::string_view image_prefix,
                                        const Word& context,
                                        const BaseFactorOracle& oracle);

// Mirror image: unique letter whose image ends with the given suffix.
LetterResolution resolve_backward_letter(const UniformMorphism& f,
                                         const SuccessorStructure& succ,
                                         std::string_view image_suffix,
                                         const Word& context,
                                         const BaseFactorOracle& oracle);

struct DescentOutcome {
  std::optional<HalfFlipWitness> witness;
  DescentError error = DescentError::none;
  std::string message;
};

// Maps a half-flip witness of period p = q * p' in the image word to one of
// period p' in the base word. Positions of the input witness refer to the
// image word with offset 0 on an image boundary; positions of the output
// witness refer to the base word.
DescentOutcome descend_witness(const UniformMorphism& f,
                               const DistinctnessTable& table,
                               const SuccessorStructure& succ,
                               const BaseFactorOracle& oracle,
                               const HalfFlipWitness& image_witness,
                               const AlignmentInfo& align);

// ---------------------------------------------------------------------
// Theorem pipelines
// ---------------------------------------------------------------------

enum class TheoremVariant { T11, T12, T13 };

std::optional<TheoremVariant> parse_variant(std::string_view s);
std::string_view variant_name(TheoremVariant v);

struct CheckReport {
  std::string variant;
  std::size_t period_bound = 0;
  std::vector<CheckOutcome> checks;
  bool overall = false;

  nlohmann::ordered_json to_json() const;
};

CheckReport verify_theorem(TheoremVariant v, std::size_t period_bound,
                           const FactorLimits& limits = {});

}  // namespace halfflip
