#pragma once

// Exhaustive backtracking over words avoiding k-half-flips: the longest
// such words over a given alphabet, with incremental extension pruning.

#include <cstdint>

#include "halfflip/hashing.hpp"
#include "halfflip/word.hpp"

#include <json.hpp>

#include <unordered_map>
#include <vector>

namespace halfflip {

struct SearchLimits {
  std::uint64_t max_nodes = 1'000'000'000;
  std::size_t max_length = 10'000;
};

struct SearchResult {
  int alphabet_size = 0;
  std::size_t min_period = 1;
  bool distinct_halves = false;
  std::size_t max_length = 0;
  Word extremal_word;  // lexicographically least among the longest reached
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;  // tree fully explored, max_length proven maximal
  bool node_cap_hit = false;
  bool length_cap_hit = false;
  SearchLimits caps;

  nlohmann::ordered_json to_json() const;
};

// Maintains a word under push/pop together with, for every period p >= k,
// a fingerprint index of all its length-2p factors, so that testing one
// more letter only inspects the new suffixes. Fingerprint hits are always
// confirmed against the actual letters.
class ExtensionChecker {
 public:
  ExtensionChecker(int alphabet_size, std::size_t min_period,
                   bool distinct_halves);

  std::size_t size() const { return word_.size(); }
  std::string_view word() const { return word_; }
  int alphabet_size() const { return alphabet_size_; }

  // Would word . a still avoid half-flips with period in [k, |w.a|/2]?
  bool can_extend(Letter a) const;

  void push(Letter a);
  void pop();

 private:
  using Occurrences =
      std::unordered_map<Fp, std::vector<std::uint32_t>, FpHash>;

  int alphabet_size_;
  std::size_t min_period_;
  bool distinct_halves_;
  std::string word_;
  IncrementalHashes hashes_;
  std::vector<Occurrences> by_period_;  // index p - min_period
};

// One-shot form of the incremental check; pre: w itself is free of
// half-flips with period in [k, |w|/2].
bool extension_safe(const Word& w, Letter a, std::size_t k,
                    bool distinct_halves = false);

// Depth-first search over words with first letter fixed to 0 (letter
// permutations preserve half-flip-freeness, so the maximum length is
// unaffected). Sequential and deterministic; the extremal word is the
// lexicographically least among the longest, nodes count accepted words.
SearchResult backtrack_longest(int alphabet_size, std::size_t min_period,
                               bool distinct_halves = false,
                               SearchLimits limits = {});

}  // namespace halfflip
