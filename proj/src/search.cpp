#include "halfflip/search.hpp"

#include <cstring>

namespace halfflip {

nlohmann::ordered_json SearchResult::to_json() const {
  nlohmann::ordered_json j;
  j["s"] = alphabet_size;
  j["k"] = min_period;
  j["distinct_halves"] = distinct_halves;
  j["max_length"] = max_length;
  j["extremal_word"] = format_word(extremal_word);
  j["nodes_explored"] = nodes_explored;
  j["exhaustive"] = exhaustive;
  nlohmann::ordered_json caps_json;
  caps_json["max_nodes"] = caps.max_nodes;
  caps_json["max_length"] = caps.max_length;
  caps_json["node_cap_hit"] = node_cap_hit;
  caps_json["length_cap_hit"] = length_cap_hit;
  j["caps"] = caps_json;
  return j;
}

ExtensionChecker::ExtensionChecker(int alphabet_size, std::size_t min_period,
                                   bool distinct_halves)
    : alphabet_size_(alphabet_size),
      min_period_(min_period),
      distinct_halves_(distinct_halves) {
  if (alphabet_size < 1 || alphabet_size > 255)
    throw ValidationError("alphabet size out of range");
  if (min_period < 1) throw ValidationError("min_period must be >= 1");
}

bool ExtensionChecker::can_extend(Letter a) const {
  if (a >= alphabet_size_) throw ValidationError("letter outside alphabet");
  const std::size_t n1 = word_.size() + 1;
  const char* data = word_.data();
  for (std::size_t p = min_period_; 2 * p <= n1; ++p) {
    // The only new factor of length 2p in w.a is its suffix x = u v, with
    // v ending in the candidate letter. w.a gains a half-flip of period p
    // exactly when swap(x) = v u already occurs, the new suffix included.
    const std::size_t upos = n1 - 2 * p;
    const Fp fp_u = hashes_.sub(upos, p);
    const Fp fp_v = hashes_.sub_with_appended(n1 - p, a);

    const bool halves_equal =
        fp_u == fp_v &&
        (p == 1 ? static_cast<unsigned char>(data[upos]) == a
                : std::memcmp(data + upos, data + n1 - p, p - 1) == 0 &&
                      static_cast<unsigned char>(data[upos + p - 1]) == a);
    if (halves_equal) {
      if (!distinct_halves_) return false;  // the new square forbids
      continue;  // uv == vu pairs do not count under the strict reading
    }
    if (2 * p > word_.size()) continue;  // no prior factor of this length

    const Occurrences& occ = by_period_[p - min_period_];
    const auto it = occ.find(PrefixHashes::concat(fp_v, fp_u, p));
    if (it == occ.end()) continue;
    for (std::uint32_t pos : it->second) {
      // stored factor must equal v . u
      const char* stored = data + pos;
      if (std::memcmp(stored, data + n1 - p, p - 1) == 0 &&
          static_cast<unsigned char>(stored[p - 1]) == a &&
          std::memcmp(stored + p, data + upos, p) == 0)
        return false;
    }
  }
  return true;
}

void ExtensionChecker::push(Letter a) {
  if (a >= alphabet_size_) throw ValidationError("letter outside alphabet");
  word_.push_back(static_cast<char>(a));
  hashes_.push(a);
  const std::size_t n = word_.size();
  for (std::size_t p = min_period_; 2 * p <= n; ++p) {
    if (by_period_.size() <= p - min_period_) by_period_.emplace_back();
    const std::size_t pos = n - 2 * p;
    by_period_[p - min_period_][hashes_.sub(pos, 2 * p)].push_back(
        static_cast<std::uint32_t>(pos));
  }
}

void ExtensionChecker::pop() {
  const std::size_t n = word_.size();
  for (std::size_t p = min_period_; 2 * p <= n; ++p) {
    auto& occ = by_period_[p - min_period_];
    const auto it = occ.find(hashes_.sub(n - 2 * p, 2 * p));
    it->second.pop_back();
    if (it->second.empty()) occ.erase(it);
  }
  word_.pop_back();
  hashes_.pop();
}

bool extension_safe(const Word& w, Letter a, std::size_t k,
                    bool distinct_halves) {
  ExtensionChecker checker(w.alphabet_size, k, distinct_halves);
  for (unsigned char letter : w.letters) checker.push(letter);
  return checker.can_extend(a);
}

SearchResult backtrack_longest(int alphabet_size, std::size_t min_period,
                               bool distinct_halves, SearchLimits limits) {
  SearchResult result;
  result.alphabet_size = alphabet_size;
  result.min_period = min_period;
  result.distinct_halves = distinct_halves;
  result.caps = limits;
  result.extremal_word.alphabet_size = alphabet_size;

  if (limits.max_length == 0 || limits.max_nodes == 0) {
    result.exhaustive = false;
    return result;
  }

  ExtensionChecker checker(alphabet_size, min_period, distinct_halves);
  checker.push(0);  // first letter fixed by letter-permutation symmetry
  result.nodes_explored = 1;
  std::string best(1, '\0');

  std::vector<Letter> next_letter{0};
  bool done_exhaustive = false;
  while (true) {
    if (checker.size() >= limits.max_length) {
      result.length_cap_hit = true;
      break;
    }
    Letter& cand = next_letter.back();
    if (cand >= alphabet_size) {
      next_letter.pop_back();
      checker.pop();
      if (next_letter.empty()) {
        done_exhaustive = true;
        break;
      }
      continue;
    }
    const Letter a = cand++;
    if (!checker.can_extend(a)) continue;
    if (result.nodes_explored >= limits.max_nodes) {
      result.node_cap_hit = true;
      break;
    }
    checker.push(a);
    ++result.nodes_explored;
    next_letter.push_back(0);
    if (checker.size() > best.size()) best.assign(checker.word());
  }

  result.max_length = best.size();
  result.extremal_word = Word{std::move(best), alphabet_size};
  result.exhaustive = done_exhaustive;
  return result;
}

}  // namespace halfflip
