#include "halfflip/reference.hpp"

#include <algorithm>
#include <unordered_set>

namespace halfflip::ref {

std::vector<Word> factors_of(std::string_view raw, int alphabet_size,
                             std::size_t L) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i + L <= raw.size(); ++i)
    seen.insert(std::string(raw.substr(i, L)));
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const std::string& s : seen) out.push_back(Word{s, alphabet_size});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> factors_of(const Word& w, std::size_t L) {
  return factors_of(w.view(), w.alphabet_size, L);
}

FactorSet factor_set_exact(const FixedPointSpec& spec, std::size_t L,
                           const FactorLimits& limits) {
  const UniformMorphism& m = spec.morphism;
  const FactorSet pairs = two_letter_factors(spec);

  std::size_t block_len = 1;
  int j = 0;
  while (block_len < L) {
    if (block_len > limits.max_window_letters)
      throw ResourceLimitError(block_len, limits.max_window_letters);
    block_len *= m.q;
    ++j;
  }
  if (pairs.factors.size() * 2 * block_len > limits.max_window_letters)
    throw ResourceLimitError(pairs.factors.size() * 2 * block_len,
                             limits.max_window_letters);

  std::unordered_set<std::string> seen;
  for (const Word& ab : pairs.factors) {
    Word win = ab;
    for (int step = 0; step < j; ++step) win = apply_morphism(m, win);
    for (std::size_t i = 0; i + L <= win.size(); ++i)
      seen.insert(win.letters.substr(i, L));
  }
  FactorSet out;
  out.length = L;
  out.exact = true;
  out.provenance = "reference window cover j=" + std::to_string(j);
  for (const std::string& s : seen)
    out.factors.push_back(Word{s, m.codomain_size});
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::optional<InfiniteHalfFlip> infinite_halfflip_check(
    const FixedPointSpec& spec, const UniformMorphism* f,
    const DetectOptions& opt, const FactorLimits& limits) {
  if (opt.min_period < 1) throw ValidationError("min_period must be >= 1");
  for (std::size_t p = opt.min_period; p <= opt.max_period; ++p) {
    const FactorSet set = f ? image_factor_set(spec, *f, 2 * p, limits)
                            : halfflip::factor_set_exact(spec, 2 * p, limits);
    std::unordered_set<std::string> members;
    for (const Word& x : set.factors) members.insert(x.letters);
    for (const Word& x : set.factors) {  // sorted, so first hit is lex-least
      const Word swapped = swap_halves(x);
      if (opt.distinct_halves && swapped == x) continue;
      if (members.count(swapped.letters)) return InfiniteHalfFlip{p, x};
    }
  }
  return std::nullopt;
}

}  // namespace halfflip::ref
