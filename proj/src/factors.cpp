#include "halfflip/factors.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace halfflip {

namespace {

// Letters-to-letters expansion without Word wrappers.
std::string expand(const UniformMorphism& f, std::string_view raw) {
  std::string out;
  out.reserve(raw.size() * f.q);
  for (unsigned char a : raw) out.append(f.images[a].letters);
  return out;
}

std::vector<Word> sorted_words(std::unordered_set<std::string>&& set,
                               int alphabet_size) {
  std::vector<Word> out;
  out.reserve(set.size());
  for (auto it = set.begin(); it != set.end();) {
    auto node = set.extract(it++);
    out.push_back(Word{std::move(node.value()), alphabet_size});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All length-L substrings of the given buffers, deduplicated by content.
// Buffers are scanned in parallel; per-thread sets are merged afterwards.
std::unordered_set<std::string> collect_factors(
    const std::vector<std::string>& buffers, std::size_t L) {
  std::unordered_set<std::string> merged;
#ifdef _OPENMP
  const int nthreads = std::min(omp_get_max_threads(),
                                static_cast<int>(buffers.size()) > 0
                                    ? static_cast<int>(buffers.size())
                                    : 1);
  std::vector<std::unordered_set<std::string>> local(nthreads);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (std::size_t b = 0; b < buffers.size(); ++b) {
    auto& mine = local[omp_get_thread_num()];
    const std::string& w = buffers[b];
    if (w.size() < L) continue;
    for (std::size_t i = 0; i + L <= w.size(); ++i)
      mine.insert(w.substr(i, L));
  }
  for (auto& set : local)
    merged.merge(set);
#else
  for (const std::string& w : buffers) {
    if (w.size() < L) continue;
    for (std::size_t i = 0; i + L <= w.size(); ++i)
      merged.insert(w.substr(i, L));
  }
#endif
  return merged;
}

}  // namespace

bool FactorSet::contains(std::string_view raw_letters) const {
  if (raw_letters.size() != length) return false;
  auto it = std::lower_bound(
      factors.begin(), factors.end(), raw_letters,
      [](const Word& w, std::string_view v) { return w.letters < v; });
  return it != factors.end() && it->letters == raw_letters;
}

FactorSet two_letter_factors(const FixedPointSpec& spec) {
  const UniformMorphism& m = spec.morphism;
  std::set<std::string> pairs;
  const std::string& seed_img = m.images[spec.seed].letters;
  for (std::size_t i = 0; i + 2 <= seed_img.size(); ++i)
    pairs.insert(seed_img.substr(i, 2));
  for (bool grew = true; grew;) {
    grew = false;
    for (const std::string ab : std::vector(pairs.begin(), pairs.end())) {
      const std::string win =
          m.images[static_cast<unsigned char>(ab[0])].letters +
          m.images[static_cast<unsigned char>(ab[1])].letters;
      for (std::size_t i = 0; i + 2 <= win.size(); ++i)
        grew |= pairs.insert(win.substr(i, 2)).second;
    }
  }
  FactorSet out;
  out.length = 2;
  out.exact = true;
  out.provenance = "two-letter fixpoint closure";
  for (const std::string& p : pairs)
    out.factors.push_back(Word{p, m.codomain_size});
  return out;
}

namespace windows {

WindowMaterial base_material(const FixedPointSpec& spec, std::size_t cover_len,
                             const FactorLimits& limits) {
  const UniformMorphism& m = spec.morphism;
  WindowMaterial mat;
  mat.j = 0;
  std::size_t block_len = 1;
  while (block_len < cover_len) {
    if (block_len > limits.max_window_letters)
      throw ResourceLimitError(block_len, limits.max_window_letters);
    block_len *= m.q;
    ++mat.j;
  }
  const FactorSet pairs = two_letter_factors(spec);
  const std::size_t required = pairs.factors.size() * 2 * block_len;
  if (required > limits.max_window_letters)
    throw ResourceLimitError(required, limits.max_window_letters);

  mat.block_len = block_len;
  mat.letter_blocks.resize(m.domain_size);
  for (int a = 0; a < m.domain_size; ++a) {
    std::string block(1, static_cast<char>(a));
    for (int step = 0; step < mat.j; ++step) block = expand(m, block);
    mat.letter_blocks[a] = std::move(block);
  }
  for (const Word& ab : pairs.factors)
    mat.pairs.emplace_back(ab.at(0), ab.at(1));
  return mat;
}

WindowMaterial image_material(const FixedPointSpec& spec,
                              const UniformMorphism& f,
                              std::size_t base_cover_len,
                              const FactorLimits& limits) {
  if (f.domain_size != spec.morphism.codomain_size)
    throw ValidationError("image morphism domain does not match base alphabet");
  // Reserve cap headroom for the f-expansion before expanding the base.
  FactorLimits base_limits = limits;
  base_limits.max_window_letters = limits.max_window_letters / f.q;
  WindowMaterial mat = base_material(spec, base_cover_len, base_limits);
  for (std::string& block : mat.letter_blocks) block = expand(f, block);
  mat.block_len *= f.q;
  return mat;
}

}  // namespace windows

namespace {

std::vector<std::string> pair_windows(const windows::WindowMaterial& mat) {
  std::vector<std::string> wins;
  wins.reserve(mat.pairs.size());
  for (auto [a, b] : mat.pairs)
    wins.push_back(mat.letter_blocks[a] + mat.letter_blocks[b]);
  return wins;
}

}  // namespace

FactorSet factor_set_exact(const FixedPointSpec& spec, std::size_t L,
                           const FactorLimits& limits) {
  if (L == 0) throw ValidationError("factor length must be positive");
  const auto mat = windows::base_material(spec, L, limits);
  FactorSet out;
  out.length = L;
  out.exact = true;
  out.provenance = "window cover j=" + std::to_string(mat.j);
  out.factors = sorted_words(collect_factors(pair_windows(mat), L),
                             spec.morphism.codomain_size);
  return out;
}

FactorSet image_factor_set(const FixedPointSpec& spec,
                           const UniformMorphism& f, std::size_t L,
                           const FactorLimits& limits) {
  if (L == 0) throw ValidationError("factor length must be positive");
  if (f.domain_size != spec.morphism.codomain_size)
    throw ValidationError("image morphism domain does not match base alphabet");
  const std::size_t t = (L + f.q - 1) / f.q + 1;
  const FactorSet base = factor_set_exact(spec, t, limits);
  const std::size_t required = base.factors.size() * t * f.q;
  if (required > limits.max_window_letters)
    throw ResourceLimitError(required, limits.max_window_letters);
  std::vector<std::string> wins;
  wins.reserve(base.factors.size());
  for (const Word& w : base.factors) wins.push_back(expand(f, w.letters));
  FactorSet out;
  out.length = L;
  out.exact = true;
  out.provenance = "image windows over base factors of length " +
                   std::to_string(t);
  out.factors = sorted_words(collect_factors(wins, L), f.codomain_size);
  return out;
}

OffsetProfile offset_profile(const FixedPointSpec& spec,
                             const UniformMorphism* f, std::size_t L,
                             const FactorLimits& limits) {
  if (L == 0) throw ValidationError("factor length must be positive");
  const UniformMorphism& apply = f ? *f : spec.morphism;
  if (apply.domain_size != spec.morphism.codomain_size)
    throw ValidationError("image morphism domain does not match base alphabet");
  const std::size_t q = static_cast<std::size_t>(apply.q);
  const std::size_t t = (L + q - 1) / q + 1;
  const FactorSet base = factor_set_exact(spec, t, limits);

  OffsetProfile profile;
  profile.modulus = apply.q;
  const int out_alphabet = apply.codomain_size;
  for (const Word& w : base.factors) {
    const std::string img = expand(apply, w.letters);
    for (std::size_t o = 0; o + L <= img.size(); ++o) {
      Word factor{img.substr(o, L), out_alphabet};
      profile.entries[std::move(factor)].insert(static_cast<int>(o % q));
    }
  }
  return profile;
}

std::string export_factor_lines(const FactorSet& set) {
  std::string out;
  for (const Word& w : set.factors) {
    out += format_word(w);
    out += '\n';
  }
  return out;
}

}  // namespace halfflip
