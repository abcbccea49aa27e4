#include "halfflip/detect.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "halfflip/hashing.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace halfflip {

nlohmann::ordered_json HalfFlipWitness::to_json() const {
  nlohmann::ordered_json j;
  j["period"] = period;
  j["pos_uv"] = pos_uv;
  j["pos_vu"] = pos_vu;
  j["uv"] = format_word(uv);
  return j;
}

Word swap_halves(const Word& x) {
  if (x.empty() || x.size() % 2 != 0)
    throw ValidationError("swap_halves needs a non-empty even-length word");
  const std::size_t h = x.size() / 2;
  Word out;
  out.alphabet_size = x.alphabet_size;
  out.letters = x.letters.substr(h) + x.letters.substr(0, h);
  return out;
}

std::optional<HalfFlipWitness> find_half_flip_brute(const Word& w,
                                                    const DetectOptions& opt) {
  if (opt.min_period < 1) throw ValidationError("min_period must be >= 1");
  const std::size_t n = w.size();
  const std::size_t pmax = std::min(opt.max_period, n / 2);
  std::unordered_map<std::string, std::size_t> first_pos;
  for (std::size_t p = opt.min_period; p <= pmax; ++p) {
    const std::size_t L = 2 * p;
    first_pos.clear();
    for (std::size_t j = 0; j + L <= n; ++j)
      first_pos.emplace(w.letters.substr(j, L), j);
    for (std::size_t i = 0; i + L <= n; ++i) {
      std::string swapped =
          w.letters.substr(i + p, p) + w.letters.substr(i, p);
      if (opt.distinct_halves &&
          swapped.compare(0, L, w.letters, i, L) == 0)
        continue;
      auto it = first_pos.find(swapped);
      if (it != first_pos.end()) {
        return HalfFlipWitness{p, Word{w.letters.substr(i, L),
                                       w.alphabet_size},
                               i, it->second};
      }
    }
  }
  return std::nullopt;
}

std::optional<HalfFlipWitness> find_half_flip_fast(const Word& w,
                                                   const DetectOptions& opt) {
  if (opt.min_period < 1) throw ValidationError("min_period must be >= 1");
  const std::size_t n = w.size();
  const std::size_t pmax = std::min(opt.max_period, n / 2);
  if (pmax < opt.min_period) return std::nullopt;
  const PrefixHashes hashes(w.letters);
  const char* data = w.letters.data();

  // fp -> first occurrence position of each distinct content; buckets stay
  // singletons unless two contents truly collide on both hash lanes.
  std::unordered_map<Fp, std::vector<std::uint32_t>, FpHash> occurrences;
  for (std::size_t p = opt.min_period; p <= pmax; ++p) {
    const std::size_t L = 2 * p;
    occurrences.clear();
    occurrences.reserve(n);
    for (std::size_t j = 0; j + L <= n; ++j) {
      auto& bucket = occurrences[hashes.sub(j, L)];
      bool known = false;
      for (std::uint32_t seen : bucket) {
        if (std::memcmp(data + seen, data + j, L) == 0) {
          known = true;
          break;
        }
      }
      if (!known) bucket.push_back(static_cast<std::uint32_t>(j));
    }
    for (std::size_t i = 0; i + L <= n; ++i) {
      const Fp fp_u = hashes.sub(i, p);
      const Fp fp_v = hashes.sub(i + p, p);
      if (opt.distinct_halves && fp_u == fp_v &&
          std::memcmp(data + i, data + i + p, p) == 0)
        continue;
      const Fp swapped = PrefixHashes::concat(fp_v, fp_u, p);
      auto it = occurrences.find(swapped);
      if (it == occurrences.end()) continue;
      for (std::uint32_t j : it->second) {
        if (std::memcmp(data + j, data + i + p, p) == 0 &&
            std::memcmp(data + j + p, data + i, p) == 0) {
          return HalfFlipWitness{p, Word{w.letters.substr(i, L),
                                         w.alphabet_size},
                                 i, j};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Open-addressing fingerprint table over window positions, reused across
// periods via epoch tags. Same-fingerprint slots with different contents
// chain onward, so membership answers are exact once the caller confirms
// contents.
class ProbeTable {
 public:
  void reset(std::size_t expected) {
    std::size_t want = 64;
    while (want < 2 * expected) want *= 2;
    if (slots_.size() != want) {
      slots_.assign(want, Slot{});
      epoch_ = 1;
    } else if (++epoch_ == 0) {
      slots_.assign(want, Slot{});
      epoch_ = 1;
    }
    mask_ = want - 1;
  }

  // Inserts loc unless an equal-content entry exists. same_content(loc')
  // must compare the caller's content against the stored location.
  template <class SameContent>
  void insert(const Fp& fp, std::uint32_t loc, SameContent&& same_content) {
    std::size_t idx = FpHash{}(fp)&mask_;
    for (;; idx = (idx + 1) & mask_) {
      Slot& s = slots_[idx];
      if (s.epoch != epoch_) {
        s = Slot{fp, loc, epoch_};
        return;
      }
      if (s.fp == fp && same_content(s.loc)) return;
    }
  }

  // First stored location whose fingerprint and content match.
  template <class SameContent>
  std::optional<std::uint32_t> find(const Fp& fp,
                                    SameContent&& same_content) const {
    std::size_t idx = FpHash{}(fp)&mask_;
    for (;; idx = (idx + 1) & mask_) {
      const Slot& s = slots_[idx];
      if (s.epoch != epoch_) return std::nullopt;
      if (s.fp == fp && same_content(s.loc)) return s.loc;
    }
  }

 private:
  struct Slot {
    Fp fp;
    std::uint32_t loc = 0;
    std::uint32_t epoch = 0;
  };
  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::uint32_t epoch_ = 0;
};

constexpr std::uint32_t kBlockShift = 26;
constexpr std::uint32_t kOffsetMask = (1u << kBlockShift) - 1;

struct PeriodScan {
  const windows::WindowMaterial* mat;
  const std::vector<PrefixHashes>* block_hashes;

  std::vector<std::string> straddles;
  std::vector<PrefixHashes> straddle_hashes;
  ProbeTable table;

  const char* content(std::uint32_t loc) const {
    const std::uint32_t block = loc >> kBlockShift;
    const std::uint32_t off = loc & kOffsetMask;
    if (block < mat->letter_blocks.size())
      return mat->letter_blocks[block].data() + off;
    return straddles[block - mat->letter_blocks.size()].data() + off;
  }

  // Runs one period; returns the lexicographically least confirmed member
  // x with swap(x) also a factor, or nullopt.
  std::optional<std::string> run(std::size_t p, bool distinct_halves) {
    const std::size_t L = 2 * p;
    const std::size_t nblocks = mat->letter_blocks.size();
    const std::size_t BL = mat->block_len;

    straddles.clear();
    straddle_hashes.clear();
    for (auto [a, b] : mat->pairs) {
      std::string s = mat->letter_blocks[a].substr(BL - (L - 1)) +
                      mat->letter_blocks[b].substr(0, L - 1);
      straddle_hashes.emplace_back(s);
      straddles.push_back(std::move(s));
    }

    const std::size_t inside_count = BL >= L ? BL - L + 1 : 0;
    table.reset(nblocks * inside_count + straddles.size() * (L - 1));

    auto for_each_position = [&](auto&& visit) {
      for (std::size_t blk = 0; blk < nblocks; ++blk)
        for (std::size_t off = 0; off + L <= BL; ++off)
          visit(static_cast<std::uint32_t>((blk << kBlockShift) | off),
                (*block_hashes)[blk], off);
      for (std::size_t sidx = 0; sidx < straddles.size(); ++sidx) {
        const std::uint32_t blk =
            static_cast<std::uint32_t>(nblocks + sidx);
        for (std::size_t off = 0; off + L <= straddles[sidx].size(); ++off)
          visit((blk << kBlockShift) | static_cast<std::uint32_t>(off),
                straddle_hashes[sidx], off);
      }
    };

    for_each_position([&](std::uint32_t loc, const PrefixHashes& h,
                          std::size_t off) {
      const Fp fp = h.sub(off, L);
      const char* mine = content(loc);
      table.insert(fp, loc, [&](std::uint32_t other) {
        return std::memcmp(content(other), mine, L) == 0;
      });
    });

    std::optional<std::string> best;
    for_each_position([&](std::uint32_t loc, const PrefixHashes& h,
                          std::size_t off) {
      const char* x = content(loc);
      const char* u = x;
      const char* v = x + p;
      const Fp fp_u = h.sub(off, p);
      const Fp fp_v = h.sub(off + p, p);
      if (distinct_halves && fp_u == fp_v && std::memcmp(u, v, p) == 0)
        return;
      const Fp swapped = PrefixHashes::concat(fp_v, fp_u, p);
      auto hit = table.find(swapped, [&](std::uint32_t other) {
        const char* stored = content(other);
        return std::memcmp(stored, v, p) == 0 &&
               std::memcmp(stored + p, u, p) == 0;
      });
      if (!hit) return;
      if (!best || std::memcmp(x, best->data(), L) < 0)
        best = std::string(x, L);
    });
    return best;
  }
};

}  // namespace

std::optional<InfiniteHalfFlip> infinite_halfflip_check(
    const FixedPointSpec& spec, const UniformMorphism* f,
    const DetectOptions& opt, const FactorLimits& limits) {
  if (opt.min_period < 1) throw ValidationError("min_period must be >= 1");
  if (opt.max_period < opt.min_period) return std::nullopt;  // vacuous

  const std::size_t Lmax = 2 * opt.max_period;
  const windows::WindowMaterial mat =
      f ? windows::image_material(spec, *f,
                                  (Lmax + f->q - 1) / f->q + 1, limits)
        : windows::base_material(spec, Lmax, limits);
  const int out_alphabet = f ? f->codomain_size : spec.morphism.codomain_size;

  hashing::ensure_powers(mat.block_len + 2 * Lmax);
  std::vector<PrefixHashes> block_hashes;
  block_hashes.reserve(mat.letter_blocks.size());
  for (const std::string& b : mat.letter_blocks) block_hashes.emplace_back(b);

  const std::size_t first = opt.min_period;
  const std::size_t last = opt.max_period;

#ifdef _OPENMP
  const int nthreads = omp_get_max_threads();
#else
  const int nthreads = 1;
#endif
  std::vector<PeriodScan> scans(nthreads);
  for (auto& s : scans) {
    s.mat = &mat;
    s.block_hashes = &block_hashes;
  }

  // Periods are processed in ascending chunks so a hit in an early chunk
  // skips the rest; within a chunk every period is decided independently.
  const std::size_t chunk = std::max<std::size_t>(nthreads * 4, 16);
  for (std::size_t lo = first; lo <= last; lo += chunk) {
    const std::size_t hi = std::min(last, lo + chunk - 1);
    std::vector<std::optional<std::string>> found(hi - lo + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t p = lo; p <= hi; ++p) {
#ifdef _OPENMP
      PeriodScan& scan = scans[omp_get_thread_num()];
#else
      PeriodScan& scan = scans[0];
#endif
      found[p - lo] = scan.run(p, opt.distinct_halves);
    }
    for (std::size_t p = lo; p <= hi; ++p) {
      if (found[p - lo]) {
        return InfiniteHalfFlip{p,
                                Word{std::move(*found[p - lo]), out_alphabet}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace halfflip
