#pragma once

// Double 64-bit polynomial fingerprints over letter buffers.
//
// Fingerprints are a pre-filter only: every equality decision that matters
// is confirmed by a full letter comparison at the call site. Two lanes with
// different prime moduli keep accidental collisions out of the confirm path.

#include <cstdint>
#include <string_view>
#include <vector>

namespace halfflip {

struct Fp {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Fp&, const Fp&) = default;
};

struct FpHash {
  std::size_t operator()(const Fp& f) const {
    return static_cast<std::size_t>(f.a * 0x9e3779b97f4a7c15ULL ^ f.b);
  }
};

namespace hashing {

constexpr std::uint64_t kMod1 = 2305843009213693951ULL;  // 2^61 - 1
constexpr std::uint64_t kMod2 = 4611686018427387847ULL;  // prime < 2^62
constexpr std::uint64_t kBase1 = 131;
constexpr std::uint64_t kBase2 = 137;

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y,
                            std::uint64_t mod) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(x) * y % mod);
}

// Grows the shared base-power tables to cover spans of length n. Not safe
// to call concurrently; call before entering parallel regions.
void ensure_powers(std::size_t n);

std::uint64_t power1(std::size_t n);
std::uint64_t power2(std::size_t n);

}  // namespace hashing

// Prefix-hash arrays for one buffer; any substring fingerprint in O(1).
class PrefixHashes {
 public:
  PrefixHashes() = default;
  explicit PrefixHashes(std::string_view s);

  std::size_t size() const { return h1_.empty() ? 0 : h1_.size() - 1; }

  // Fingerprint of [pos, pos+len).
  Fp sub(std::size_t pos, std::size_t len) const {
    using namespace hashing;
    Fp f;
    f.a = h1_[pos + len] + kMod1 - mulmod(h1_[pos], power1(len), kMod1);
    if (f.a >= kMod1) f.a -= kMod1;
    f.b = h2_[pos + len] + kMod2 - mulmod(h2_[pos], power2(len), kMod2);
    if (f.b >= kMod2) f.b -= kMod2;
    return f;
  }

  // Fingerprint of the concatenation left . right, |right| = right_len.
  static Fp concat(Fp left, Fp right, std::size_t right_len) {
    using namespace hashing;
    Fp f;
    f.a = mulmod(left.a, power1(right_len), kMod1) + right.a;
    if (f.a >= kMod1) f.a -= kMod1;
    f.b = mulmod(left.b, power2(right_len), kMod2) + right.b;
    if (f.b >= kMod2) f.b -= kMod2;
    return f;
  }

 private:
  std::vector<std::uint64_t> h1_, h2_;
};

// Incremental variant for the backtracking search: letters are appended and
// removed at the end, substring fingerprints stay O(1).
class IncrementalHashes {
 public:
  IncrementalHashes();
  void push(unsigned char letter);
  void pop();
  std::size_t size() const { return h1_.size() - 1; }

  Fp sub(std::size_t pos, std::size_t len) const {
    using namespace hashing;
    Fp f;
    f.a = h1_[pos + len] + kMod1 - mulmod(h1_[pos], power1(len), kMod1);
    if (f.a >= kMod1) f.a -= kMod1;
    f.b = h2_[pos + len] + kMod2 - mulmod(h2_[pos], power2(len), kMod2);
    if (f.b >= kMod2) f.b -= kMod2;
    return f;
  }

  // Fingerprint of [pos, size()) extended by one extra letter.
  Fp sub_with_appended(std::size_t pos, unsigned char letter) const;

 private:
  std::vector<std::uint64_t> h1_, h2_;
};

}  // namespace halfflip
