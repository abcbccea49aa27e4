#include "halfflip/hashing.hpp"

namespace halfflip {
namespace hashing {

namespace {
std::vector<std::uint64_t> g_pow1{1};
std::vector<std::uint64_t> g_pow2{1};
}  // namespace

void ensure_powers(std::size_t n) {
  while (g_pow1.size() <= n) {
    g_pow1.push_back(mulmod(g_pow1.back(), kBase1, kMod1));
    g_pow2.push_back(mulmod(g_pow2.back(), kBase2, kMod2));
  }
}

std::uint64_t power1(std::size_t n) { return g_pow1[n]; }
std::uint64_t power2(std::size_t n) { return g_pow2[n]; }

}  // namespace hashing

PrefixHashes::PrefixHashes(std::string_view s) {
  hashing::ensure_powers(s.size());
  h1_.resize(s.size() + 1);
  h2_.resize(s.size() + 1);
  h1_[0] = h2_[0] = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto letter = static_cast<std::uint64_t>(
                            static_cast<unsigned char>(s[i])) +
                        1;  // +1 so a zero letter contributes
    h1_[i + 1] = hashing::mulmod(h1_[i], hashing::kBase1, hashing::kMod1) +
                 letter;
    if (h1_[i + 1] >= hashing::kMod1) h1_[i + 1] -= hashing::kMod1;
    h2_[i + 1] = hashing::mulmod(h2_[i], hashing::kBase2, hashing::kMod2) +
                 letter;
    if (h2_[i + 1] >= hashing::kMod2) h2_[i + 1] -= hashing::kMod2;
  }
}

IncrementalHashes::IncrementalHashes() : h1_{0}, h2_{0} {}

void IncrementalHashes::push(unsigned char letter) {
  hashing::ensure_powers(h1_.size());
  const std::uint64_t v = static_cast<std::uint64_t>(letter) + 1;
  std::uint64_t a = hashing::mulmod(h1_.back(), hashing::kBase1,
                                    hashing::kMod1) +
                    v;
  if (a >= hashing::kMod1) a -= hashing::kMod1;
  std::uint64_t b = hashing::mulmod(h2_.back(), hashing::kBase2,
                                    hashing::kMod2) +
                    v;
  if (b >= hashing::kMod2) b -= hashing::kMod2;
  h1_.push_back(a);
  h2_.push_back(b);
}

void IncrementalHashes::pop() {
  h1_.pop_back();
  h2_.pop_back();
}

Fp IncrementalHashes::sub_with_appended(std::size_t pos,
                                        unsigned char letter) const {
  Fp base = sub(pos, size() - pos);
  const std::uint64_t v = static_cast<std::uint64_t>(letter) + 1;
  return PrefixHashes::concat(base, Fp{v, v}, 1);
}

}  // namespace halfflip
