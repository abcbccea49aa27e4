#include "halfflip/word.hpp"

#include <fstream>
#include <sstream>

namespace halfflip {

Word make_word(std::string_view raw_letters, int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > 255)
    throw ValidationError("alphabet_size out of range");
  for (unsigned char ch : raw_letters) {
    if (ch >= alphabet_size)
      throw ValidationError("letter " + std::to_string(int(ch)) +
                            " out of range for alphabet of size " +
                            std::to_string(alphabet_size));
  }
  return Word{std::string(raw_letters), alphabet_size};
}

Word parse_word(std::string_view digits, int alphabet_size) {
  std::string raw;
  raw.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw ValidationError(std::string("invalid character '") + ch +
                            "' in word (digits only)");
    raw.push_back(static_cast<char>(ch - '0'));
  }
  return make_word(raw, alphabet_size);
}

std::string format_word(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (unsigned char ch : w.letters) {
    if (ch > 9)
      throw ValidationError("letter value above 9 has no digit form");
    out.push_back(static_cast<char>('0' + ch));
  }
  return out;
}

UniformMorphism validate_morphism(int domain_size, int codomain_size,
                                  std::vector<Word> images) {
  if (domain_size < 1 || codomain_size < 1)
    throw ValidationError("alphabet sizes must be positive");
  if (images.empty()) throw ValidationError("empty image list");
  if (static_cast<int>(images.size()) != domain_size)
    throw ValidationError("expected " + std::to_string(domain_size) +
                          " images, got " + std::to_string(images.size()));
  const std::size_t q = images.front().size();
  if (q == 0) throw ValidationError("images must be non-empty");
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (images[a].size() != q)
      throw ValidationError("non-uniform image lengths: image of " +
                            std::to_string(a) + " has length " +
                            std::to_string(images[a].size()) + ", expected " +
                            std::to_string(q));
    for (unsigned char ch : images[a].letters) {
      if (ch >= codomain_size)
        throw ValidationError("image letter " + std::to_string(int(ch)) +
                              " outside codomain of size " +
                              std::to_string(codomain_size));
    }
    images[a].alphabet_size = codomain_size;
  }
  return UniformMorphism{domain_size, codomain_size, static_cast<int>(q),
                         std::move(images)};
}

UniformMorphism morphism_from_json(const nlohmann::json& j) {
  const int domain = j.at("domain_size").get<int>();
  const int codomain = j.at("codomain_size").get<int>();
  const int q = j.at("q").get<int>();
  std::vector<Word> images;
  for (const auto& s : j.at("images"))
    images.push_back(parse_word(s.get<std::string>(), codomain));
  UniformMorphism f = validate_morphism(domain, codomain, std::move(images));
  if (f.q != q)
    throw ValidationError("declared q=" + std::to_string(q) +
                          " does not match image length " +
                          std::to_string(f.q));
  return f;
}

nlohmann::ordered_json morphism_to_json(const UniformMorphism& f) {
  nlohmann::ordered_json j;
  j["domain_size"] = f.domain_size;
  j["codomain_size"] = f.codomain_size;
  j["q"] = f.q;
  auto images = nlohmann::ordered_json::array();
  for (const Word& w : f.images) images.push_back(format_word(w));
  j["images"] = images;
  return j;
}

UniformMorphism load_morphism_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open morphism file: " + path);
  nlohmann::json j;
  in >> j;
  return morphism_from_json(j);
}

Word apply_morphism(const UniformMorphism& f, const Word& w) {
  if (w.alphabet_size > f.domain_size)
    throw ValidationError("word alphabet exceeds morphism domain");
  Word out;
  out.alphabet_size = f.codomain_size;
  out.letters.reserve(w.size() * static_cast<std::size_t>(f.q));
  for (unsigned char a : w.letters) {
    if (a >= f.domain_size)
      throw ValidationError("letter outside morphism domain");
    out.letters.append(f.images[a].letters);
  }
  return out;
}

FixedPointSpec make_fixed_point_spec(UniformMorphism m, Letter seed) {
  if (m.domain_size != m.codomain_size)
    throw ValidationError("fixed point needs domain_size == codomain_size");
  if (seed >= m.domain_size) throw ValidationError("seed outside alphabet");
  if (m.images[seed].letters.empty() ||
      static_cast<Letter>(m.images[seed].letters[0]) != seed)
    throw ValidationError("image of seed must begin with seed (prolongable)");
  return FixedPointSpec{std::move(m), seed};
}

Word fixed_point_prefix(const FixedPointSpec& spec, std::size_t n) {
  const UniformMorphism& m = spec.morphism;
  Word w;
  w.alphabet_size = m.codomain_size;
  if (n == 0) return w;
  w.letters.push_back(static_cast<char>(spec.seed));
  while (w.size() < n) {
    // Only the prefix needed to produce n letters is expanded.
    const std::size_t keep = n / m.q + 1;
    if (w.size() > keep) w.letters.resize(keep);
    w = apply_morphism(m, w);
  }
  if (w.size() > n) w.letters.resize(n);
  return w;
}

Word image_prefix(const FixedPointSpec& spec, const UniformMorphism& f,
                  std::size_t n) {
  if (n == 0) return Word{std::string(), f.codomain_size};
  const std::size_t base_len = (n + f.q - 1) / f.q;
  Word img = apply_morphism(f, fixed_point_prefix(spec, base_len));
  if (img.size() > n) img.letters.resize(n);
  return img;
}

}  // namespace halfflip
