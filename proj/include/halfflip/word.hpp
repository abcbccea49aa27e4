#pragma once

// Words over small integer alphabets, uniform morphisms, and fixed points.
//
// A Word stores one letter per byte as a raw value (NOT an ASCII digit);
// textual I/O uses the digit characters '0'..'9'. All alphabets in this
// toolkit are tiny (at most 8 letters for searches, 5 for the builtin
// morphisms), but anything up to 255 letters is representable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace halfflip {

using Letter = std::uint8_t;

struct Word {
  std::string letters;  // raw letter values, one per byte
  int alphabet_size = 0;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter at(std::size_t i) const { return static_cast<Letter>(letters[i]); }
  std::string_view view() const { return letters; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters <=> b.letters;
  }
};

// Thrown when input data violates a type invariant (bad letter, ragged
// image list, non-prolongable seed, ...).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Word make_word(std::string_view raw_letters, int alphabet_size);

// Textual I/O: digit characters only, alphabets up to 10 letters.
Word parse_word(std::string_view digits, int alphabet_size);
std::string format_word(const Word& w);

struct UniformMorphism {
  int domain_size = 0;
  int codomain_size = 0;
  int q = 0;                  // uniform image length
  std::vector<Word> images;   // exactly domain_size entries, each of length q
};

// Checks every invariant and returns the validated morphism.
UniformMorphism validate_morphism(int domain_size, int codomain_size,
                                  std::vector<Word> images);

// Morphism definition files: {"domain_size":…, "codomain_size":…, "q":…,
// "images":["0241…", …]} with digit-string images.
UniformMorphism morphism_from_json(const nlohmann::json& j);
nlohmann::ordered_json morphism_to_json(const UniformMorphism& f);
UniformMorphism load_morphism_file(const std::string& path);

Word apply_morphism(const UniformMorphism& f, const Word& w);

struct FixedPointSpec {
  UniformMorphism morphism;
  Letter seed = 0;
};

// Requires domain == codomain and image(seed) starting with seed, so the
// fixed point m^inf(seed) exists.
FixedPointSpec make_fixed_point_spec(UniformMorphism m, Letter seed);

// Exactly the first n letters of the fixed point.
Word fixed_point_prefix(const FixedPointSpec& spec, std::size_t n);

// First n letters of f applied to the fixed point of spec.
Word image_prefix(const FixedPointSpec& spec, const UniformMorphism& f,
                  std::size_t n);

}  // namespace halfflip
