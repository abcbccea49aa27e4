#include "halfflip/builtins.hpp"

namespace halfflip {

namespace {

constexpr const char* kConstantC =
    "024130124023013024134124023413024134124023013024";

// Per-letter image tails (the 47 letters following c).
constexpr const char* kTailM0 = "1301240230130240230"
                                "1240241341240230130240230124";
constexpr const char* kTailM1 = "0230124024130124023013024023"
                                "4124024134124023013";
constexpr const char* kTailM2 = "02341240241301240234130241301240230130240230124";
constexpr const char* kTailM3 = "1301240230130240230"
                                "1240241341240230130240234124";
constexpr const char* kTailM4 = "0234124024130124023013024023"
                                "4124024134124023013";

UniformMorphism make_m() {
  const std::string c(kConstantC);
  if (c.size() != 48)
    throw std::logic_error("builtin constant c must have 48 letters");
  std::vector<Word> images;
  for (const char* tail : {kTailM0, kTailM1, kTailM2, kTailM3, kTailM4})
    images.push_back(parse_word(c + tail, 5));
  UniformMorphism m = validate_morphism(5, 5, std::move(images));
  if (m.q != 95) throw std::logic_error("builtin m must be 95-uniform");
  return m;
}

UniformMorphism make_f3() {
  std::vector<Word> images = {
      parse_word("0001022", 3), parse_word("0102122", 3),
      parse_word("0211122", 3), parse_word("0210112", 3),
      parse_word("0002122", 3),
  };
  UniformMorphism f = validate_morphism(5, 3, std::move(images));
  if (f.q != 7) throw std::logic_error("builtin f3 must be 7-uniform");
  return f;
}

UniformMorphism make_f2() {
  std::vector<Word> images = {
      parse_word("0000001", 2), parse_word("0101001", 2),
      parse_word("0010011", 2), parse_word("0001111", 2),
      parse_word("1011011", 2),
  };
  UniformMorphism f = validate_morphism(5, 2, std::move(images));
  if (f.q != 7) throw std::logic_error("builtin f2 must be 7-uniform");
  return f;
}

}  // namespace

const UniformMorphism& builtin_m() {
  static const UniformMorphism m = make_m();
  return m;
}

const UniformMorphism& builtin_f3() {
  static const UniformMorphism f = make_f3();
  return f;
}

const UniformMorphism& builtin_f2() {
  static const UniformMorphism f = make_f2();
  return f;
}

const Word& sync_marker_c() {
  static const Word c = parse_word(kConstantC, 5);
  return c;
}

const FixedPointSpec& base_fixed_point() {
  static const FixedPointSpec spec = make_fixed_point_spec(builtin_m(), 0);
  return spec;
}

const UniformMorphism* builtin_by_name(std::string_view name) {
  if (name == "m") return &builtin_m();
  if (name == "f3") return &builtin_f3();
  if (name == "f2") return &builtin_f2();
  return nullptr;
}

}  // namespace halfflip
