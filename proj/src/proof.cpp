#include "halfflip/proof.hpp"

#include <algorithm>

#include "halfflip/builtins.hpp"

namespace halfflip {

namespace {

nlohmann::ordered_json json_int_set(const std::set<int>& s) {
  auto arr = nlohmann::ordered_json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

nlohmann::ordered_json json_pair_set(
    const std::set<std::pair<int, int>>& pairs) {
  auto arr = nlohmann::ordered_json::array();
  for (auto [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

int lcp_len(const std::string& a, const std::string& b) {
  std::size_t n = 0;
  const std::size_t m = std::min(a.size(), b.size());
  while (n < m && a[n] == b[n]) ++n;
  return static_cast<int>(n);
}

int lcs_len(const std::string& a, const std::string& b) {
  std::size_t n = 0;
  const std::size_t m = std::min(a.size(), b.size());
  while (n < m && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
  return static_cast<int>(n);
}

}  // namespace

bool SuccessorStructure::consecutive(int a, int b) const {
  if (a == b) return false;
  const int d = ((a - b) % modulus + modulus) % modulus;
  for (int d1 : allowed_diffs)
    for (int d2 : allowed_diffs)
      if (d1 != d2 && ((d1 - d2) % modulus + modulus) % modulus == d)
        return true;
  return false;
}

SuccessorStructure base_successor_structure() {
  return SuccessorStructure{5, {1, 2}};
}

DistinctnessBuild build_distinctness_table(
    const UniformMorphism& f, int alpha, int beta,
    std::set<std::pair<int, int>> prefix_exceptions,
    std::set<std::pair<int, int>> suffix_exceptions) {
  if (alpha < 1 || beta < 1 || alpha > f.q || beta > f.q)
    throw ValidationError("alpha and beta must lie in [1, q]");
  const int s = f.domain_size;
  DistinctnessBuild out;
  out.lcp.assign(s, std::vector<int>(s, f.q));
  out.lcs.assign(s, std::vector<int>(s, f.q));
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      out.lcp[a][b] = out.lcp[b][a] =
          lcp_len(f.images[a].letters, f.images[b].letters);
      out.lcs[a][b] = out.lcs[b][a] =
          lcs_len(f.images[a].letters, f.images[b].letters);
    }
  }
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      const bool pexc = prefix_exceptions.count({a, b}) > 0;
      if (!pexc && out.lcp[a][b] >= alpha)
        out.violations.push_back({false, a, b, out.lcp[a][b], true});
      if (pexc && out.lcp[a][b] < alpha)
        out.violations.push_back({false, a, b, out.lcp[a][b], false});
      const bool sexc = suffix_exceptions.count({a, b}) > 0;
      if (!sexc && out.lcs[a][b] >= beta)
        out.violations.push_back({true, a, b, out.lcs[a][b], true});
      if (sexc && out.lcs[a][b] < beta)
        out.violations.push_back({true, a, b, out.lcs[a][b], false});
    }
  }
  if (out.violations.empty()) {
    out.table = DistinctnessTable{f,      alpha,
                                  beta,   out.lcp,
                                  out.lcs, std::move(prefix_exceptions),
                                  std::move(suffix_exceptions)};
  }
  return out;
}

CheckOutcome check_synchronization(const FixedPointSpec& spec,
                                   const UniformMorphism* f,
                                   const Word& marker,
                                   const std::set<int>& allowed_residues,
                                   const FactorLimits& limits) {
  CheckOutcome out;
  out.name = "synchronization";
  const OffsetProfile profile = offset_profile(spec, f, marker.size(), limits);
  out.details["marker"] = format_word(marker);
  out.details["modulus"] = profile.modulus;
  out.details["allowed_residues"] = json_int_set(allowed_residues);
  auto it = profile.entries.find(marker);
  if (it == profile.entries.end()) {
    out.passed = false;
    out.details["reason"] = "marker-never-occurs";
    return out;
  }
  out.details["residues"] = json_int_set(it->second);
  out.passed = std::includes(allowed_residues.begin(), allowed_residues.end(),
                             it->second.begin(), it->second.end());
  if (!out.passed) out.details["reason"] = "unexpected-residues";
  return out;
}

CheckOutcome check_marker_coverage(const FixedPointSpec& spec,
                                   const UniformMorphism& f,
                                   const Word& marker, std::size_t L,
                                   const FactorLimits& limits) {
  if (L < marker.size())
    throw ValidationError("factor length below marker length");
  CheckOutcome out;
  out.name = "marker-coverage";
  const FactorSet set = image_factor_set(spec, f, L, limits);
  out.details["marker"] = format_word(marker);
  out.details["length"] = L;
  out.details["factors"] = set.factors.size();
  std::size_t misses = 0;
  std::string first_miss;
  for (const Word& w : set.factors) {
    if (w.letters.find(marker.letters) == std::string::npos) {
      if (misses == 0) first_miss = format_word(w);
      ++misses;
    }
  }
  out.passed = misses == 0;
  if (!out.passed) {
    out.details["factors_without_marker"] = misses;
    out.details["first_missing"] = first_miss;
  }
  return out;
}

CheckOutcome check_successor_property(const FixedPointSpec& spec,
                                      const std::set<int>& allowed_diffs,
                                      int modulus) {
  CheckOutcome out;
  out.name = "successor-property";
  const FactorSet pairs = two_letter_factors(spec);
  out.details["modulus"] = modulus;
  out.details["allowed_differences"] = json_int_set(allowed_diffs);
  auto offenders = nlohmann::ordered_json::array();
  auto observed = nlohmann::ordered_json::array();
  for (const Word& ab : pairs.factors) {
    const int a = ab.at(0), b = ab.at(1);
    const int d = ((b - a) % modulus + modulus) % modulus;
    observed.push_back(format_word(ab));
    if (!allowed_diffs.count(d)) offenders.push_back(format_word(ab));
  }
  out.details["two_letter_factors"] = observed;
  out.passed = offenders.empty();
  if (!out.passed) out.details["offending_pairs"] = offenders;

  // Derived corollary: letters that may follow (or precede) a common word
  // must be consecutive under the difference structure.
  SuccessorStructure succ{modulus, allowed_diffs};
  auto consec = nlohmann::ordered_json::array();
  for (int a = 0; a < modulus; ++a)
    for (int b = a + 1; b < modulus; ++b)
      if (succ.consecutive(a, b)) consec.push_back({a, b});
  out.details["consecutive_pairs"] = consec;
  return out;
}

CheckOutcome check_exception_pairs_nonconsecutive(
    const DistinctnessTable& table, const SuccessorStructure& succ) {
  CheckOutcome out;
  out.name = "exception-pairs-nonconsecutive";
  auto offenders = nlohmann::ordered_json::array();
  auto examined = nlohmann::ordered_json::array();
  for (const auto* exceptions : {&table.prefix_exceptions,
                                 &table.suffix_exceptions}) {
    for (auto [a, b] : *exceptions) {
      examined.push_back({a, b});
      if (succ.consecutive(a, b)) offenders.push_back({a, b});
    }
  }
  out.details["exception_pairs"] = examined;
  out.passed = offenders.empty();
  if (!out.passed) out.details["consecutive_exception_pairs"] = offenders;
  return out;
}

CheckOutcome check_alpha_beta_condition(int alpha, int beta, int q) {
  CheckOutcome out;
  out.name = "alpha-beta-condition";
  out.details["alpha"] = alpha;
  out.details["beta"] = beta;
  out.details["q"] = q;
  out.details["sum"] = alpha + beta;
  out.details["bound"] = q + 1;
  out.passed = alpha + beta <= q + 1;
  return out;
}

CheckOutcome check_offset_classes_singleton(const FixedPointSpec& spec,
                                            const UniformMorphism& f,
                                            std::size_t L,
                                            const FactorLimits& limits) {
  CheckOutcome out;
  out.name = "offset-classes-singleton";
  const OffsetProfile profile = offset_profile(spec, &f, L, limits);
  out.details["length"] = L;
  out.details["modulus"] = profile.modulus;
  out.details["factors"] = profile.entries.size();
  auto offenders = nlohmann::ordered_json::array();
  for (const auto& [factor, residues] : profile.entries) {
    if (residues.size() != 1) {
      nlohmann::ordered_json item;
      item["factor"] = format_word(factor);
      item["residues"] = json_int_set(residues);
      offenders.push_back(item);
    }
  }
  out.passed = offenders.empty();
  if (!out.passed) out.details["multi_residue_factors"] = offenders;
  return out;
}

// ---------------------------------------------------------------------
// Witness descent
// ---------------------------------------------------------------------

std::string_view descent_error_name(DescentError e) {
  switch (e) {
    case DescentError::none: return "none";
    case DescentError::period_not_multiple: return "period-not-multiple";
    case DescentError::misaligned_occurrences:
      return "misaligned-occurrences";
    case DescentError::alpha_beta_violated: return "alpha-beta-violated";
    case DescentError::witness_malformed: return "witness-malformed";
    case DescentError::not_image_material: return "not-image-material";
    case DescentError::ambiguous_extension: return "ambiguous-extension";
    case DescentError::oracle_rejected: return "oracle-rejected";
    case DescentError::inconsistent_content: return "inconsistent-content";
  }
  return "unknown";
}

namespace {

// Letters whose image the predicate accepts, then the common candidate
// disambiguation: a single candidate wins outright; several candidates must
// be pairwise non-consecutive (otherwise the premise is broken) and are
// settled by the oracle.
LetterResolution resolve_common(const UniformMorphism& f,
                                const SuccessorStructure& succ,
                                const std::function<bool(int)>& matches,
                                const std::function<Word(int)>& extended,
                                const BaseFactorOracle& oracle) {
  std::vector<int> candidates;
  for (int a = 0; a < f.domain_size; ++a)
    if (matches(a)) candidates.push_back(a);
  if (candidates.empty())
    return {std::nullopt, DescentError::not_image_material,
            "no image matches the witness material"};
  if (candidates.size() == 1)
    return {static_cast<Letter>(candidates[0]), DescentError::none, ""};
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (succ.consecutive(candidates[i], candidates[j]))
        return {std::nullopt, DescentError::ambiguous_extension,
                "letters " + std::to_string(candidates[i]) + " and " +
                    std::to_string(candidates[j]) +
                    " are consecutive; extension cannot be settled"};
  std::vector<int> accepted;
  for (int a : candidates)
    if (oracle(extended(a))) accepted.push_back(a);
  if (accepted.size() == 1)
    return {static_cast<Letter>(accepted[0]), DescentError::none, ""};
  if (accepted.empty())
    return {std::nullopt, DescentError::oracle_rejected,
            "no candidate extension is a base factor"};
  return {std::nullopt, DescentError::ambiguous_extension,
          "several candidate extensions are base factors"};
}

}  // namespace

LetterResolution resolve_forward_letter(const UniformMorphism& f,
                                        const SuccessorStructure& succ,
                                        std::string_view image_prefix,
                                        const Word& context,
                                        const BaseFactorOracle& oracle) {
  return resolve_common(
      f, succ,
      [&](int a) {
        return f.images[a].letters.compare(0, image_prefix.size(),
                                           image_prefix) == 0;
      },
      [&](int a) {
        Word w = context;
        w.alphabet_size = f.domain_size;
        w.letters.push_back(static_cast<char>(a));
        return w;
      },
      oracle);
}

LetterResolution resolve_backward_letter(const UniformMorphism& f,
                                         const SuccessorStructure& succ,
                                         std::string_view image_suffix,
                                         const Word& context,
                                         const BaseFactorOracle& oracle) {
  return resolve_common(
      f, succ,
      [&](int a) {
        const std::string& img = f.images[a].letters;
        return img.size() >= image_suffix.size() &&
               img.compare(img.size() - image_suffix.size(),
                           image_suffix.size(), image_suffix) == 0;
      },
      [&](int a) {
        Word w;
        w.alphabet_size = f.domain_size;
        w.letters.reserve(context.size() + 1);
        w.letters.push_back(static_cast<char>(a));
        w.letters.append(context.letters);
        return w;
      },
      oracle);
}

namespace {

// Exact preimage of a concatenation of full images; nullopt when some
// q-block matches no image (or two images coincide, which validate allows
// but descent cannot use).
std::optional<Word> exact_preimage(const UniformMorphism& f,
                                   std::string_view material) {
  Word out;
  out.alphabet_size = f.domain_size;
  for (std::size_t pos = 0; pos < material.size();
       pos += static_cast<std::size_t>(f.q)) {
    const std::string_view block =
        material.substr(pos, static_cast<std::size_t>(f.q));
    int found = -1;
    for (int a = 0; a < f.domain_size; ++a) {
      if (f.images[a].letters == block) {
        if (found >= 0) return std::nullopt;
        found = a;
      }
    }
    if (found < 0) return std::nullopt;
    out.letters.push_back(static_cast<char>(found));
  }
  return out;
}

}  // namespace

DescentOutcome descend_witness(const UniformMorphism& f,
                               const DistinctnessTable& table,
                               const SuccessorStructure& succ,
                               const BaseFactorOracle& oracle,
                               const HalfFlipWitness& image_witness,
                               const AlignmentInfo& align) {
  const std::size_t q = static_cast<std::size_t>(f.q);
  const std::size_t p = image_witness.period;
  if (align.q != f.q)
    return {std::nullopt, DescentError::witness_malformed,
            "alignment modulus differs from morphism q"};
  if (image_witness.uv.size() != 2 * p)
    return {std::nullopt, DescentError::witness_malformed,
            "witness uv length is not twice the period"};
  if (p % q != 0)
    return {std::nullopt, DescentError::period_not_multiple,
            "period " + std::to_string(p) + " is not a multiple of " +
                std::to_string(q)};
  if (align.x_u != align.x_v ||
      image_witness.pos_uv % q != static_cast<std::size_t>(align.x_u) ||
      image_witness.pos_vu % q != static_cast<std::size_t>(align.x_v))
    return {std::nullopt, DescentError::misaligned_occurrences,
            "occurrences of u and v do not share a residue mod q"};
  if (table.alpha + table.beta > f.q + 1)
    return {std::nullopt, DescentError::alpha_beta_violated,
            "alpha + beta exceeds q + 1"};

  const std::string& uv = image_witness.uv.letters;
  const std::size_t x = static_cast<std::size_t>(align.x_u);
  const std::size_t base_period = p / q;

  if (x == 0) {
    // Both halves are aligned images; descend by exact preimage.
    auto base_u = exact_preimage(f, std::string_view(uv).substr(0, p));
    auto base_v = exact_preimage(f, std::string_view(uv).substr(p, p));
    if (!base_u || !base_v)
      return {std::nullopt, DescentError::not_image_material,
              "witness halves are not concatenations of images"};
    Word base_uv = *base_u;
    base_uv.letters += base_v->letters;
    Word base_vu = *base_v;
    base_vu.letters += base_u->letters;
    if (!oracle(base_uv) || !oracle(base_vu))
      return {std::nullopt, DescentError::oracle_rejected,
              "preimage pair rejected by the base factor oracle"};
    return {HalfFlipWitness{base_period, base_uv, image_witness.pos_uv / q,
                            image_witness.pos_vu / q},
            DescentError::none, ""};
  }

  // u = u' f(U) u'' and v = v' f(V) v'' with |u''| = |v''| = x. The full
  // image between the U and V blocks is visible inside uv; the one between
  // V and U is visible inside vu = swap(uv).
  const std::string_view whole(uv);
  const auto u_prime = whole.substr(0, q - x);
  const auto fU = whole.substr(q - x, p - q);
  const auto mid_uv = whole.substr(p - x, q);  // u'' v'
  const auto u_second = whole.substr(p - x, x);
  const auto v_prime = whole.substr(p, q - x);
  const auto fV = whole.substr(p + q - x, p - q);
  const auto v_second = whole.substr(2 * p - x, x);
  const std::string mid_vu =
      std::string(v_second) + std::string(u_prime);  // v'' u'

  auto base_U = exact_preimage(f, fU);
  auto base_V = exact_preimage(f, fV);
  if (!base_U || !base_V)
    return {std::nullopt, DescentError::not_image_material,
            "interior blocks are not concatenations of images"};

  const bool forward = x >= static_cast<std::size_t>(table.alpha);
  LetterResolution mu, nu;
  if (forward) {
    mu = resolve_forward_letter(f, succ, u_second, *base_U, oracle);
    nu = resolve_forward_letter(f, succ, v_second, *base_V, oracle);
  } else {
    mu = resolve_backward_letter(f, succ, u_prime, *base_U, oracle);
    nu = resolve_backward_letter(f, succ, v_prime, *base_V, oracle);
  }
  if (!mu.letter) return {std::nullopt, mu.error, "u side: " + mu.message};
  if (!nu.letter) return {std::nullopt, nu.error, "v side: " + nu.message};

  // The resolved letters must reproduce the full images the witness shows.
  if (forward) {
    if (f.images[*mu.letter].letters != mid_uv ||
        f.images[*nu.letter].letters != mid_vu)
      return {std::nullopt, DescentError::inconsistent_content,
              "resolved extension letters contradict the witness interior"};
  } else {
    if (f.images[*nu.letter].letters != mid_uv ||
        f.images[*mu.letter].letters != mid_vu)
      return {std::nullopt, DescentError::inconsistent_content,
              "resolved extension letters contradict the witness interior"};
  }

  Word base_uv, base_vu;
  base_uv.alphabet_size = f.domain_size;
  base_vu.alphabet_size = f.domain_size;
  std::size_t base_pos_uv, base_pos_vu;
  if (forward) {
    // (U mu)(V nu) at the U block; (V nu)(U mu) at the V block of vu.
    base_uv.letters = base_U->letters + char(*mu.letter) + base_V->letters +
                      char(*nu.letter);
    base_vu.letters = base_V->letters + char(*nu.letter) + base_U->letters +
                      char(*mu.letter);
    base_pos_uv = (image_witness.pos_uv + q - x) / q;
    base_pos_vu = (image_witness.pos_vu + q - x) / q;
  } else {
    // (mu U)(nu V) starting one letter before the U block.
    base_uv.letters = std::string(1, char(*mu.letter)) + base_U->letters +
                      char(*nu.letter) + base_V->letters;
    base_vu.letters = std::string(1, char(*nu.letter)) + base_V->letters +
                      char(*mu.letter) + base_U->letters;
    base_pos_uv = (image_witness.pos_uv - x) / q;
    base_pos_vu = (image_witness.pos_vu - x) / q;
  }
  if (!oracle(base_uv) || !oracle(base_vu))
    return {std::nullopt, DescentError::oracle_rejected,
            "produced base pair rejected by the base factor oracle"};
  return {HalfFlipWitness{base_period, base_uv, base_pos_uv, base_pos_vu},
          DescentError::none, ""};
}

// ---------------------------------------------------------------------
// Theorem pipelines
// ---------------------------------------------------------------------

std::optional<TheoremVariant> parse_variant(std::string_view s) {
  if (s == "1.1") return TheoremVariant::T11;
  if (s == "1.2") return TheoremVariant::T12;
  if (s == "1.3") return TheoremVariant::T13;
  return std::nullopt;
}

std::string_view variant_name(TheoremVariant v) {
  switch (v) {
    case TheoremVariant::T11: return "1.1";
    case TheoremVariant::T12: return "1.2";
    case TheoremVariant::T13: return "1.3";
  }
  return "?";
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["variant"] = variant;
  j["period_bound"] = period_bound;
  auto arr = nlohmann::ordered_json::array();
  for (const CheckOutcome& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["details"] = c.details;
    arr.push_back(item);
  }
  j["checks"] = arr;
  j["overall"] = overall;
  return j;
}

namespace {

CheckOutcome named(std::string name, CheckOutcome out) {
  out.name = std::move(name);
  return out;
}

CheckOutcome morphism_valid_check(std::string name,
                                  const UniformMorphism& f, int expect_q) {
  CheckOutcome out;
  out.name = std::move(name);
  out.details["domain_size"] = f.domain_size;
  out.details["codomain_size"] = f.codomain_size;
  out.details["q"] = f.q;
  out.passed = f.q == expect_q;
  if (!out.passed) out.details["expected_q"] = expect_q;
  return out;
}

CheckOutcome distinctness_check(std::string name, const UniformMorphism& f,
                                int alpha, int beta,
                                std::set<std::pair<int, int>> pexc,
                                std::set<std::pair<int, int>> sexc,
                                std::optional<DistinctnessTable>* table_out) {
  CheckOutcome out;
  out.name = std::move(name);
  DistinctnessBuild build =
      build_distinctness_table(f, alpha, beta, pexc, sexc);
  out.details["alpha"] = alpha;
  out.details["beta"] = beta;
  out.details["prefix_exceptions"] = json_pair_set(pexc);
  out.details["suffix_exceptions"] = json_pair_set(sexc);
  out.passed = build.table.has_value();
  if (!out.passed) {
    auto arr = nlohmann::ordered_json::array();
    for (const DistinctnessViolation& v : build.violations) {
      nlohmann::ordered_json item;
      item["side"] = v.suffix_side ? "suffix" : "prefix";
      item["pair"] = {v.a, v.b};
      item[v.suffix_side ? "lcs" : "lcp"] = v.value;
      item["kind"] = v.excess ? "non-exception-pair-reaches-bound"
                              : "exception-pair-below-bound";
      arr.push_back(item);
    }
    out.details["violations"] = arr;
  }
  if (table_out && build.table) *table_out = std::move(build.table);
  return out;
}

CheckOutcome avoidance_check(std::string name, const FixedPointSpec& spec,
                             const UniformMorphism* f, std::size_t k,
                             std::size_t P, const FactorLimits& limits) {
  CheckOutcome out;
  out.name = std::move(name);
  out.details["min_period"] = k;
  out.details["max_period"] = P;
  if (P < k) {
    out.passed = true;
    out.details["note"] = "empty period range, vacuously avoided";
    return out;
  }
  DetectOptions opt;
  opt.min_period = k;
  opt.max_period = P;
  const auto hit = infinite_halfflip_check(spec, f, opt, limits);
  out.passed = !hit.has_value();
  if (hit) {
    out.details["period"] = hit->period;
    out.details["uv"] = format_word(hit->uv);
  } else {
    out.details["result"] = "absent";
  }
  return out;
}

}  // namespace

CheckReport verify_theorem(TheoremVariant v, std::size_t period_bound,
                           const FactorLimits& limits) {
  const FixedPointSpec& spec = base_fixed_point();
  const SuccessorStructure succ = base_successor_structure();
  CheckReport report;
  report.variant = variant_name(v);
  report.period_bound = period_bound;

  report.checks.push_back(morphism_valid_check("m-valid", builtin_m(), 95));
  report.checks.push_back(named(
      "c-synchronization",
      check_synchronization(spec, nullptr, sync_marker_c(), {0}, limits)));
  report.checks.push_back(
      check_successor_property(spec, succ.allowed_diffs, succ.modulus));

  std::optional<DistinctnessTable> m_table;
  report.checks.push_back(distinctness_check("m-distinctness-68-20",
                                             builtin_m(), 68, 20, {{0, 3}},
                                             {{1, 4}}, &m_table));
  if (m_table) {
    report.checks.push_back(named(
        "m-exception-pairs-nonconsecutive",
        check_exception_pairs_nonconsecutive(*m_table, succ)));
  }
  report.checks.push_back(
      named("m-alpha-beta-condition", check_alpha_beta_condition(68, 20, 95)));
  report.checks.push_back(avoidance_check("m-halfflip-avoidance", spec,
                                          nullptr, 1, period_bound, limits));

  if (v == TheoremVariant::T12) {
    const UniformMorphism& f3 = builtin_f3();
    report.checks.push_back(morphism_valid_check("f3-valid", f3, 7));
    report.checks.push_back(distinctness_check("f3-distinctness-4-4", f3, 4,
                                               4, {}, {}, nullptr));
    std::optional<DistinctnessTable> f3_table;
    CheckOutcome repaired = distinctness_check(
        "f3-distinctness-4-4-suffix-exception-1-4", f3, 4, 4, {}, {{1, 4}},
        &f3_table);
    repaired.details["note"] =
        "images of 1 and 4 share the length-5 suffix 02122; the shared "
        "suffix is handled as an exception pair like (1,4) for the base "
        "morphism";
    report.checks.push_back(std::move(repaired));
    if (f3_table) {
      report.checks.push_back(named(
          "f3-exception-pairs-nonconsecutive",
          check_exception_pairs_nonconsecutive(*f3_table, succ)));
    }
    report.checks.push_back(named("f3-alpha-beta-condition",
                                  check_alpha_beta_condition(4, 4, 7)));
    const Word marker = parse_word("20", 3);
    report.checks.push_back(named(
        "f3-marker-coverage-20-at-8",
        check_marker_coverage(spec, f3, marker, 8, limits)));
    report.checks.push_back(named(
        "f3-marker-synchronization-20",
        check_synchronization(spec, &f3, marker, {6}, limits)));
    report.checks.push_back(avoidance_check("f3-halfflip-avoidance", spec,
                                            &f3, 2, period_bound, limits));
  } else if (v == TheoremVariant::T13) {
    const UniformMorphism& f2 = builtin_f2();
    report.checks.push_back(morphism_valid_check("f2-valid", f2, 7));
    report.checks.push_back(distinctness_check("f2-distinctness-4-4", f2, 4,
                                               4, {}, {}, nullptr));
    report.checks.push_back(named("f2-alpha-beta-condition",
                                  check_alpha_beta_condition(4, 4, 7)));
    report.checks.push_back(named(
        "f2-offset-classes-singleton-6",
        check_offset_classes_singleton(spec, f2, 6, limits)));
    CheckOutcome repaired = named(
        "f2-offset-classes-singleton-9",
        check_offset_classes_singleton(spec, f2, 9, limits));
    repaired.details["note"] =
        "length 9 is the least factor length at which every factor has a "
        "single offset class; length 6 admits five period-3 factors with "
        "two classes each";
    report.checks.push_back(std::move(repaired));
    report.checks.push_back(avoidance_check("f2-halfflip-avoidance", spec,
                                            &f2, 4, period_bound, limits));
  }

  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckOutcome& c) { return c.passed; });
  return report;
}

}  // namespace halfflip
