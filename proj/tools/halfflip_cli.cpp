// halfflip: generate, inspect, and verify half-flip avoidance.
//
// Subcommands
//   generate   write a prefix of a fixed point or of its morphic image
//   detect     run the half-flip detector on a word file
//   factors    export exact factor sets / offset profiles
//   verify     run a theorem pipeline and emit its check report
//   backtrack  exhaustive search for the longest k-half-flip-free word
//
// Exit codes: 0 success, 1 verification failure (failed check or witness
// found), 2 usage error, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfflip/builtins.hpp"
#include "halfflip/detect.hpp"
#include "halfflip/factors.hpp"
#include "halfflip/proof.hpp"
#include "halfflip/search.hpp"
#include "halfflip/word.hpp"

namespace {

using namespace halfflip;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct OutputSink {
  std::string path;  // empty: stdout
  std::string format = "json";

  void write(const nlohmann::ordered_json& body,
             const std::string& text_summary) const {
    const std::string payload =
        format == "json" ? body.dump(2) + "\n" : text_summary;
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output file: " + path);
      out << payload;
    }
  }
};

UniformMorphism resolve_morphism(const std::string& name_or_path) {
  if (const UniformMorphism* builtin = builtin_by_name(name_or_path))
    return *builtin;
  return load_morphism_file(name_or_path);
}

FixedPointSpec resolve_spec(const std::string& base, int seed) {
  return make_fixed_point_spec(resolve_morphism(base),
                               static_cast<Letter>(seed));
}

std::vector<Word> read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open word file: " + path);
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int alphabet = 1;
    for (char ch : line)
      if (ch >= '0' && ch <= '9') alphabet = std::max(alphabet, ch - '0' + 1);
    words.push_back(parse_word(line, alphabet));
  }
  return words;
}

int run_generate(const std::string& base, int seed, std::size_t length,
                 const std::string& image, const OutputSink& sink) {
  const FixedPointSpec spec = resolve_spec(base, seed);
  Word w;
  if (image.empty()) {
    w = fixed_point_prefix(spec, length);
  } else {
    w = image_prefix(spec, resolve_morphism(image), length);
  }
  const std::string digits = format_word(w);
  nlohmann::ordered_json body;
  body["morphism"] = base;
  if (!image.empty()) body["image"] = image;
  body["length"] = w.size();
  body["word"] = digits;
  sink.write(body, digits + "\n");
  return kExitOk;
}

int run_detect(const std::string& path, std::size_t min_period,
               std::size_t max_period, bool distinct_halves,
               const std::string& engine, const OutputSink& sink) {
  const std::vector<Word> words = read_word_file(path);
  if (words.empty()) throw ValidationError("word file holds no words");
  DetectOptions opt{min_period, max_period, distinct_halves};
  auto results = nlohmann::ordered_json::array();
  std::ostringstream text;
  bool any_witness = false;
  for (std::size_t idx = 0; idx < words.size(); ++idx) {
    const auto witness = engine == "brute"
                             ? find_half_flip_brute(words[idx], opt)
                             : find_half_flip_fast(words[idx], opt);
    nlohmann::ordered_json item;
    item["word_index"] = idx;
    item["length"] = words[idx].size();
    if (witness) {
      any_witness = true;
      item["halfflip"] = witness->to_json();
      text << "word " << idx << ": half-flip of period " << witness->period
           << " (uv at " << witness->pos_uv << ", vu at " << witness->pos_vu
           << ")\n";
    } else {
      item["halfflip"] = nullptr;
      text << "word " << idx << ": absent\n";
    }
    results.push_back(item);
  }
  nlohmann::ordered_json body;
  body["min_period"] = min_period;
  body["max_period"] = max_period;
  body["distinct_halves"] = distinct_halves;
  body["results"] = results;
  sink.write(body, text.str());
  return any_witness ? kExitVerificationFailure : kExitOk;
}

int run_factors(const std::string& base, int seed, std::size_t length,
                const std::string& image, bool profile,
                std::size_t max_window, const OutputSink& sink) {
  const FixedPointSpec spec = resolve_spec(base, seed);
  FactorLimits limits;
  limits.max_window_letters = max_window;
  std::optional<UniformMorphism> f;
  if (!image.empty()) f = resolve_morphism(image);

  if (profile) {
    const OffsetProfile prof =
        offset_profile(spec, f ? &*f : nullptr, length, limits);
    nlohmann::ordered_json body;
    body["modulus"] = prof.modulus;
    body["length"] = length;
    auto entries = nlohmann::ordered_json::array();
    std::ostringstream text;
    for (const auto& [factor, residues] : prof.entries) {
      nlohmann::ordered_json item;
      item["factor"] = format_word(factor);
      auto arr = nlohmann::ordered_json::array();
      text << format_word(factor) << ":";
      for (int r : residues) {
        arr.push_back(r);
        text << ' ' << r;
      }
      text << '\n';
      item["residues"] = arr;
      entries.push_back(item);
    }
    body["entries"] = entries;
    sink.write(body, text.str());
    return kExitOk;
  }

  const FactorSet set = f ? image_factor_set(spec, *f, length, limits)
                          : factor_set_exact(spec, length, limits);
  const std::string lines = export_factor_lines(set);
  nlohmann::ordered_json body;
  body["length"] = set.length;
  body["exact"] = set.exact;
  body["count"] = set.factors.size();
  auto arr = nlohmann::ordered_json::array();
  for (const Word& w : set.factors) arr.push_back(format_word(w));
  body["factors"] = arr;
  sink.write(body, lines);
  return kExitOk;
}

int run_verify(const std::string& theorem, std::size_t max_period,
               std::size_t max_window, const OutputSink& sink) {
  const auto variant = parse_variant(theorem);
  if (!variant) throw CLI::ValidationError("--theorem must be 1.1, 1.2 or 1.3");
  FactorLimits limits;
  limits.max_window_letters = max_window;
  const CheckReport report = verify_theorem(*variant, max_period, limits);
  std::ostringstream text;
  text << "theorem " << report.variant << ", periods up to "
       << report.period_bound << "\n";
  for (const CheckOutcome& c : report.checks)
    text << (c.passed ? "  pass  " : "  FAIL  ") << c.name << "\n";
  text << (report.overall ? "overall: pass\n" : "overall: FAIL\n");
  sink.write(report.to_json(), text.str());
  return report.overall ? kExitOk : kExitVerificationFailure;
}

int run_backtrack(int alphabet, std::size_t min_period, bool distinct_halves,
                  const SearchLimits& limits, const OutputSink& sink) {
  const SearchResult result =
      backtrack_longest(alphabet, min_period, distinct_halves, limits);
  std::ostringstream text;
  text << "s=" << result.alphabet_size << " k=" << result.min_period
       << (result.distinct_halves ? " (distinct halves)" : "")
       << ": max length " << result.max_length << ", "
       << result.nodes_explored << " nodes, "
       << (result.exhaustive ? "exhaustive" : "cap hit") << "\n"
       << "extremal: " << format_word(result.extremal_word) << "\n";
  sink.write(result.to_json(), text.str());
  if (result.exhaustive) return kExitOk;
  return kExitResourceCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"half-flip avoidance toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  OutputSink sink;
  app.add_option("--out", sink.path, "output file (default: stdout)");
  app.add_option("--format", sink.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string base = "m";
  int seed = 0;
  std::string image;
  std::size_t length = 0;
  std::size_t min_period = 1;
  std::size_t max_period = 500;
  bool distinct_halves = false;
  std::size_t max_window = FactorLimits{}.max_window_letters;
  std::string word_file;
  std::string engine = "fast";
  bool profile = false;
  std::string theorem;
  int alphabet = 0;
  SearchLimits search_limits;
  if (const char* env = std::getenv("HALFFLIP_MAX_NODES"))
    search_limits.max_nodes = std::strtoull(env, nullptr, 10);

  CLI::App* generate = app.add_subcommand("generate", "write a word prefix");
  generate->add_option("--morphism", base, "builtin name or JSON file")
      ->capture_default_str();
  generate->add_option("--seed", seed, "seed letter")->capture_default_str();
  generate->add_option("--image", image,
                       "apply this morphism to the fixed point");
  generate->add_option("--length", length, "prefix length")->required();

  CLI::App* detect = app.add_subcommand("detect", "detect half-flips");
  detect->add_option("--file", word_file, "word file, one word per line")
      ->required();
  detect->add_option("--min-period", min_period, "least period")
      ->capture_default_str();
  detect->add_option("--max-period", max_period, "greatest period")
      ->capture_default_str();
  detect->add_flag("--distinct-halves", distinct_halves,
                   "require uv != vu (squares no longer count)");
  detect->add_option("--engine", engine, "fast | brute")
      ->check(CLI::IsMember({"fast", "brute"}))
      ->capture_default_str();

  CLI::App* factors = app.add_subcommand("factors", "export factor sets");
  factors->add_option("--morphism", base, "builtin name or JSON file")
      ->capture_default_str();
  factors->add_option("--seed", seed, "seed letter")->capture_default_str();
  factors->add_option("--image", image, "second morphism (f3, f2, or file)");
  factors->add_option("--length", length, "factor length")->required();
  factors->add_flag("--profile", profile,
                    "emit the occurrence-offset profile instead");
  factors->add_option("--max-window", max_window,
                      "window material cap in letters")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run a theorem pipeline");
  verify->add_option("--theorem", theorem, "1.1 | 1.2 | 1.3")->required();
  verify->add_option("--max-period", max_period, "avoidance period bound")
      ->capture_default_str();
  verify->add_option("--max-window", max_window,
                     "window material cap in letters")
      ->capture_default_str();

  CLI::App* backtrack =
      app.add_subcommand("backtrack", "longest k-half-flip-free word");
  backtrack->add_option("--alphabet", alphabet, "alphabet size")->required();
  backtrack->add_option("--min-period", min_period, "least forbidden period")
      ->capture_default_str();
  backtrack->add_flag("--distinct-halves", distinct_halves,
                      "strict reading: uv != vu required");
  backtrack->add_option("--max-nodes", search_limits.max_nodes,
                        "node cap (env HALFFLIP_MAX_NODES overrides default)")
      ->capture_default_str();
  backtrack->add_option("--max-length", search_limits.max_length,
                        "length cap")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed())
      return run_generate(base, seed, length, image, sink);
    if (detect->parsed()) {
      if (min_period < 1 || max_period < min_period)
        throw ValidationError("need max-period >= min-period >= 1");
      return run_detect(word_file, min_period, max_period, distinct_halves,
                        engine, sink);
    }
    if (factors->parsed())
      return run_factors(base, seed, length, image, profile, max_window, sink);
    if (verify->parsed())
      return run_verify(theorem, max_period, max_window, sink);
    if (backtrack->parsed())
      return run_backtrack(alphabet, min_period, distinct_halves,
                           search_limits, sink);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
