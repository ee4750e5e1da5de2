// qck: command-line front end for quasi-crystal components and congruences.
//
// Exit codes: 0 yes/ok, 1 no/violations, 2 input error, 3 vertex cap hit.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qck/cache.hpp"
#include "qck/congruence.hpp"
#include "qck/errors.hpp"
#include "qck/transform.hpp"

namespace {

using namespace qck;

struct RunConfig {
  std::string base;
  std::string mode = "tensor";
  int max_len = 3;
  std::string cache_dir;
  std::string output = "text";
  std::size_t vertex_cap = kDefaultVertexCap;
  std::string word;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

int parse_rank(const std::string& text) {
  try {
    std::size_t used = 0;
    int n = std::stoi(text, &used);
    if (used != text.size()) throw UsageError("bad rank '" + text + "'");
    return n;
  } catch (const std::logic_error&) {
    throw UsageError("bad rank '" + text + "'");
  }
}

// "A:n", "C:n" or "file:path". Files are validated unless `checked` is off.
QuasiCrystal resolve_base(const std::string& text, bool checked) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("base must be A:n, C:n or file:path");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "A") return standard_crystal_A(parse_rank(rest));
  if (kind == "C") return standard_crystal_C(parse_rank(rest));
  if (kind == "file") {
    if (checked) return load_quasi_crystal_file(rest);
    return QuasiCrystal::from_json(read_json_file(rest));
  }
  throw UsageError("unknown base kind '" + kind + "'");
}

std::optional<std::filesystem::path> cache_root(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
  if (const char* env = std::getenv("QCK_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

void check_config(const RunConfig& cfg) {
  if (cfg.max_len < 0) throw DomainError("max-len must be non-negative");
  if (cfg.vertex_cap < 1) throw DomainError("vertex-cap must be at least 1");
}

Word parse_arg_word(const QuasiCrystal& base, const std::string& text) {
  try {
    return parse_word(base, text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

std::string stats_text(const std::vector<ExtendedInt>& values) {
  std::string s = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ",";
    s += values[k].to_string();
  }
  return s + ")";
}

std::string graph_text(const QuasiCrystal& base, const ComponentGraph& g) {
  std::ostringstream os;
  os << "component of " << display_word(base, g.root) << " in " << g.base_id
     << " (" << mode_name(g.mode) << ")\n";
  os << "vertices " << g.vertices.size() << "\n";
  for (const auto& v : g.vertices)
    os << "  " << display_word(base, v.word) << "  wt=" << v.wt.to_string()
       << " eps=" << stats_text(v.eps) << " phi=" << stats_text(v.phi) << "\n";
  os << "edges " << g.edges.size() << "\n";
  for (const auto& e : g.edges)
    os << "  " << display_word(base, e.from) << " -" << e.label << "-> "
       << display_word(base, e.to) << "\n";
  os << "loops " << g.loops.size() << "\n";
  for (const auto& l : g.loops)
    os << "  " << display_word(base, l.vertex) << " -" << l.label << "-> "
       << display_word(base, l.vertex) << "\n";
  return os.str();
}

void emit_graph(const RunConfig& cfg, const QuasiCrystal& base, const ComponentGraph& g) {
  if (cfg.output == "dot")
    std::cout << export_dot(g);
  else if (cfg.output == "json")
    std::cout << export_json(g);
  else
    std::cout << graph_text(base, g);
}

ComponentGraph cached_component(const RunConfig& cfg, const QuasiCrystal& base,
                                ProductMode mode, const Word& w) {
  const auto dir = cache_root(cfg);
  if (!dir) return component(mode, base, w, cfg.vertex_cap);
  ComponentCache cache(*dir / "components");
  const std::string key = base_identity(base);
  if (auto hit = cache.lookup(key, mode, w)) return *hit;
  ComponentGraph g = component(mode, base, w, cfg.vertex_cap);
  cache.store(key, g);
  return g;
}

std::optional<DecisionCache> decision_cache(const RunConfig& cfg) {
  const auto dir = cache_root(cfg);
  if (!dir) return std::nullopt;
  std::filesystem::create_directories(*dir);
  return DecisionCache(*dir / "decisions.json");
}

int cmd_validate(const RunConfig& cfg) {
  const QuasiCrystal q = resolve_base(cfg.base, false);
  const ValidationReport report = validate_seminormal(q);
  if (cfg.output == "json") {
    std::cout << report.to_json(q).dump(2) << "\n";
  } else if (report.ok()) {
    std::cout << "valid: " << q.label() << " satisfies all axioms\n";
  } else {
    for (const auto& v : report.violations)
      std::cout << "violation: element " << q.name(v.element) << ", index " << v.index
                << ", condition " << v.condition << ": " << v.message << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_component(const RunConfig& cfg) {
  const QuasiCrystal base = resolve_base(cfg.base, true);
  const Word w = parse_arg_word(base, cfg.word);
  emit_graph(cfg, base, cached_component(cfg, base, parse_mode(cfg.mode), w));
  return 0;
}

int cmd_transform(const RunConfig& cfg) {
  const QuasiCrystal base = resolve_base(cfg.base, true);
  const Word w = parse_arg_word(base, cfg.word);
  const ComponentGraph g = cached_component(cfg, base, ProductMode::Tensor, w);
  emit_graph(cfg, base, transform_graph(g, base));
  return 0;
}

int cmd_decide(const RunConfig& cfg, const std::string& u_text, const std::string& v_text) {
  const QuasiCrystal base = resolve_base(cfg.base, true);
  const ProductMode mode = parse_mode(cfg.mode);
  const Word u = parse_arg_word(base, u_text);
  const Word v = parse_arg_word(base, v_text);
  auto cache = decision_cache(cfg);
  CongruenceOptions opts{cfg.vertex_cap, cache ? &*cache : nullptr};
  const bool eq = equivalent(mode, base, u, v, opts);
  if (cache) cache->save();
  if (cfg.output == "json") {
    nlohmann::json j = {{"u", format_word(base, u)},
                        {"v", format_word(base, v)},
                        {"mode", mode_name(mode)},
                        {"equivalent", eq}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
  }
  return eq ? 0 : 1;
}

int cmd_enumerate(const RunConfig& cfg) {
  const QuasiCrystal base = resolve_base(cfg.base, true);
  CongruenceOptions opts{cfg.vertex_cap, nullptr};
  const auto classes = enumerate_classes(base, parse_mode(cfg.mode),
                                         static_cast<std::size_t>(cfg.max_len), opts);
  if (cfg.output == "json")
    std::cout << classes_to_json(base, classes).dump(2) << "\n";
  else
    std::cout << format_class_listing(base, classes);
  return 0;
}

int cmd_quotient(const RunConfig& cfg) {
  const QuasiCrystal base = resolve_base(cfg.base, true);
  auto cache = decision_cache(cfg);
  CongruenceOptions opts{cfg.vertex_cap, cache ? &*cache : nullptr};
  const QuotientResult r =
      verify_quotient_inclusion(base, static_cast<std::size_t>(cfg.max_len), opts);
  if (cache) cache->save();
  if (cfg.output == "json") {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [u, v] : r.counterexamples)
      pairs.push_back({format_word(base, u), format_word(base, v)});
    nlohmann::json j = {{"holds", r.holds},
                        {"pairs_checked", r.pairs_checked},
                        {"counterexamples", pairs}};
    std::cout << j.dump(2) << "\n";
  } else if (r.holds) {
    std::cout << "HOLDS\n";
  } else {
    for (const auto& [u, v] : r.counterexamples)
      std::cout << "counterexample \"" << format_word(base, u) << "\" \""
                << format_word(base, v) << "\"\n";
  }
  return r.holds ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_mode, bool with_len) {
  sub->add_option("--base", cfg.base, "A:n, C:n or file:path")->required();
  if (with_mode)
    sub->add_option("--mode", cfg.mode, "tensor or qtensor")
        ->check(CLI::IsMember({"tensor", "qtensor"}));
  if (with_len) sub->add_option("--max-len", cfg.max_len, "maximum word length");
  sub->add_option("--cache-dir", cfg.cache_dir, "component cache directory");
  sub->add_option("--output", cfg.output, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_option("--vertex-cap", cfg.vertex_cap, "maximum component size");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-crystal components, plactic and hypoplactic congruences"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string u_text, v_text;

  auto* validate = app.add_subcommand("validate", "check the seminormal axioms");
  add_common(validate, cfg, false, false);

  auto* comp = app.add_subcommand("component", "build the component of a word");
  add_common(comp, cfg, true, false);
  comp->add_option("--word", cfg.word, "word, e.g. \"1 2 -2\"")->required();

  auto* decide = app.add_subcommand("decide", "decide whether two words are equivalent");
  add_common(decide, cfg, true, false);
  decide->add_option("u", u_text)->required();
  decide->add_option("v", v_text)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list congruence classes");
  add_common(enumerate, cfg, true, true);

  auto* transform = app.add_subcommand("transform", "derive the quasi-tensor component graph");
  add_common(transform, cfg, false, false);
  transform->add_option("--word", cfg.word, "word")->required();

  auto* quotient = app.add_subcommand("quotient", "check plactic pairs are hypoplactic");
  add_common(quotient, cfg, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    check_config(cfg);
    if (validate->parsed()) return cmd_validate(cfg);
    if (comp->parsed()) return cmd_component(cfg);
    if (decide->parsed()) return cmd_decide(cfg, u_text, v_text);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (transform->parsed()) return cmd_transform(cfg);
    if (quotient->parsed()) return cmd_quotient(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
