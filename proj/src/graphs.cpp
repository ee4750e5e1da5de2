#include "qck/graphs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qck {

namespace {

bool edge_less(const GraphEdge& a, const GraphEdge& b) {
  if (a.from != b.from) return shortlex_less(a.from, b.from);
  if (a.label != b.label) return a.label < b.label;
  return shortlex_less(a.to, b.to);
}

bool loop_less(const GraphLoop& a, const GraphLoop& b) {
  if (a.vertex != b.vertex) return shortlex_less(a.vertex, b.vertex);
  return a.label < b.label;
}

}  // namespace

const VertexInfo* ComponentGraph::find(const Word& w) const {
  auto it = std::lower_bound(
      vertices.begin(), vertices.end(), w,
      [](const VertexInfo& v, const Word& x) { return shortlex_less(v.word, x); });
  if (it == vertices.end() || it->word != w) return nullptr;
  return &*it;
}

void ComponentGraph::normalize() {
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexInfo& a, const VertexInfo& b) {
              return shortlex_less(a.word, b.word);
            });
  std::sort(edges.begin(), edges.end(), edge_less);
  std::sort(loops.begin(), loops.end(), loop_less);
}

std::string ComponentGraph::word_text(const Word& w) const {
  if (w.empty()) return "ε";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += alphabet.at(w[k]);
  }
  return s;
}

ComponentGraph component(ProductMode mode, const QuasiCrystal& base,
                         const Word& w, std::size_t vertex_cap) {
  check_letters(base, w);
  ComponentGraph g;
  g.mode = mode;
  g.base_id = base.label();
  g.alphabet = base.data().names;
  g.indices = base.index_set();
  g.root = w;

  std::map<Word, bool, ShortlexLess> seen;
  std::deque<Word> queue{w};
  seen.emplace(w, true);
  while (!queue.empty()) {
    Word x = std::move(queue.front());
    queue.pop_front();
    VertexInfo info{x, word_weight(base, x), {}, {}};
    for (int i : g.indices) {
      const WordStats s = word_stats(mode, base, i, x);
      info.eps.push_back(s.eps);
      info.phi.push_back(s.phi);
      if (s.eps.is_infinite()) {
        g.loops.push_back({x, i});
        continue;
      }
      for (auto* op : {&word_f, &word_e}) {
        MaybeWord y = (*op)(mode, base, i, x);
        if (!y) continue;
        if (op == &word_f) g.edges.push_back({x, *y, i});
        if (seen.emplace(*y, true).second) {
          if (seen.size() > vertex_cap)
            throw CapExceeded("component of " + display_word(base, w) +
                              " exceeds " + std::to_string(vertex_cap) +
                              " vertices");
          queue.push_back(std::move(*y));
        }
      }
    }
    g.vertices.push_back(std::move(info));
  }
  g.normalize();
  return g;
}

std::optional<WordMap> find_isomorphism(ProductMode mode,
                                        const QuasiCrystal& base, const Word& u,
                                        const Word& v, std::size_t vertex_cap) {
  check_letters(base, u);
  check_letters(base, v);
  WordMap forward, backward;
  std::deque<std::pair<Word, Word>> queue;
  forward.emplace(u, v);
  backward.emplace(v, u);
  queue.emplace_back(u, v);
  const auto& indices = base.index_set();
  while (!queue.empty()) {
    auto [x, y] = std::move(queue.front());
    queue.pop_front();
    if (word_weight(base, x) != word_weight(base, y)) return std::nullopt;
    for (int i : indices) {
      if (word_stats(mode, base, i, x) != word_stats(mode, base, i, y))
        return std::nullopt;
      for (auto* op : {&word_f, &word_e}) {
        MaybeWord x2 = (*op)(mode, base, i, x);
        MaybeWord y2 = (*op)(mode, base, i, y);
        if (x2.has_value() != y2.has_value()) return std::nullopt;
        if (!x2) continue;
        auto fx = forward.find(*x2);
        auto by = backward.find(*y2);
        if (fx != forward.end() || by != backward.end()) {
          if (fx == forward.end() || by == backward.end() ||
              fx->second != *y2 || by->second != *x2)
            return std::nullopt;
          continue;
        }
        if (forward.size() >= vertex_cap)
          throw CapExceeded("isomorphism search exceeds " +
                            std::to_string(vertex_cap) + " vertices");
        forward.emplace(*x2, *y2);
        backward.emplace(*y2, *x2);
        queue.emplace_back(std::move(*x2), std::move(*y2));
      }
    }
  }
  return forward;
}

bool iso_from(ProductMode mode, const QuasiCrystal& base, const Word& u,
              const Word& v, std::size_t vertex_cap) {
  return find_isomorphism(mode, base, u, v, vertex_cap).has_value();
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

// Two-line node label; "\n" stays a DOT escape.
std::string label_text(const std::string& id, const Weight& wt) {
  std::string q = quoted(id);
  q.pop_back();
  return q + "\\nwt=" + wt.to_string() + "\"";
}

}  // namespace

std::string export_dot(const ComponentGraph& g) {
  std::ostringstream os;
  os << "digraph component {\n";
  os << "  // base " << g.base_id << ", mode " << mode_name(g.mode)
     << ", root " << quoted(g.word_text(g.root)) << "\n";
  for (const auto& v : g.vertices) {
    const std::string id = g.word_text(v.word);
    os << "  " << quoted(id) << " [label=" << label_text(id, v.wt)
       << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  " << quoted(g.word_text(e.from)) << " -> " << quoted(g.word_text(e.to))
       << " [label=\"" << e.label << "\"];\n";
  for (const auto& l : g.loops)
    os << "  " << quoted(g.word_text(l.vertex)) << " -> "
       << quoted(g.word_text(l.vertex)) << " [label=\"" << l.label << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::json stat_json(ExtendedInt v) {
  if (v.is_infinite()) return "+inf";
  return v.value();
}

ExtendedInt stat_value(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "+inf") throw ParseError("bad statistic");
    return ExtendedInt::infinity();
  }
  return j.get<std::int64_t>();
}

std::string word_json(const ComponentGraph& g, const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += g.alphabet.at(w[k]);
  }
  return s;
}

Word word_from_json(const ComponentGraph& g, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto it = std::find(g.alphabet.begin(), g.alphabet.end(), tok);
    if (it == g.alphabet.end()) throw ParseError("unknown letter '" + tok + "'");
    w.push_back(static_cast<ElementId>(it - g.alphabet.begin()));
  }
  return w;
}

}  // namespace

nlohmann::json component_to_json(const ComponentGraph& g) {
  nlohmann::json j;
  j["mode"] = mode_name(g.mode);
  j["base"] = g.base_id;
  j["alphabet"] = g.alphabet;
  j["indices"] = g.indices;
  j["root"] = word_json(g, g.root);
  j["vertex_count"] = g.vertices.size();
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) {
    nlohmann::json eps = nlohmann::json::array(), phi = nlohmann::json::array();
    for (std::size_t p = 0; p < g.indices.size(); ++p) {
      eps.push_back(stat_json(v.eps[p]));
      phi.push_back(stat_json(v.phi[p]));
    }
    j["vertices"].push_back({{"word", word_json(g, v.word)},
                             {"wt", v.wt.coords()},
                             {"eps", eps},
                             {"phi", phi}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", word_json(g, e.from)},
                          {"to", word_json(g, e.to)},
                          {"label", e.label}});
  j["loops"] = nlohmann::json::array();
  for (const auto& l : g.loops)
    j["loops"].push_back({{"vertex", word_json(g, l.vertex)}, {"label", l.label}});
  return j;
}

ComponentGraph component_from_json(const nlohmann::json& j) {
  try {
    ComponentGraph g;
    g.mode = parse_mode(j.at("mode").get<std::string>());
    g.base_id = j.at("base").get<std::string>();
    g.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    g.indices = j.at("indices").get<std::vector<int>>();
    g.root = word_from_json(g, j.at("root").get<std::string>());
    for (const auto& v : j.at("vertices")) {
      VertexInfo info{word_from_json(g, v.at("word").get<std::string>()),
                      Weight(v.at("wt").get<std::vector<std::int64_t>>()),
                      {},
                      {}};
      for (const auto& x : v.at("eps")) info.eps.push_back(stat_value(x));
      for (const auto& x : v.at("phi")) info.phi.push_back(stat_value(x));
      if (info.eps.size() != g.indices.size() || info.phi.size() != g.indices.size())
        throw ParseError("vertex statistics do not match the index set");
      g.vertices.push_back(std::move(info));
    }
    for (const auto& e : j.at("edges"))
      g.edges.push_back({word_from_json(g, e.at("from").get<std::string>()),
                         word_from_json(g, e.at("to").get<std::string>()),
                         e.at("label").get<int>()});
    for (const auto& l : j.at("loops"))
      g.loops.push_back({word_from_json(g, l.at("vertex").get<std::string>()),
                         l.at("label").get<int>()});
    g.normalize();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("component graph: ") + e.what());
  }
}

std::string export_json(const ComponentGraph& g) {
  return component_to_json(g).dump(2) + "\n";
}

ComponentGraph import_json(const std::string& text) {
  try {
    return component_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("component graph: ") + e.what());
  }
}

}  // namespace qck
