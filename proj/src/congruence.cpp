#include "qck/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "qck/transform.hpp"

namespace qck {

bool equivalent(ProductMode mode, const QuasiCrystal& base, const Word& u,
                const Word& v, const CongruenceOptions& opts) {
  if (!opts.cache) return iso_from(mode, base, u, v, opts.vertex_cap);
  const std::string id = base_identity(base);
  if (auto hit = opts.cache->lookup(id, mode, u, v)) return *hit;
  const bool result = iso_from(mode, base, u, v, opts.vertex_cap);
  opts.cache->store(id, mode, u, v, result);
  return result;
}

bool plactic_equiv(const QuasiCrystal& base, const Word& u, const Word& v,
                   const CongruenceOptions& opts) {
  return equivalent(ProductMode::Tensor, base, u, v, opts);
}

bool hypo_equiv(const QuasiCrystal& base, const Word& u, const Word& v,
                const CongruenceOptions& opts) {
  return equivalent(ProductMode::QuasiTensor, base, u, v, opts);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

using Fingerprint = std::tuple<Weight, std::vector<ExtendedInt>, std::vector<ExtendedInt>>;

Fingerprint fingerprint(const VertexInfo& v) { return {v.wt, v.eps, v.phi}; }

using ComponentKey = std::pair<std::size_t, std::vector<Fingerprint>>;

ComponentKey component_key(const ComponentGraph& g) {
  std::vector<Fingerprint> fps;
  for (const auto& v : g.vertices) fps.push_back(fingerprint(v));
  std::sort(fps.begin(), fps.end());
  return {g.vertices.size(), std::move(fps)};
}

}  // namespace

std::vector<CongruenceClass> enumerate_classes(const QuasiCrystal& base,
                                               ProductMode mode,
                                               std::size_t max_len,
                                               const CongruenceOptions& opts) {
  const std::vector<Word> words = words_up_to(base, max_len);
  std::map<Word, std::size_t, ShortlexLess> slot;
  for (std::size_t k = 0; k < words.size(); ++k) slot.emplace(words[k], k);
  UnionFind uf(words.size());

  // Components never mix lengths, so every vertex reached has a slot.
  std::vector<ComponentGraph> comps;
  std::vector<bool> covered(words.size(), false);
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (covered[k]) continue;
    comps.push_back(component(mode, base, words[k], opts.vertex_cap));
    for (const auto& v : comps.back().vertices) covered[slot.at(v.word)] = true;
  }

  auto merge_along = [&](const WordMap& psi) {
    for (const auto& [a, b] : psi) uf.unite(slot.at(a), slot.at(b));
  };
  auto try_match = [&](const ComponentGraph& from, const ComponentGraph& to,
                       bool skip_identity) {
    const VertexInfo& root = from.vertices.front();
    const Fingerprint target = fingerprint(root);
    bool matched = false;
    for (const auto& cand : to.vertices) {
      if (skip_identity && cand.word == root.word) continue;
      if (fingerprint(cand) != target) continue;
      if (auto psi = find_isomorphism(mode, base, root.word, cand.word,
                                      opts.vertex_cap)) {
        merge_along(*psi);
        matched = true;
        if (!skip_identity) break;
      }
    }
    return matched;
  };

  std::map<ComponentKey, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < comps.size(); ++c)
    groups[component_key(comps[c])].push_back(c);
  for (const auto& [key, members] : groups) {
    std::vector<std::size_t> reps;
    for (std::size_t c : members) {
      bool matched = false;
      for (std::size_t r : reps) {
        if (try_match(comps[r], comps[c], false)) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        // Non-trivial automorphisms relate distinct vertices of one component.
        try_match(comps[c], comps[c], true);
        reps.push_back(c);
      }
    }
  }

  std::map<std::size_t, std::vector<Word>> buckets;
  for (std::size_t k = 0; k < words.size(); ++k)
    buckets[uf.find(k)].push_back(words[k]);
  std::vector<CongruenceClass> classes;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end(), ShortlexLess{});
    classes.push_back({members.front(), std::move(members), mode});
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return shortlex_less(a.representative, b.representative);
  });
  return classes;
}

std::string format_class_listing(const QuasiCrystal& base,
                                 const std::vector<CongruenceClass>& classes) {
  std::string out;
  for (const auto& c : classes) {
    out += display_word(base, c.representative);
    out += '\t';
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      if (k) out += ',';
      out += display_word(base, c.members[k]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json classes_to_json(const QuasiCrystal& base,
                               const std::vector<CongruenceClass>& classes) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : c.members) members.push_back(format_word(base, m));
    j.push_back({{"representative", format_word(base, c.representative)},
                 {"members", members},
                 {"mode", mode_name(c.mode)}});
  }
  return j;
}

namespace {

Word concat3(const Word& x, const Word& u, const Word& y) {
  Word w = x;
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), y.begin(), y.end());
  return w;
}

}  // namespace

CongruenceReport verify_congruence_property(const QuasiCrystal& base,
                                            ProductMode mode,
                                            std::size_t max_len,
                                            std::size_t context_len,
                                            const CongruenceOptions& opts) {
  CongruenceReport report;
  const auto classes = enumerate_classes(base, mode, max_len, opts);
  const auto contexts = words_up_to(base, context_len);
  for (const auto& c : classes) {
    for (const auto& u : c.members) {
      if (u == c.representative) continue;
      for (const auto& x : contexts) {
        for (const auto& y : contexts) {
          Word left = concat3(x, u, y);
          Word right = concat3(x, c.representative, y);
          ++report.pairs_checked;
          if (!equivalent(mode, base, left, right, opts))
            report.violations.push_back(
                {u, c.representative, std::move(left), std::move(right)});
        }
      }
    }
  }
  return report;
}

bool weights_linearly_independent(const QuasiCrystal& base) {
  std::vector<Weight> distinct(base.data().weights);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return exact_rank(distinct) == distinct.size();
}

QuotientResult verify_quotient_inclusion(const QuasiCrystal& base,
                                         std::size_t max_len,
                                         const CongruenceOptions& opts) {
  QuotientResult result;
  for (const auto& c : enumerate_classes(base, ProductMode::Tensor, max_len, opts)) {
    for (const auto& u : c.members) {
      if (u == c.representative) continue;
      ++result.pairs_checked;
      if (!hypo_equiv(base, u, c.representative, opts))
        result.counterexamples.emplace_back(u, c.representative);
    }
  }
  result.holds = result.counterexamples.empty();
  return result;
}

PermutationReport check_permutation_lemma(const QuasiCrystal& base,
                                          std::size_t max_len,
                                          const CongruenceOptions& opts) {
  PermutationReport report;
  for (const auto& c : enumerate_classes(base, ProductMode::Tensor, max_len, opts)) {
    for (std::size_t a = 0; a < c.members.size(); ++a) {
      for (std::size_t b = a + 1; b < c.members.size(); ++b) {
        const Word& u = c.members[a];
        const Word& v = c.members[b];
        Word su = u, sv = v;
        std::sort(su.begin(), su.end());
        std::sort(sv.begin(), sv.end());
        if (su != sv) continue;
        ++report.pairs_checked;
        for (int i : base.index_set()) {
          const bool in_u = find_blocking_decomposition(base, u, i).has_value();
          const bool in_v = find_blocking_decomposition(base, v, i).has_value();
          if (in_u != in_v) report.violations.push_back({u, v, i});
        }
      }
    }
  }
  return report;
}

}  // namespace qck
