#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qck/cache.hpp"
#include "qck/graphs.hpp"

namespace qck {

struct CongruenceOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
  DecisionCache* cache = nullptr;  // optional memo of pair decisions
};

/// One class of ≈ (tensor) or ∼̈ (quasi-tensor), truncated to the explored
/// length bound: longer members may exist.
struct CongruenceClass {
  Word representative;        // shortlex-least member
  std::vector<Word> members;  // shortlex order
  ProductMode mode;
};

bool equivalent(ProductMode mode, const QuasiCrystal& base, const Word& u,
                const Word& v, const CongruenceOptions& opts = {});
/// u ≈ v: an isomorphism of ⊗-components maps u to v.
bool plactic_equiv(const QuasiCrystal& base, const Word& u, const Word& v,
                   const CongruenceOptions& opts = {});
/// u ∼̈ v: an isomorphism of ⊗̇-components maps u to v.
bool hypo_equiv(const QuasiCrystal& base, const Word& u, const Word& v,
                const CongruenceOptions& opts = {});

/// Partitions all words of length <= max_len into classes. Components are
/// built once per length; components with equal size and fingerprint
/// multiset are matched by rooted isomorphism and every matched vertex pair
/// is merged in a union-find.
std::vector<CongruenceClass> enumerate_classes(const QuasiCrystal& base,
                                               ProductMode mode,
                                               std::size_t max_len,
                                               const CongruenceOptions& opts = {});

/// `rep<TAB>member1,member2,...` per class.
std::string format_class_listing(const QuasiCrystal& base,
                                 const std::vector<CongruenceClass>& classes);
nlohmann::json classes_to_json(const QuasiCrystal& base,
                               const std::vector<CongruenceClass>& classes);

struct CongruenceViolation {
  Word u;
  Word v;
  Word left;
  Word right;
};

struct CongruenceReport {
  std::size_t pairs_checked = 0;
  std::vector<CongruenceViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every equivalent pair u, v of length <= max_len and all contexts x, y
/// of length <= context_len, checks that xuy and xvy are equivalent.
CongruenceReport verify_congruence_property(const QuasiCrystal& base,
                                            ProductMode mode,
                                            std::size_t max_len,
                                            std::size_t context_len,
                                            const CongruenceOptions& opts = {});

/// Exact rank test on the set of distinct element weights.
bool weights_linearly_independent(const QuasiCrystal& base);

struct QuotientResult {
  bool holds = true;
  std::size_t pairs_checked = 0;
  /// (member, class representative) pairs with u ≈ v but not u ∼̈ v, in
  /// class order.
  std::vector<std::pair<Word, Word>> counterexamples;
};

/// Checks ≈ ⊆ ∼̈ on all words of length <= max_len.
QuotientResult verify_quotient_inclusion(const QuasiCrystal& base,
                                         std::size_t max_len,
                                         const CongruenceOptions& opts = {});

struct PermutationViolation {
  Word u;
  Word v;
  int index;
};

struct PermutationReport {
  std::size_t pairs_checked = 0;
  std::vector<PermutationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For u ≈ v with v a rearrangement of the letters of u, a blocking letter
/// pair exists in u iff one exists in v, for every index.
PermutationReport check_permutation_lemma(const QuasiCrystal& base,
                                          std::size_t max_len,
                                          const CongruenceOptions& opts = {});

}  // namespace qck
