#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qck/graphs.hpp"

namespace qck {

std::string sha256_hex(std::string_view data);

/// Cache key for a base quasi-crystal: its label plus a digest of its
/// full JSON description.
std::string base_identity(const QuasiCrystal& base);

/// Writes to a temporary sibling and renames it over path.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Memo of decided equivalences keyed by (base id, mode, shortlex-ordered
/// pair). With a backing file it is loaded on construction and persisted by
/// save().
class DecisionCache {
 public:
  DecisionCache() = default;
  explicit DecisionCache(std::filesystem::path file);

  std::optional<bool> lookup(const std::string& base_id, ProductMode mode,
                             const Word& u, const Word& v) const;
  void store(const std::string& base_id, ProductMode mode, const Word& u,
             const Word& v, bool equivalent);
  void save() const;

  std::size_t size() const { return entries_.size(); }

 private:
  static std::string key(const std::string& base_id, ProductMode mode,
                         const Word& u, const Word& v);

  std::optional<std::filesystem::path> file_;
  std::map<std::string, bool> entries_;
};

/// One JSON file per component under dir, named by the SHA-256 of
/// (base id, mode, shortlex-least vertex), plus an alias file per queried
/// root that names the component file.
class ComponentCache {
 public:
  explicit ComponentCache(std::filesystem::path dir);

  std::optional<ComponentGraph> lookup(const std::string& base_key,
                                       ProductMode mode, const Word& root) const;
  void store(const std::string& base_key, const ComponentGraph& g) const;

 private:
  static std::string word_key(const Word& w);

  std::filesystem::path dir_;
};

}  // namespace qck
