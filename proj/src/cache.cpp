#include "qck/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace qck {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 0xf];
  }
  return out;
}

std::string base_identity(const QuasiCrystal& base) {
  return base.label() + "#" + sha256_hex(base.to_json().dump()).substr(0, 16);
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IOError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IOError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

namespace {

std::string ids(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(w[k]);
  }
  return s;
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

DecisionCache::DecisionCache(std::filesystem::path file) : file_(std::move(file)) {
  auto text = read_file(*file_);
  if (!text) return;
  try {
    entries_ = nlohmann::json::parse(*text).get<std::map<std::string, bool>>();
  } catch (const nlohmann::json::exception&) {
    // Unreadable cache files are treated as empty and overwritten on save.
    entries_.clear();
  }
}

std::string DecisionCache::key(const std::string& base_id, ProductMode mode,
                               const Word& u, const Word& v) {
  const bool ordered = !shortlex_less(v, u);
  return base_id + "|" + mode_name(mode) + "|" + ids(ordered ? u : v) + "|" +
         ids(ordered ? v : u);
}

std::optional<bool> DecisionCache::lookup(const std::string& base_id,
                                          ProductMode mode, const Word& u,
                                          const Word& v) const {
  auto it = entries_.find(key(base_id, mode, u, v));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void DecisionCache::store(const std::string& base_id, ProductMode mode,
                          const Word& u, const Word& v, bool equivalent) {
  entries_[key(base_id, mode, u, v)] = equivalent;
}

void DecisionCache::save() const {
  if (!file_) return;
  atomic_write(*file_, nlohmann::json(entries_).dump() + "\n");
}

ComponentCache::ComponentCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ComponentCache::word_key(const Word& w) { return ids(w); }

std::optional<ComponentGraph> ComponentCache::lookup(const std::string& base_key,
                                                     ProductMode mode,
                                                     const Word& root) const {
  const std::string alias =
      sha256_hex(base_key + "|" + mode_name(mode) + "|root|" + word_key(root));
  auto target = read_file(dir_ / "alias" / alias);
  if (!target) return std::nullopt;
  auto text = read_file(dir_ / (*target + ".json"));
  if (!text) return std::nullopt;
  try {
    ComponentGraph g = import_json(*text);
    if (g.mode != mode || !g.contains(root))
      return std::nullopt;
    g.root = root;
    return g;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void ComponentCache::store(const std::string& base_key, const ComponentGraph& g) const {
  if (g.vertices.empty()) return;
  const Word& least = g.vertices.front().word;
  const std::string key =
      sha256_hex(base_key + "|" + mode_name(g.mode) + "|" + word_key(least));
  ComponentGraph canonical = g;
  canonical.root = least;
  const auto file = dir_ / (key + ".json");
  if (!std::filesystem::exists(file)) atomic_write(file, export_json(canonical));
  const std::string alias =
      sha256_hex(base_key + "|" + mode_name(g.mode) + "|root|" + word_key(g.root));
  atomic_write(dir_ / "alias" / alias, key);
}

}  // namespace qck
