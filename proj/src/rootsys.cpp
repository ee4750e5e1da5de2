#include "qck/rootsys.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qck/errors.hpp"

namespace qck {

Weight Weight::unit(std::size_t n, std::size_t k, std::int64_t scale) {
  Weight w(n);
  w[k - 1] = scale;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw ShapeError("weight length mismatch");
  for (std::size_t k = 0; k < size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw ShapeError("weight length mismatch");
  for (std::size_t k = 0; k < size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) os << ',';
    os << coords_[k];
  }
  os << ')';
  return os.str();
}

std::int64_t inner_product(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw ShapeError("weight length mismatch");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

__extension__ typedef __int128 Wide;

std::size_t exact_rank(const std::vector<Weight>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<Wide>> m;
  for (const auto& v : vectors) {
    if (v.size() != cols) throw ShapeError("vectors of different lengths");
    m.emplace_back(v.coords().begin(), v.coords().end());
  }
  // Bareiss elimination: every intermediate entry is an exact minor.
  std::size_t rank = 0;
  Wide prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    auto pivot = std::find_if(m.begin() + rank, m.end(),
                              [c](const auto& row) { return row[c] != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

RootSystem RootSystem::type_A(int n) {
  if (n < 2) throw DomainError("type A_n needs n >= 2");
  RootSystem s;
  s.kind_ = CartanKind::A;
  s.rank_ = n;
  for (int i = 1; i < n; ++i) {
    s.indices_.push_back(i);
    s.roots_.push_back(Weight::unit(n, i) - Weight::unit(n, i + 1));
    s.rows_.push_back(s.roots_.back());
  }
  s.check_independent();
  return s;
}

RootSystem RootSystem::type_C(int n) {
  if (n < 2) throw DomainError("type C_n needs n >= 2");
  RootSystem s;
  s.kind_ = CartanKind::C;
  s.rank_ = n;
  for (int i = 1; i < n; ++i) {
    s.indices_.push_back(i);
    s.roots_.push_back(Weight::unit(n, i) - Weight::unit(n, i + 1));
    s.rows_.push_back(s.roots_.back());
  }
  s.indices_.push_back(n);
  s.roots_.push_back(Weight::unit(n, n, 2));
  // α_n^∨ = 2α_n / ⟨α_n, α_n⟩ = e_n
  s.rows_.push_back(Weight::unit(n, n));
  s.check_independent();
  return s;
}

RootSystem RootSystem::generic(int rank, std::vector<int> index_set,
                               std::map<int, Weight> simple_roots,
                               std::map<int, Weight> pairing_rows) {
  if (rank < 1) throw DomainError("rank must be positive");
  if (index_set.empty()) throw DomainError("index set is empty");
  RootSystem s;
  s.kind_ = CartanKind::Generic;
  s.rank_ = rank;
  for (int i : index_set) {
    if (std::count(index_set.begin(), index_set.end(), i) != 1)
      throw DomainError("duplicate index " + std::to_string(i));
    auto root = simple_roots.find(i);
    auto row = pairing_rows.find(i);
    if (root == simple_roots.end() || row == pairing_rows.end())
      throw DomainError("missing simple root or pairing row for index " +
                        std::to_string(i));
    if (root->second.size() != static_cast<std::size_t>(rank) ||
        row->second.size() != static_cast<std::size_t>(rank))
      throw ShapeError("root data for index " + std::to_string(i) +
                       " has wrong length");
    s.indices_.push_back(i);
    s.roots_.push_back(root->second);
    s.rows_.push_back(row->second);
  }
  s.check_independent();
  return s;
}

void RootSystem::check_independent() const {
  if (exact_rank(roots_) != roots_.size())
    throw DomainError("simple roots are linearly dependent");
}

namespace {

Weight weight_from_json(const nlohmann::json& j) {
  return Weight(j.get<std::vector<std::int64_t>>());
}

}  // namespace

RootSystem RootSystem::from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.value("kind", std::string("Generic"));
    const int rank = j.at("rank").get<int>();
    if (kind == "A") return type_A(rank);
    if (kind == "C") return type_C(rank);
    if (kind != "Generic") throw ParseError("unknown root system kind " + kind);
    std::map<int, Weight> roots, rows;
    for (const auto& [k, v] : j.at("simple_roots").items())
      roots.emplace(std::stoi(k), weight_from_json(v));
    for (const auto& [k, v] : j.at("pairing_rows").items())
      rows.emplace(std::stoi(k), weight_from_json(v));
    return generic(rank, j.at("index_set").get<std::vector<int>>(),
                   std::move(roots), std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("root system: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("root system: non-integer index key");
  }
}

nlohmann::json RootSystem::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case CartanKind::A:
      return {{"kind", "A"}, {"rank", rank_}};
    case CartanKind::C:
      return {{"kind", "C"}, {"rank", rank_}};
    case CartanKind::Generic:
      break;
  }
  j["kind"] = "Generic";
  j["rank"] = rank_;
  j["index_set"] = indices_;
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    j["simple_roots"][std::to_string(indices_[p])] = roots_[p].coords();
    j["pairing_rows"][std::to_string(indices_[p])] = rows_[p].coords();
  }
  return j;
}

bool RootSystem::has_index(int i) const {
  return std::find(indices_.begin(), indices_.end(), i) != indices_.end();
}

std::size_t RootSystem::position(int i) const {
  auto it = std::find(indices_.begin(), indices_.end(), i);
  if (it == indices_.end())
    throw IndexError("index " + std::to_string(i) + " not in index set of " +
                     id());
  return static_cast<std::size_t>(it - indices_.begin());
}

const Weight& RootSystem::simple_root(int i) const {
  return roots_[position(i)];
}

std::int64_t RootSystem::coroot_pairing(const Weight& lambda, int i) const {
  const std::size_t p = position(i);
  if (lambda.size() != static_cast<std::size_t>(rank_))
    throw ShapeError("weight of length " + std::to_string(lambda.size()) +
                     " paired in rank " + std::to_string(rank_));
  return pairing_at(lambda, p);
}

std::int64_t RootSystem::pairing_at(const Weight& lambda,
                                    std::size_t pos) const {
  return inner_product(rows_[pos], lambda);
}

std::string RootSystem::id() const {
  switch (kind_) {
    case CartanKind::A:
      return "A" + std::to_string(rank_);
    case CartanKind::C:
      return "C" + std::to_string(rank_);
    case CartanKind::Generic:
      break;
  }
  // FNV-1a over the canonical dump; stable across runs and platforms.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : to_json().dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "G:" + std::to_string(rank_) + ":" + buf;
}

bool operator==(const RootSystem& a, const RootSystem& b) {
  return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.indices_ == b.indices_ &&
         a.roots_ == b.roots_ && a.rows_ == b.rows_;
}

Weight reflection(const RootSystem& sys, const Weight& alpha, const Weight& v) {
  if (alpha.is_zero()) throw DomainError("reflection in the zero vector");
  if (alpha.size() != v.size() ||
      v.size() != static_cast<std::size_t>(sys.rank()))
    throw ShapeError("reflection operands have wrong length");
  if (sys.kind() == CartanKind::Generic) {
    for (int i : sys.index_set()) {
      if (sys.simple_root(i) == alpha)
        return v - sys.coroot_pairing(v, i) * alpha;
    }
    throw DomainError("generic reflection needs a simple root");
  }
  const std::int64_t num = 2 * inner_product(v, alpha);
  const std::int64_t den = inner_product(alpha, alpha);
  if (num % den != 0)
    throw DomainError("⟨v, α^∨⟩ is not an integer for " + v.to_string());
  return v - (num / den) * alpha;
}

}  // namespace qck
