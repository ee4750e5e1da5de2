#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qck {

/// A vector of the weight lattice Z^n.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : coords_(n, 0) {}
  explicit Weight(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  /// The unit vector e_k (1-based k) in Z^n.
  static Weight unit(std::size_t n, std::size_t k, std::int64_t scale = 1);

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << w.to_string();
  }

 private:
  std::vector<std::int64_t> coords_;
};

/// Standard Euclidean inner product on Z^n.
std::int64_t inner_product(const Weight& a, const Weight& b);

/// Rank of a family of integer vectors, by fraction-free elimination.
std::size_t exact_rank(const std::vector<Weight>& vectors);

enum class CartanKind { A, C, Generic };

/// Root-system data: the index set I, the simple roots and the coroot
/// pairings λ ↦ ⟨λ, α_i^∨⟩ on Λ = Z^n. Immutable after construction.
class RootSystem {
 public:
  /// Type A_n: I = {1..n-1}, α_i = e_i - e_{i+1}.
  static RootSystem type_A(int n);
  /// Type C_n: I = {1..n}, α_i = e_i - e_{i+1} (i < n), α_n = 2e_n.
  static RootSystem type_C(int n);
  /// Table-driven datum; pairing(λ, i) = pairing_rows[i] · λ.
  static RootSystem generic(int rank, std::vector<int> index_set,
                            std::map<int, Weight> simple_roots,
                            std::map<int, Weight> pairing_rows);

  static RootSystem from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  CartanKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::vector<int>& index_set() const { return indices_; }
  bool has_index(int i) const;
  /// Position of i in the index set; throws IndexError.
  std::size_t position(int i) const;

  const Weight& simple_root(int i) const;
  std::int64_t coroot_pairing(const Weight& lambda, int i) const;
  /// Pairing by index position; no bounds check on pos.
  std::int64_t pairing_at(const Weight& lambda, std::size_t pos) const;

  /// Short identifier, e.g. "A3", "C2", or "G:<rank>:<digest>".
  std::string id() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b);

 private:
  RootSystem() = default;
  void check_independent() const;

  CartanKind kind_ = CartanKind::Generic;
  int rank_ = 0;
  std::vector<int> indices_;
  std::vector<Weight> roots_;  // parallel to indices_
  std::vector<Weight> rows_;   // coroot pairing rows, parallel to indices_
};

/// r_α(v) = v - ⟨v, α^∨⟩ α. For types A and C the Euclidean inner product is
/// used; for a generic datum α must be one of its simple roots.
Weight reflection(const RootSystem& sys, const Weight& alpha, const Weight& v);

}  // namespace qck
