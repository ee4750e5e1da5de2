#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qck/errors.hpp"
#include "qck/extended_int.hpp"
#include "qck/rootsys.hpp"

namespace qck {

/// Dense index of a carrier element.
using ElementId = std::uint32_t;
/// An element or ⊥ (std::nullopt).
using MaybeElement = std::optional<ElementId>;

/// Raw tables of a quasi-crystal. Operator and statistic tables are indexed
/// [position in the index set][element].
struct QuasiCrystalData {
  QuasiCrystalData(RootSystem sys, std::vector<std::string> element_names,
                   std::vector<Weight> element_weights, std::string label_);

  RootSystem system;
  std::vector<std::string> names;
  std::vector<Weight> weights;
  std::vector<std::vector<MaybeElement>> raise;
  std::vector<std::vector<MaybeElement>> lower;
  std::vector<std::vector<ExtendedInt>> eps;
  std::vector<std::vector<ExtendedInt>> phi;
  std::string label;
};

/// A finite quasi-crystal: weight map, partial operators e_i / f_i and
/// statistics ε_i / φ_i for every i in the index set. Construction checks
/// only table shapes; the axioms are checked by validate_seminormal.
class QuasiCrystal {
 public:
  explicit QuasiCrystal(QuasiCrystalData data);

  const RootSystem& system() const { return d_.system; }
  const std::vector<int>& index_set() const { return d_.system.index_set(); }
  std::size_t size() const { return d_.names.size(); }
  const std::string& label() const { return d_.label; }
  const QuasiCrystalData& data() const { return d_; }

  const std::string& name(ElementId x) const { return d_.names.at(x); }
  std::optional<ElementId> find(std::string_view name) const;
  const Weight& weight(ElementId x) const { return d_.weights.at(x); }

  MaybeElement e(int i, ElementId x) const { return raise_at(pos(i), x); }
  MaybeElement f(int i, ElementId x) const { return lower_at(pos(i), x); }
  ExtendedInt eps(int i, ElementId x) const { return eps_at(pos(i), x); }
  ExtendedInt phi(int i, ElementId x) const { return phi_at(pos(i), x); }

  MaybeElement raise_at(std::size_t p, ElementId x) const {
    return d_.raise[p][x];
  }
  MaybeElement lower_at(std::size_t p, ElementId x) const {
    return d_.lower[p][x];
  }
  ExtendedInt eps_at(std::size_t p, ElementId x) const { return d_.eps[p][x]; }
  ExtendedInt phi_at(std::size_t p, ElementId x) const { return d_.phi[p][x]; }

  std::size_t pos(int i) const { return d_.system.position(i); }

  /// Serializes with the `{system, elements, wt, ops, eps, phi}` schema.
  nlohmann::json to_json() const;
  /// Structural parse; does not check the axioms.
  static QuasiCrystal from_json(const nlohmann::json& j);

 private:
  QuasiCrystalData d_;
};

/// Standard crystal of type A_n on {1 < ... < n}.
QuasiCrystal standard_crystal_A(int n);
/// Standard crystal of type C_n on {1 < ... < n < n̄ < ... < 1̄}; element
/// k̄ is named "-k".
QuasiCrystal standard_crystal_C(int n);
/// One element of weight zero with every statistic 0 (empty tensor power).
QuasiCrystal trivial_crystal(const RootSystem& sys);

/// Looks up the element named by a signed letter code (k or -k for k̄).
ElementId letter(const QuasiCrystal& q, int code);

struct Violation {
  ElementId element;
  int index;
  int condition;  // 1..6, numbered as in the axioms
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ElementId x, int index, int condition) const;
  bool has_condition(int condition) const;
  nlohmann::json to_json(const QuasiCrystal& q) const;
};

/// Checks the six seminormal quasi-crystal axioms for every element and
/// index and lists every violation.
ValidationReport validate_seminormal(const QuasiCrystal& q);

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Parses and validates; throws ValidationFailed on any axiom violation.
QuasiCrystal load_quasi_crystal(const nlohmann::json& j);
QuasiCrystal load_quasi_crystal_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

/// True iff no ε_i / φ_i value is +∞.
bool is_crystal(const QuasiCrystal& q);

/// True iff psi (a total map on the carrier of q) is a bijection onto the
/// carrier of q2 that preserves weights and statistics and commutes with
/// every defined operator.
bool check_isomorphism_pair(const QuasiCrystal& q, const QuasiCrystal& q2,
                            std::span<const ElementId> psi);

/// The quasi-crystal graph: an i-edge x → f_i(x), an i-loop where ε_i = +∞.
struct CrystalGraph {
  struct Edge {
    ElementId from;
    ElementId to;
    int label;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  struct Loop {
    ElementId vertex;
    int label;
    friend auto operator<=>(const Loop&, const Loop&) = default;
  };
  std::vector<Edge> edges;
  std::vector<Loop> loops;
};

CrystalGraph quasi_crystal_graph(const QuasiCrystal& q);

}  // namespace qck
