#include "qck/quasi_crystal.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace qck {

QuasiCrystalData::QuasiCrystalData(RootSystem sys,
                                   std::vector<std::string> element_names,
                                   std::vector<Weight> element_weights,
                                   std::string label_)
    : system(std::move(sys)),
      names(std::move(element_names)),
      weights(std::move(element_weights)),
      label(std::move(label_)) {
  const std::size_t k = system.index_set().size();
  const std::size_t n = names.size();
  raise.assign(k, std::vector<MaybeElement>(n));
  lower.assign(k, std::vector<MaybeElement>(n));
  eps.assign(k, std::vector<ExtendedInt>(n, 0));
  phi.assign(k, std::vector<ExtendedInt>(n, 0));
}

QuasiCrystal::QuasiCrystal(QuasiCrystalData data) : d_(std::move(data)) {
  const std::size_t n = d_.names.size();
  const std::size_t k = d_.system.index_set().size();
  const auto rank = static_cast<std::size_t>(d_.system.rank());
  if (d_.weights.size() != n) throw ShapeError("one weight per element");
  for (const auto& w : d_.weights)
    if (w.size() != rank) throw ShapeError("weight length must equal rank");
  auto check_table = [&](const auto& t, const char* what) {
    if (t.size() != k) throw ShapeError(std::string(what) + ": one row per index");
    for (const auto& row : t)
      if (row.size() != n)
        throw ShapeError(std::string(what) + ": one entry per element");
  };
  check_table(d_.raise, "e");
  check_table(d_.lower, "f");
  check_table(d_.eps, "eps");
  check_table(d_.phi, "phi");
  for (const auto* t : {&d_.raise, &d_.lower})
    for (const auto& row : *t)
      for (const auto& y : row)
        if (y && *y >= n) throw ShapeError("operator target out of range");
  std::vector<std::string> sorted = d_.names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ShapeError("element names must be distinct");
}

std::optional<ElementId> QuasiCrystal::find(std::string_view name) const {
  for (std::size_t x = 0; x < d_.names.size(); ++x)
    if (d_.names[x] == name) return static_cast<ElementId>(x);
  return std::nullopt;
}

namespace {

nlohmann::json stat_to_json(ExtendedInt v) {
  if (v.is_infinite()) return "+inf";
  return v.value();
}

ExtendedInt stat_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "+inf") return ExtendedInt::infinity();
    throw ParseError("statistic must be an integer or \"+inf\"");
  }
  return ExtendedInt(j.get<std::int64_t>());
}

}  // namespace

nlohmann::json QuasiCrystal::to_json() const {
  nlohmann::json j;
  j["system"] = d_.system.to_json();
  j["label"] = d_.label;
  j["elements"] = d_.names;
  j["wt"] = nlohmann::json::array();
  for (const auto& w : d_.weights) j["wt"].push_back(w.coords());
  j["ops"] = nlohmann::json::object();
  j["eps"] = nlohmann::json::object();
  j["phi"] = nlohmann::json::object();
  const auto& idx = d_.system.index_set();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const std::string key = std::to_string(idx[p]);
    nlohmann::json f = nlohmann::json::object(), e = nlohmann::json::object();
    for (std::size_t x = 0; x < size(); ++x) {
      if (d_.lower[p][x]) f[d_.names[x]] = d_.names[*d_.lower[p][x]];
      if (d_.raise[p][x]) e[d_.names[x]] = d_.names[*d_.raise[p][x]];
    }
    j["ops"][key] = {{"f", f}, {"e", e}};
    auto& eps = j["eps"][key] = nlohmann::json::array();
    auto& phi = j["phi"][key] = nlohmann::json::array();
    for (std::size_t x = 0; x < size(); ++x) {
      eps.push_back(stat_to_json(d_.eps[p][x]));
      phi.push_back(stat_to_json(d_.phi[p][x]));
    }
  }
  return j;
}

QuasiCrystal QuasiCrystal::from_json(const nlohmann::json& j) {
  try {
    RootSystem sys = RootSystem::from_json(j.at("system"));
    auto names = j.at("elements").get<std::vector<std::string>>();
    std::vector<Weight> weights;
    for (const auto& w : j.at("wt"))
      weights.emplace_back(w.get<std::vector<std::int64_t>>());
    if (weights.size() != names.size())
      throw ParseError("\"wt\" must list one weight per element");
    std::map<std::string, ElementId> by_name;
    for (std::size_t x = 0; x < names.size(); ++x)
      by_name[names[x]] = static_cast<ElementId>(x);
    auto lookup = [&](const std::string& s) {
      auto it = by_name.find(s);
      if (it == by_name.end()) throw ParseError("unknown element " + s);
      return it->second;
    };

    std::string label = j.value("label", std::string());
    QuasiCrystalData d(sys, names, std::move(weights),
                       label.empty() ? sys.id() : label);
    const auto& idx = sys.index_set();
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const std::string key = std::to_string(idx[p]);
      const auto& ops = j.at("ops");
      if (ops.contains(key)) {
        const auto& o = ops.at(key);
        if (o.contains("f"))
          for (const auto& [from, to] : o.at("f").items())
            d.lower[p][lookup(from)] = lookup(to.get<std::string>());
        if (o.contains("e")) {
          for (const auto& [from, to] : o.at("e").items())
            d.raise[p][lookup(from)] = lookup(to.get<std::string>());
        } else {
          for (std::size_t x = 0; x < names.size(); ++x)
            if (d.lower[p][x]) d.raise[p][*d.lower[p][x]] = static_cast<ElementId>(x);
        }
      }
      for (auto [field, table] :
           {std::pair{"eps", &d.eps}, std::pair{"phi", &d.phi}}) {
        const auto& row = j.at(field).at(key);
        if (row.size() != names.size())
          throw ParseError(std::string(field) + "[" + key +
                           "] must list one value per element");
        for (std::size_t x = 0; x < names.size(); ++x)
          (*table)[p][x] = stat_from_json(row[x]);
      }
    }
    return QuasiCrystal(std::move(d));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quasi-crystal: ") + e.what());
  }
}

QuasiCrystal standard_crystal_A(int n) {
  RootSystem sys = RootSystem::type_A(n);
  std::vector<std::string> names;
  std::vector<Weight> weights;
  for (int x = 1; x <= n; ++x) {
    names.push_back(std::to_string(x));
    weights.push_back(Weight::unit(n, x));
  }
  QuasiCrystalData d(sys, std::move(names), std::move(weights),
                     "A" + std::to_string(n));
  for (int i = 1; i < n; ++i) {
    const std::size_t p = i - 1;
    const auto x = static_cast<ElementId>(i - 1);
    const auto y = static_cast<ElementId>(i);
    d.lower[p][x] = y;
    d.raise[p][y] = x;
    d.phi[p][x] = 1;
    d.eps[p][y] = 1;
  }
  return QuasiCrystal(std::move(d));
}

QuasiCrystal standard_crystal_C(int n) {
  RootSystem sys = RootSystem::type_C(n);
  std::vector<std::string> names;
  std::vector<Weight> weights;
  for (int x = 1; x <= n; ++x) {
    names.push_back(std::to_string(x));
    weights.push_back(Weight::unit(n, x));
  }
  for (int x = n; x >= 1; --x) {
    names.push_back(std::to_string(-x));
    weights.push_back(Weight::unit(n, x, -1));
  }
  QuasiCrystalData d(sys, std::move(names), std::move(weights),
                     "C" + std::to_string(n));
  auto plain = [](int x) { return static_cast<ElementId>(x - 1); };
  auto barred = [n](int x) { return static_cast<ElementId>(2 * n - x); };
  auto link = [&](std::size_t p, ElementId from, ElementId to) {
    d.lower[p][from] = to;
    d.raise[p][to] = from;
    d.phi[p][from] = 1;
    d.eps[p][to] = 1;
  };
  for (int i = 1; i < n; ++i) {
    link(i - 1, plain(i), plain(i + 1));
    link(i - 1, barred(i + 1), barred(i));
  }
  link(n - 1, plain(n), barred(n));
  return QuasiCrystal(std::move(d));
}

QuasiCrystal trivial_crystal(const RootSystem& sys) {
  QuasiCrystalData d(sys, {"ε"}, {Weight(static_cast<std::size_t>(sys.rank()))},
                     "1");
  return QuasiCrystal(std::move(d));
}

ElementId letter(const QuasiCrystal& q, int code) {
  auto x = q.find(std::to_string(code));
  if (!x) throw LetterError("no letter " + std::to_string(code) + " in " + q.label());
  return *x;
}

bool ValidationReport::has(ElementId x, int index, int condition) const {
  return std::any_of(violations.begin(), violations.end(), [&](const auto& v) {
    return v.element == x && v.index == index && v.condition == condition;
  });
}

bool ValidationReport::has_condition(int condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const auto& v) { return v.condition == condition; });
}

nlohmann::json ValidationReport::to_json(const QuasiCrystal& q) const {
  nlohmann::json j = {{"valid", ok()}, {"violations", nlohmann::json::array()}};
  for (const auto& v : violations)
    j["violations"].push_back({{"element", q.name(v.element)},
                               {"index", v.index},
                               {"condition", v.condition},
                               {"message", v.message}});
  return j;
}

ValidationReport validate_seminormal(const QuasiCrystal& q) {
  ValidationReport report;
  const auto& sys = q.system();
  const auto& idx = sys.index_set();
  const std::size_t n = q.size();
  auto fail = [&](ElementId x, int i, int cond, std::string msg) {
    report.violations.push_back({x, i, cond, std::move(msg)});
  };
  // Length of the chain x, op(x), op²(x), ...; nullopt if it never ends.
  auto chain = [n](ElementId x, auto&& op) -> std::optional<std::int64_t> {
    std::int64_t k = 0;
    MaybeElement y = x;
    while ((y = op(*y))) {
      if (static_cast<std::size_t>(++k) > n) return std::nullopt;
    }
    return k;
  };

  for (std::size_t p = 0; p < idx.size(); ++p) {
    const int i = idx[p];
    const Weight& alpha = sys.simple_root(i);
    for (ElementId x = 0; x < n; ++x) {
      const ExtendedInt eps = q.eps_at(p, x);
      const ExtendedInt phi = q.phi_at(p, x);
      const MaybeElement ex = q.raise_at(p, x);
      const MaybeElement fx = q.lower_at(p, x);

      if (phi != eps + sys.pairing_at(q.weight(x), p))
        fail(x, i, 1, "phi = " + phi.to_string() + " but eps + <wt, coroot> = " +
                          (eps + sys.pairing_at(q.weight(x), p)).to_string());
      if (ex && q.weight(*ex) != q.weight(x) + alpha)
        fail(x, i, 2, "e changes the weight by something other than +alpha");
      if (fx && q.weight(*fx) != q.weight(x) - alpha)
        fail(x, i, 3, "f changes the weight by something other than -alpha");
      if (ex && q.lower_at(p, *ex) != MaybeElement(x))
        fail(x, i, 4, "e(x) = " + q.name(*ex) + " but f(" + q.name(*ex) +
                          ") != x");
      if (fx && q.raise_at(p, *fx) != MaybeElement(x))
        fail(x, i, 4, "f(x) = " + q.name(*fx) + " but e(" + q.name(*fx) +
                          ") != x");
      if (eps.is_infinite() && (ex || fx))
        fail(x, i, 5, "eps = +inf but an operator is defined");
      if (eps.is_finite()) {
        auto up = chain(x, [&](ElementId y) { return q.raise_at(p, y); });
        auto down = chain(x, [&](ElementId y) { return q.lower_at(p, y); });
        if (!up || ExtendedInt(*up) != eps)
          fail(x, i, 6, "eps = " + eps.to_string() + " but e can be applied " +
                            (up ? std::to_string(*up) : "unboundedly") + " times");
        if (phi.is_finite() && (!down || ExtendedInt(*down) != phi))
          fail(x, i, 6, "phi = " + phi.to_string() + " but f can be applied " +
                            (down ? std::to_string(*down) : "unboundedly") +
                            " times");
      }
    }
  }
  return report;
}

namespace {

std::string summarize(const ValidationReport& r) {
  std::ostringstream os;
  os << r.violations.size() << " axiom violation(s)";
  if (!r.ok()) {
    const auto& v = r.violations.front();
    os << "; first: condition " << v.condition << " at index " << v.index
       << ": " << v.message;
  }
  return os.str();
}

}  // namespace

ValidationFailed::ValidationFailed(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

QuasiCrystal load_quasi_crystal(const nlohmann::json& j) {
  QuasiCrystal q = QuasiCrystal::from_json(j);
  ValidationReport r = validate_seminormal(q);
  if (!r.ok()) throw ValidationFailed(std::move(r));
  return q;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

QuasiCrystal load_quasi_crystal_file(const std::string& path) {
  return load_quasi_crystal(read_json_file(path));
}

bool is_crystal(const QuasiCrystal& q) {
  for (std::size_t p = 0; p < q.index_set().size(); ++p)
    for (ElementId x = 0; x < q.size(); ++x)
      if (q.eps_at(p, x).is_infinite() || q.phi_at(p, x).is_infinite())
        return false;
  return true;
}

bool check_isomorphism_pair(const QuasiCrystal& q, const QuasiCrystal& q2,
                            std::span<const ElementId> psi) {
  if (!(q.system() == q2.system())) return false;
  if (psi.size() != q.size() || q.size() != q2.size()) return false;
  std::vector<bool> hit(q2.size(), false);
  for (ElementId y : psi) {
    if (y >= q2.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (ElementId x = 0; x < q.size(); ++x) {
    const ElementId y = psi[x];
    if (q.weight(x) != q2.weight(y)) return false;
    for (std::size_t p = 0; p < q.index_set().size(); ++p) {
      if (q.eps_at(p, x) != q2.eps_at(p, y) || q.phi_at(p, x) != q2.phi_at(p, y))
        return false;
      if (auto ex = q.raise_at(p, x); ex && q2.raise_at(p, y) != MaybeElement(psi[*ex]))
        return false;
      if (auto fx = q.lower_at(p, x); fx && q2.lower_at(p, y) != MaybeElement(psi[*fx]))
        return false;
    }
  }
  return true;
}

CrystalGraph quasi_crystal_graph(const QuasiCrystal& q) {
  CrystalGraph g;
  const auto& idx = q.index_set();
  for (ElementId x = 0; x < q.size(); ++x) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (auto y = q.lower_at(p, x)) g.edges.push_back({x, *y, idx[p]});
      if (q.eps_at(p, x).is_infinite()) g.loops.push_back({x, idx[p]});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.loops.begin(), g.loops.end());
  return g;
}

}  // namespace qck
