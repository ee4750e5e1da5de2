#include "qck/products.hpp"

namespace qck {

const char* mode_name(ProductMode mode) {
  return mode == ProductMode::Tensor ? "tensor" : "qtensor";
}

const char* mode_symbol(ProductMode mode) {
  return mode == ProductMode::Tensor ? "⊗" : "⊗̇";
}

ProductMode parse_mode(const std::string& text) {
  if (text == "tensor") return ProductMode::Tensor;
  if (text == "qtensor") return ProductMode::QuasiTensor;
  throw ParseError("mode must be 'tensor' or 'qtensor', got '" + text + "'");
}

QuasiCrystal product(ProductMode mode, const QuasiCrystal& left,
                     const QuasiCrystal& right) {
  if (!(left.system() == right.system()))
    throw TypeError("cannot multiply quasi-crystals of types " +
                    left.system().id() + " and " + right.system().id());
  const char* sym = mode_symbol(mode);
  std::vector<std::string> names;
  std::vector<Weight> weights;
  for (ElementId x = 0; x < left.size(); ++x) {
    for (ElementId y = 0; y < right.size(); ++y) {
      names.push_back(left.name(x) + sym + right.name(y));
      weights.push_back(left.weight(x) + right.weight(y));
    }
  }
  QuasiCrystalData d(left.system(), std::move(names), std::move(weights),
                     left.label() + sym + right.label());
  const auto& sys = left.system();
  for (std::size_t p = 0; p < sys.index_set().size(); ++p) {
    for (ElementId x = 0; x < left.size(); ++x) {
      for (ElementId y = 0; y < right.size(); ++y) {
        const ElementId xy = pair_id(right, x, y);
        const ExtendedInt phi_x = left.phi_at(p, x);
        const ExtendedInt eps_y = right.eps_at(p, y);
        if (mode == ProductMode::QuasiTensor && phi_x > 0 && eps_y > 0) {
          d.eps[p][xy] = ExtendedInt::infinity();
          d.phi[p][xy] = ExtendedInt::infinity();
          continue;  // both operators stay ⊥
        }
        if (phi_x >= eps_y) {
          if (auto ex = left.raise_at(p, x)) d.raise[p][xy] = pair_id(right, *ex, y);
        } else {
          if (auto ey = right.raise_at(p, y)) d.raise[p][xy] = pair_id(right, x, *ey);
        }
        if (phi_x > eps_y) {
          if (auto fx = left.lower_at(p, x)) d.lower[p][xy] = pair_id(right, *fx, y);
        } else {
          if (auto fy = right.lower_at(p, y)) d.lower[p][xy] = pair_id(right, x, *fy);
        }
        d.eps[p][xy] = std::max(left.eps_at(p, x),
                                eps_y - sys.pairing_at(left.weight(x), p));
        d.phi[p][xy] = std::max(phi_x + sys.pairing_at(right.weight(y), p),
                                right.phi_at(p, y));
      }
    }
  }
  return QuasiCrystal(std::move(d));
}

QuasiCrystal tensor(const QuasiCrystal& left, const QuasiCrystal& right) {
  return product(ProductMode::Tensor, left, right);
}

QuasiCrystal quasi_tensor(const QuasiCrystal& left, const QuasiCrystal& right) {
  return product(ProductMode::QuasiTensor, left, right);
}

QuasiCrystal iterated_product(ProductMode mode, const QuasiCrystal& q,
                              std::size_t k) {
  if (k == 0) return trivial_crystal(q.system());
  QuasiCrystal acc = q;
  for (std::size_t j = 1; j < k; ++j) acc = product(mode, acc, q);
  return acc;
}

}  // namespace qck
