#pragma once

#include <cstddef>

#include "qck/quasi_crystal.hpp"

namespace qck {

enum class ProductMode { Tensor, QuasiTensor };

const char* mode_name(ProductMode mode);          // "tensor" / "qtensor"
const char* mode_symbol(ProductMode mode);        // "⊗" / "⊗̇"
ProductMode parse_mode(const std::string& text);  // throws ParseError

/// Element x ⊗ x' of a pair product has id x * |Q'| + x'.
inline ElementId pair_id(const QuasiCrystal& right, ElementId x, ElementId y) {
  return static_cast<ElementId>(x * right.size() + y);
}

/// Tensor product Q ⊗ Q'. Throws TypeError if the root systems differ.
QuasiCrystal tensor(const QuasiCrystal& left, const QuasiCrystal& right);

/// Quasi-tensor product Q ⊗̇ Q'.
QuasiCrystal quasi_tensor(const QuasiCrystal& left, const QuasiCrystal& right);

QuasiCrystal product(ProductMode mode, const QuasiCrystal& left,
                     const QuasiCrystal& right);

/// Left-associated k-fold product; k = 0 gives the trivial quasi-crystal.
QuasiCrystal iterated_product(ProductMode mode, const QuasiCrystal& q,
                              std::size_t k);

}  // namespace qck
