#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "qck/errors.hpp"

namespace qck {

/// An element of Z ∪ {+∞}. Addition saturates at +∞ and +∞ compares above
/// every finite value.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(std::int64_t v) : value_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedInt infinity() {
    ExtendedInt r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  std::int64_t value() const {
    if (infinite_) throw DomainError("value() called on +inf");
    return value_;
  }

  friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedInt(a.value_ + b.value_);
  }
  friend constexpr ExtendedInt operator-(ExtendedInt a, std::int64_t b) {
    if (a.infinite_) return a;
    return ExtendedInt(a.value_ - b);
  }

  friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedInt a,
                                                    ExtendedInt b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return infinite_ ? std::string("+inf") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtendedInt x) {
    return os << x.to_string();
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace qck
