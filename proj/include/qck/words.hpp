#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qck/products.hpp"
#include "qck/quasi_crystal.hpp"

namespace qck {

/// A word over the carrier of a base quasi-crystal; the empty vector is ε.
using Word = std::vector<ElementId>;
/// A word or ⊥.
using MaybeWord = std::optional<Word>;

/// Shortlex: shorter words first, then lexicographic in carrier order.
bool shortlex_less(const Word& a, const Word& b);
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a, b);
  }
};

/// Parses a word literal. Whitespace-separated tokens must be element names;
/// a literal without whitespace is either a single element name or is split
/// by longest-match into element names ("112", "12-2"). "" and "ε" are ε.
Word parse_word(const QuasiCrystal& base, std::string_view text);
/// Space-separated element names; ε formats as "".
std::string format_word(const QuasiCrystal& base, const Word& w);
/// Like format_word but ε is shown as "ε".
std::string display_word(const QuasiCrystal& base, const Word& w);
/// Throws LetterError if w has a letter outside the carrier.
void check_letters(const QuasiCrystal& base, const Word& w);

/// All words of length exactly len, in shortlex order.
std::vector<Word> words_of_length(const QuasiCrystal& base, std::size_t len);
/// All words of length at most max_len, in shortlex order.
std::vector<Word> words_up_to(const QuasiCrystal& base, std::size_t max_len);

/// Element of B₀ (bicyclic monoid with zero) or Z₀ (zero monoid) in reduced
/// form 0 or −^a +^b, annotated with the (0-based) letter positions that
/// originate the right-most surviving − and the left-most surviving +.
class Signature {
 public:
  static Signature zero();
  static Signature identity() { return Signature(); }
  /// −^{ε_i(x)} +^{φ_i(x)}, or 0 when ε_i(x) = +∞; both annotations point at
  /// position.
  static Signature of_letter(const QuasiCrystal& base, std::size_t index_pos,
                             ElementId x, std::size_t position);

  /// Product in B₀: +− cancels to ε.
  static Signature bicyclic(const Signature& a, const Signature& b);
  /// Product in Z₀: +− collapses to 0.
  static Signature zero_monoid(const Signature& a, const Signature& b);

  bool is_zero() const { return zero_; }
  std::int64_t minus() const { return minus_; }
  std::int64_t plus() const { return plus_; }
  std::optional<std::size_t> rightmost_minus() const { return rightmost_minus_; }
  std::optional<std::size_t> leftmost_plus() const { return leftmost_plus_; }

  std::string to_string() const;
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  bool zero_ = false;
  std::int64_t minus_ = 0;
  std::int64_t plus_ = 0;
  std::optional<std::size_t> rightmost_minus_;
  std::optional<std::size_t> leftmost_plus_;
};

/// i-signature for the tensor product (B₀ product of letter signatures).
Signature sgn_tensor(const QuasiCrystal& base, int i, const Word& w);
/// i-signature for the quasi-tensor product (Z₀ product).
Signature sgn_qtensor(const QuasiCrystal& base, int i, const Word& w);
Signature signature(ProductMode mode, const QuasiCrystal& base, int i,
                    const Word& w);

struct WordStats {
  ExtendedInt eps;
  ExtendedInt phi;
  friend bool operator==(const WordStats&, const WordStats&) = default;
};

/// (ε_i(w), φ_i(w)) in the free ⊗- or ⊗̇-quasi-crystal monoid.
WordStats word_stats(ProductMode mode, const QuasiCrystal& base, int i,
                     const Word& w);
MaybeWord word_e(ProductMode mode, const QuasiCrystal& base, int i,
                 const Word& w);
MaybeWord word_f(ProductMode mode, const QuasiCrystal& base, int i,
                 const Word& w);
Weight word_weight(const QuasiCrystal& base, const Word& w);

/// Structure maps of a single word for one index, as given by the
/// two-factor definitions of the free monoids.
struct FactorValues {
  Word word;
  Weight wt;
  MaybeWord e;
  MaybeWord f;
  ExtendedInt eps;
  ExtendedInt phi;
  friend bool operator==(const FactorValues&, const FactorValues&) = default;
};

FactorValues empty_word_values(const QuasiCrystal& base, int i);
FactorValues letter_values(const QuasiCrystal& base, int i, ElementId x);
/// Values on uv from the values on u and on v.
FactorValues compose_values(ProductMode mode, const QuasiCrystal& base, int i,
                            const FactorValues& u, const FactorValues& v);

enum class Bracketing { LeftComb, RightComb, Balanced };

/// Evaluates the structure on w through compose_values along the given
/// bracketing of its letters. Independent of the signature rule.
FactorValues evaluate_recursive(ProductMode mode, const QuasiCrystal& base,
                                int i, const Word& w, Bracketing bracketing);

}  // namespace qck
