#include "qck/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qck {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

ElementId exact_letter(const QuasiCrystal& base, std::string_view token) {
  if (auto x = base.find(token)) return *x;
  throw ParseError("'" + std::string(token) + "' is not a letter of " +
                   base.label());
}

void munch(const QuasiCrystal& base, std::string_view chunk, Word& out) {
  if (auto x = base.find(chunk)) {
    out.push_back(*x);
    return;
  }
  std::size_t at = 0;
  while (at < chunk.size()) {
    std::size_t best_len = 0;
    ElementId best = 0;
    for (ElementId x = 0; x < base.size(); ++x) {
      const std::string& nm = base.name(x);
      if (nm.size() > best_len && chunk.substr(at, nm.size()) == nm) {
        best_len = nm.size();
        best = x;
      }
    }
    if (best_len == 0)
      throw ParseError("cannot split '" + std::string(chunk) +
                       "' into letters of " + base.label());
    out.push_back(best);
    at += best_len;
  }
}

}  // namespace

Word parse_word(const QuasiCrystal& base, std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  text = text.substr(b, e - b);
  Word w;
  if (text.empty() || text == "ε") return w;
  const bool spaced = std::any_of(text.begin(), text.end(), is_space);
  if (!spaced) {
    munch(base, text, w);
    return w;
  }
  std::size_t at = 0;
  while (at < text.size()) {
    while (at < text.size() && is_space(text[at])) ++at;
    std::size_t end = at;
    while (end < text.size() && !is_space(text[end])) ++end;
    if (end > at) w.push_back(exact_letter(base, text.substr(at, end - at)));
    at = end;
  }
  return w;
}

std::string format_word(const QuasiCrystal& base, const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += base.name(w[k]);
  }
  return s;
}

std::string display_word(const QuasiCrystal& base, const Word& w) {
  return w.empty() ? std::string("ε") : format_word(base, w);
}

void check_letters(const QuasiCrystal& base, const Word& w) {
  for (ElementId x : w)
    if (x >= base.size())
      throw LetterError("letter id " + std::to_string(x) + " is not in " +
                        base.label());
}

std::vector<Word> words_of_length(const QuasiCrystal& base, std::size_t len) {
  std::vector<Word> out;
  Word w(len, 0);
  const auto n = static_cast<ElementId>(base.size());
  if (n == 0) return len == 0 ? std::vector<Word>{Word{}} : out;
  while (true) {
    out.push_back(w);
    std::size_t k = len;
    while (k > 0 && ++w[k - 1] == n) w[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<Word> words_up_to(const QuasiCrystal& base, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto layer = words_of_length(base, len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Signature Signature::zero() {
  Signature s;
  s.zero_ = true;
  return s;
}

Signature Signature::of_letter(const QuasiCrystal& base, std::size_t index_pos,
                               ElementId x, std::size_t position) {
  const ExtendedInt eps = base.eps_at(index_pos, x);
  if (eps.is_infinite()) return zero();
  Signature s;
  s.minus_ = eps.value();
  s.plus_ = base.phi_at(index_pos, x).value();
  if (s.minus_ > 0) s.rightmost_minus_ = position;
  if (s.plus_ > 0) s.leftmost_plus_ = position;
  return s;
}

Signature Signature::bicyclic(const Signature& a, const Signature& b) {
  if (a.zero_ || b.zero_) return zero();
  Signature s;
  // −^a +^b · −^c +^d: the inner +^b −^c cancels pairwise.
  const std::int64_t cancelled = std::min(a.plus_, b.minus_);
  s.minus_ = a.minus_ + (b.minus_ - cancelled);
  s.plus_ = b.plus_ + (a.plus_ - cancelled);
  s.rightmost_minus_ = b.minus_ > cancelled ? b.rightmost_minus_ : a.rightmost_minus_;
  s.leftmost_plus_ = a.plus_ > cancelled ? a.leftmost_plus_ : b.leftmost_plus_;
  if (s.minus_ == 0) s.rightmost_minus_.reset();
  if (s.plus_ == 0) s.leftmost_plus_.reset();
  return s;
}

Signature Signature::zero_monoid(const Signature& a, const Signature& b) {
  if (a.zero_ || b.zero_) return zero();
  if (a.plus_ > 0 && b.minus_ > 0) return zero();
  Signature s;
  s.minus_ = a.minus_ + b.minus_;
  s.plus_ = a.plus_ + b.plus_;
  s.rightmost_minus_ = b.minus_ > 0 ? b.rightmost_minus_ : a.rightmost_minus_;
  s.leftmost_plus_ = a.plus_ > 0 ? a.leftmost_plus_ : b.leftmost_plus_;
  return s;
}

std::string Signature::to_string() const {
  if (zero_) return "0";
  if (minus_ == 0 && plus_ == 0) return "ε";
  std::ostringstream os;
  if (minus_) os << "-^" << minus_;
  if (plus_) os << "+^" << plus_;
  return os.str();
}

namespace {

Signature reduce(ProductMode mode, const QuasiCrystal& base, int i,
                 const Word& w) {
  check_letters(base, w);
  const std::size_t p = base.pos(i);
  Signature acc = Signature::identity();
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Signature s = Signature::of_letter(base, p, w[k], k);
    acc = mode == ProductMode::Tensor ? Signature::bicyclic(acc, s)
                                      : Signature::zero_monoid(acc, s);
    if (acc.is_zero()) break;
  }
  return acc;
}

}  // namespace

Signature sgn_tensor(const QuasiCrystal& base, int i, const Word& w) {
  return reduce(ProductMode::Tensor, base, i, w);
}

Signature sgn_qtensor(const QuasiCrystal& base, int i, const Word& w) {
  return reduce(ProductMode::QuasiTensor, base, i, w);
}

Signature signature(ProductMode mode, const QuasiCrystal& base, int i,
                    const Word& w) {
  return reduce(mode, base, i, w);
}

WordStats word_stats(ProductMode mode, const QuasiCrystal& base, int i,
                     const Word& w) {
  const Signature s = reduce(mode, base, i, w);
  if (s.is_zero()) return {ExtendedInt::infinity(), ExtendedInt::infinity()};
  return {s.minus(), s.plus()};
}

MaybeWord word_e(ProductMode mode, const QuasiCrystal& base, int i,
                 const Word& w) {
  const Signature s = reduce(mode, base, i, w);
  if (s.is_zero() || s.minus() == 0) return std::nullopt;
  const std::size_t at = *s.rightmost_minus();
  const MaybeElement y = base.e(i, w[at]);
  if (!y) return std::nullopt;
  Word out = w;
  out[at] = *y;
  return out;
}

MaybeWord word_f(ProductMode mode, const QuasiCrystal& base, int i,
                 const Word& w) {
  const Signature s = reduce(mode, base, i, w);
  if (s.is_zero() || s.plus() == 0) return std::nullopt;
  const std::size_t at = *s.leftmost_plus();
  const MaybeElement y = base.f(i, w[at]);
  if (!y) return std::nullopt;
  Word out = w;
  out[at] = *y;
  return out;
}

Weight word_weight(const QuasiCrystal& base, const Word& w) {
  check_letters(base, w);
  Weight acc(static_cast<std::size_t>(base.system().rank()));
  for (ElementId x : w) acc += base.weight(x);
  return acc;
}

FactorValues empty_word_values(const QuasiCrystal& base, int i) {
  base.pos(i);
  return {Word{}, Weight(static_cast<std::size_t>(base.system().rank())),
          std::nullopt, std::nullopt, 0, 0};
}

FactorValues letter_values(const QuasiCrystal& base, int i, ElementId x) {
  check_letters(base, Word{x});
  auto lift = [](MaybeElement y) -> MaybeWord {
    if (!y) return std::nullopt;
    return Word{*y};
  };
  return {Word{x},         base.weight(x), lift(base.e(i, x)),
          lift(base.f(i, x)), base.eps(i, x), base.phi(i, x)};
}

namespace {

MaybeWord concat(const MaybeWord& u, const MaybeWord& v) {
  if (!u || !v) return std::nullopt;
  Word w = *u;
  w.insert(w.end(), v->begin(), v->end());
  return w;
}

}  // namespace

FactorValues compose_values(ProductMode mode, const QuasiCrystal& base, int i,
                            const FactorValues& u, const FactorValues& v) {
  const auto& sys = base.system();
  FactorValues r;
  r.word = u.word;
  r.word.insert(r.word.end(), v.word.begin(), v.word.end());
  r.wt = u.wt + v.wt;
  if (mode == ProductMode::QuasiTensor && u.phi > 0 && v.eps > 0) {
    r.eps = r.phi = ExtendedInt::infinity();
    return r;
  }
  r.e = u.phi >= v.eps ? concat(u.e, v.word) : concat(u.word, v.e);
  r.f = u.phi > v.eps ? concat(u.f, v.word) : concat(u.word, v.f);
  r.eps = std::max(u.eps, v.eps - sys.coroot_pairing(u.wt, i));
  r.phi = std::max(u.phi + sys.coroot_pairing(v.wt, i), v.phi);
  return r;
}

namespace {

FactorValues evaluate_range(ProductMode mode, const QuasiCrystal& base, int i,
                            const Word& w, std::size_t lo, std::size_t hi,
                            Bracketing bracketing) {
  if (hi - lo == 1) return letter_values(base, i, w[lo]);
  std::size_t mid = 0;
  switch (bracketing) {
    case Bracketing::LeftComb:
      mid = hi - 1;
      break;
    case Bracketing::RightComb:
      mid = lo + 1;
      break;
    case Bracketing::Balanced:
      mid = lo + (hi - lo) / 2;
      break;
  }
  return compose_values(mode, base, i,
                        evaluate_range(mode, base, i, w, lo, mid, bracketing),
                        evaluate_range(mode, base, i, w, mid, hi, bracketing));
}

}  // namespace

FactorValues evaluate_recursive(ProductMode mode, const QuasiCrystal& base,
                                int i, const Word& w, Bracketing bracketing) {
  check_letters(base, w);
  if (w.empty()) return empty_word_values(base, i);
  return evaluate_range(mode, base, i, w, 0, w.size(), bracketing);
}

}  // namespace qck
