#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "symten/errors.hpp"

namespace symten {

/// Degree vector in N^m: component h counts occurrences of generator h+1.
class DegreeVector {
public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {}

  static DegreeVector zeros(std::size_t m) {
    return DegreeVector(std::vector<std::uint32_t>(m, 0));
  }

  std::size_t arity() const { return counts_.size(); }
  std::uint32_t operator[](std::size_t h) const { return counts_.at(h); }
  std::uint32_t& operator[](std::size_t h) { return counts_.at(h); }
  const std::vector<std::uint32_t>& counts() const { return counts_; }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }

  DegreeVector& operator+=(const DegreeVector& other) {
    check_arity(other);
    for (std::size_t h = 0; h < counts_.size(); ++h) counts_[h] += other.counts_[h];
    return *this;
  }
  DegreeVector operator+(const DegreeVector& other) const {
    DegreeVector out = *this;
    return out += other;
  }
  DegreeVector operator-(const DegreeVector& other) const {
    check_arity(other);
    DegreeVector out = *this;
    for (std::size_t h = 0; h < counts_.size(); ++h) {
      if (out.counts_[h] < other.counts_[h]) throw input_error("degree vector underflow");
      out.counts_[h] -= other.counts_[h];
    }
    return out;
  }
  DegreeVector scaled(std::uint32_t k) const {
    DegreeVector out = *this;
    for (auto& c : out.counts_) c *= k;
    return out;
  }

  bool is_zero() const {
    return std::all_of(counts_.begin(), counts_.end(), [](auto c) { return c == 0; });
  }

  // componentwise
  bool dominates(const DegreeVector& other) const {
    check_arity(other);
    for (std::size_t h = 0; h < counts_.size(); ++h)
      if (counts_[h] < other.counts_[h]) return false;
    return true;
  }

  bool operator==(const DegreeVector&) const = default;

  // total degree first, then lex on components
  std::strong_ordering operator<=>(const DegreeVector& other) const {
    check_arity(other);
    if (auto cmp = total() <=> other.total(); cmp != 0) return cmp;
    for (std::size_t h = 0; h < counts_.size(); ++h)
      if (auto cmp = counts_[h] <=> other.counts_[h]; cmp != 0) return cmp;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t h = 0; h < counts_.size(); ++h) {
      if (h) out += ",";
      out += std::to_string(counts_[h]);
    }
    return out + ")";
  }

private:
  void check_arity(const DegreeVector& other) const {
    if (counts_.size() != other.counts_.size())
      throw input_error("degree vector arity mismatch");
  }

  std::vector<std::uint32_t> counts_;
};

/// Element of the free monoid on m generators: a sequence of generator
/// indices in 1..m. The empty word is the monoid identity. Words are ordered
/// graded-lex (length first, then lex by generator index).
class Word {
public:
  Word(std::uint32_t alphabet, std::vector<std::uint8_t> letters)
      : alphabet_(alphabet), letters_(std::move(letters)) {
    if (alphabet_ == 0) throw input_error("alphabet size must be positive");
    for (auto g : letters_)
      if (g < 1 || g > alphabet_) throw input_error("generator index out of range");
  }

  explicit Word(std::uint32_t alphabet) : Word(alphabet, {}) {}

  static Word generator(std::uint32_t alphabet, std::uint8_t index) {
    return Word(alphabet, {index});
  }

  std::uint32_t alphabet() const { return alphabet_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  Word operator*(const Word& other) const {
    if (alphabet_ != other.alphabet_) throw input_error("word alphabet mismatch");
    std::vector<std::uint8_t> letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return Word(alphabet_, std::move(letters));
  }

  Word rotated(std::size_t offset) const {
    if (empty()) throw input_error("cannot rotate the empty word");
    std::vector<std::uint8_t> letters(letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i)
      letters[i] = letters_[(i + offset) % letters_.size()];
    return Word(alphabet_, std::move(letters));
  }

  Word pow(std::uint32_t k) const {
    std::vector<std::uint8_t> letters;
    letters.reserve(letters_.size() * k);
    for (std::uint32_t i = 0; i < k; ++i)
      letters.insert(letters.end(), letters_.begin(), letters_.end());
    return Word(alphabet_, std::move(letters));
  }

  std::strong_ordering operator<=>(const Word& other) const {
    if (auto cmp = letters_.size() <=> other.letters_.size(); cmp != 0) return cmp;
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (auto cmp = letters_[i] <=> other.letters_[i]; cmp != 0) return cmp;
    return std::strong_ordering::equal;
  }
  bool operator==(const Word& other) const { return letters_ == other.letters_; }

  /// Text form: generators joined by '.', e.g. "x1.x2.x1"; empty word is "1".
  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (auto g : letters_) {
      if (!out.empty()) out += ".";
      out += "x" + std::to_string(g);
    }
    return out;
  }

private:
  std::uint32_t alphabet_;
  std::vector<std::uint8_t> letters_;
};

/// Occurrence count of each generator; component h-1 counts x_h.
inline DegreeVector multidegree(const Word& w) {
  DegreeVector d = DegreeVector::zeros(w.alphabet());
  for (auto g : w.letters()) ++d[g - 1];
  return d;
}

/// True iff w is not u^k for any word u and k >= 2. Uses the doubling test:
/// w is a proper power iff it occurs in w*w at an interior offset.
inline bool is_primitive(const Word& w) {
  if (w.empty()) throw input_error("primitivity is undefined for the empty word");
  const auto& s = w.letters();
  const std::size_t len = s.size();
  for (std::size_t offset = 1; offset < len; ++offset) {
    bool match = true;
    for (std::size_t i = 0; i < len && match; ++i)
      match = s[i] == s[(i + offset) % len];
    if (match) return false;
  }
  return true;
}

/// Shortest u with w = u^k; returns (u, k), k = 1 iff w is primitive.
inline std::pair<Word, std::uint32_t> primitive_root(const Word& w) {
  if (w.empty()) throw input_error("primitive root is undefined for the empty word");
  const auto& s = w.letters();
  const std::size_t len = s.size();
  for (std::size_t period = 1; period <= len; ++period) {
    if (len % period != 0) continue;
    bool ok = true;
    for (std::size_t i = period; i < len && ok; ++i) ok = s[i] == s[i - period];
    if (ok)
      return {Word(w.alphabet(), {s.begin(), s.begin() + period}),
              static_cast<std::uint32_t>(len / period)};
  }
  return {w, 1}; // unreachable: period = len always matches
}

/// Lexicographically least rotation: the canonical representative of the
/// cyclic class of w. Idempotent; equal outputs iff the words are rotations
/// of each other.
inline Word canonical_rotation(const Word& w) {
  if (w.empty()) throw input_error("cannot rotate the empty word");
  Word best = w;
  for (std::size_t offset = 1; offset < w.length(); ++offset) {
    Word candidate = w.rotated(offset);
    if (candidate < best) best = candidate;
  }
  return best;
}

namespace detail {

// Advance through all words of a fixed length like an odometer; returns false
// after the last word.
inline bool next_word_letters(std::vector<std::uint8_t>& letters, std::uint32_t m) {
  for (std::size_t i = letters.size(); i-- > 0;) {
    if (letters[i] < m) {
      ++letters[i];
      return true;
    }
    letters[i] = 1;
  }
  return false;
}

} // namespace detail

/// All canonical representatives of aperiodic cyclic classes (primitive
/// necklaces) with length <= max_total_degree, sorted graded-lex.
inline std::vector<Word> enumerate_necklaces(std::uint32_t m,
                                             std::uint32_t max_total_degree) {
  if (m < 1) throw input_error("alphabet size must be positive");
  if (max_total_degree < 1) throw input_error("maximal degree must be positive");
  std::vector<Word> out;
  for (std::uint32_t len = 1; len <= max_total_degree; ++len) {
    std::vector<std::uint8_t> letters(len, 1);
    do {
      Word w(m, letters);
      if (is_primitive(w) && canonical_rotation(w) == w) out.push_back(std::move(w));
    } while (detail::next_word_letters(letters, m));
  }
  return out;
}

/// Words of every length whose multidegree is dominated by delta, sorted
/// graded-lex. These are the candidate support words of basis elements in
/// multidegree delta.
inline std::vector<Word> enumerate_words_within(const DegreeVector& delta) {
  const auto m = static_cast<std::uint32_t>(delta.arity());
  std::vector<Word> out;
  const auto max_len = static_cast<std::uint32_t>(delta.total());
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    std::vector<std::uint8_t> letters(len, 1);
    do {
      Word w(m, letters);
      if (delta.dominates(multidegree(w))) out.push_back(std::move(w));
    } while (detail::next_word_letters(letters, m));
  }
  return out;
}

} // namespace symten
