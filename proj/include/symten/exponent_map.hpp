#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symten/errors.hpp"
#include "symten/word.hpp"

namespace symten {

/// Finitely supported map from nonempty words to positive integers: the index
/// of an orbit-sum basis element. Entries are kept sorted by graded-lex word
/// order. The empty map indexes the identity.
class ExponentMap {
public:
  using Entry = std::pair<Word, std::uint32_t>;

  explicit ExponentMap(std::uint32_t alphabet) : alphabet_(alphabet) {
    if (alphabet_ == 0) throw input_error("alphabet size must be positive");
  }

  // entries need not be sorted; zero exponents are dropped, duplicates rejected
  ExponentMap(std::uint32_t alphabet, std::vector<Entry> entries)
      : ExponentMap(alphabet) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& [word, exp] : entries) {
      if (exp == 0) continue;
      if (word.empty())
        throw input_error("the empty word cannot support a basis index");
      if (word.alphabet() != alphabet_) throw input_error("word alphabet mismatch");
      if (!entries_.empty() && entries_.back().first == word)
        throw input_error("duplicate word in exponent map");
      entries_.emplace_back(std::move(word), exp);
    }
  }

  static ExponentMap identity(std::uint32_t alphabet) { return ExponentMap(alphabet); }

  static ExponentMap single(const Word& word, std::uint32_t exp) {
    return ExponentMap(word.alphabet(), {{word, exp}});
  }

  std::uint32_t alphabet() const { return alphabet_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// |alpha| = sum of exponents.
  std::uint32_t weight() const {
    std::uint32_t w = 0;
    for (const auto& [word, exp] : entries_) w += exp;
    return w;
  }

  /// Sum of exp * multidegree(word) over the support.
  DegreeVector multidegree() const {
    DegreeVector d = DegreeVector::zeros(alphabet_);
    for (const auto& [word, exp] : entries_) d += symten::multidegree(word).scaled(exp);
    return d;
  }

  // deterministic total order: support word sequence first, then exponents
  std::strong_ordering operator<=>(const ExponentMap& other) const {
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
      if (auto cmp = a->first <=> b->first; cmp != 0) return cmp;
      if (auto cmp = a->second <=> b->second; cmp != 0) return cmp;
      ++a, ++b;
    }
    if (a != entries_.end()) return std::strong_ordering::greater;
    if (b != other.entries_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  bool operator==(const ExponentMap& other) const { return entries_ == other.entries_; }

  /// Text form: e<i>[w] for a single block, e[w1:a1,w2:a2] in general, e[]
  /// for the identity.
  std::string to_string() const {
    if (entries_.empty()) return "e[]";
    if (entries_.size() == 1)
      return "e" + std::to_string(entries_[0].second) + "[" +
             entries_[0].first.to_string() + "]";
    std::string out = "e[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += entries_[i].first.to_string() + ":" + std::to_string(entries_[i].second);
    }
    return out + "]";
  }

private:
  std::uint32_t alphabet_;
  std::vector<Entry> entries_;
};

} // namespace symten
