#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symten/abelian.hpp"
#include "symten/errors.hpp"
#include "symten/exponent_map.hpp"
#include "symten/multipoly.hpp"
#include "symten/rational.hpp"
#include "symten/sym_element.hpp"
#include "symten/tensor.hpp"
#include "symten/word.hpp"

// Text parsers for the CLI mini-grammar and JSON forms for the declared
// schemas. JSON uses ordered maps so output bytes are reproducible.

namespace symten {

using Json = nlohmann::ordered_json;

namespace detail {

class TextCursor {
public:
  explicit TextCursor(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    if (pos_ >= text_.size()) throw input_error("unexpected end of input: " + text_);
    return text_[pos_];
  }
  bool try_consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c))
      throw input_error(std::string("expected '") + c + "' in: " + text_);
  }
  std::uint64_t read_unsigned() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw input_error("expected a number in: " + text_);
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    return value;
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// x<k>(.x<k>)* ; "1" denotes the empty word
inline Word parse_word_at(TextCursor& cur, std::uint32_t alphabet) {
  if (cur.try_consume('1')) return Word(alphabet);
  std::vector<std::uint8_t> letters;
  while (true) {
    cur.expect('x');
    const auto g = cur.read_unsigned();
    if (g < 1 || g > alphabet)
      throw input_error("generator index out of range: x" + std::to_string(g));
    letters.push_back(static_cast<std::uint8_t>(g));
    if (!cur.try_consume('.')) break;
  }
  return Word(alphabet, std::move(letters));
}

inline Rational parse_signed_rational(TextCursor& cur, bool& explicit_coeff) {
  bool negative = false;
  while (true) {
    if (cur.try_consume('-'))
      negative = !negative;
    else if (!cur.try_consume('+'))
      break;
  }
  Rational value = 1;
  explicit_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    explicit_coeff = true;
    value = Rational(Integer(cur.read_unsigned()));
    if (cur.try_consume('/')) {
      const auto den = cur.read_unsigned();
      if (den == 0) throw input_error("zero denominator");
      value /= Rational(Integer(den));
    }
  }
  return negative ? -value : value;
}

} // namespace detail

/// Largest generator index mentioned in a word/element/map text, used to
/// infer the alphabet size when --m is omitted.
inline std::uint32_t scan_max_generator(const std::string& text) {
  std::uint32_t best = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1])))
      continue;
    std::uint32_t value = 0;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      value = value * 10 + static_cast<std::uint32_t>(text[j++] - '0');
    best = std::max(best, value);
  }
  return best;
}

/// "x1.x2.x1"
inline Word parse_word(const std::string& text, std::uint32_t alphabet) {
  detail::TextCursor cur(text);
  Word w = detail::parse_word_at(cur, alphabet);
  if (!cur.done()) throw input_error("trailing input after word: " + text);
  return w;
}

/// "{x1.x2:1, x1:2}"; "{}" is the identity index.
inline ExponentMap parse_exponent_map(const std::string& text, std::uint32_t alphabet) {
  detail::TextCursor cur(text);
  cur.expect('{');
  std::vector<ExponentMap::Entry> entries;
  if (!cur.try_consume('}')) {
    while (true) {
      Word w = detail::parse_word_at(cur, alphabet);
      if (w.empty()) throw input_error("the empty word cannot appear in an exponent map");
      cur.expect(':');
      const auto exp = cur.read_unsigned();
      entries.emplace_back(std::move(w), static_cast<std::uint32_t>(exp));
      if (cur.try_consume('}')) break;
      cur.expect(',');
    }
  }
  if (!cur.done()) throw input_error("trailing input after exponent map: " + text);
  return ExponentMap(alphabet, std::move(entries));
}

/// Element grammar: sums of optionally signed terms "q*e<i>[w]" or bare
/// rationals (multiples of the identity), e.g. "2*e2[x1] + e1[x1.x1] - 1/2".
inline SymElement parse_sym_element(const std::string& text, Mode mode,
                                    std::uint32_t alphabet) {
  detail::TextCursor cur(text);
  SymElement out(mode, alphabet);
  if (cur.done()) throw input_error("empty element expression");
  while (!cur.done()) {
    bool explicit_coeff = false;
    const Rational coeff = detail::parse_signed_rational(cur, explicit_coeff);
    bool has_block = false;
    if (explicit_coeff) {
      if (cur.try_consume('*')) has_block = true;
    } else
      has_block = true;
    if (!has_block) {
      out += SymElement::identity(mode, alphabet) * coeff;
      continue;
    }
    cur.expect('e');
    const auto exp = cur.read_unsigned();
    if (exp < 1) throw input_error("basis block exponent must be >= 1");
    cur.expect('[');
    Word w = detail::parse_word_at(cur, alphabet);
    if (w.empty()) throw input_error("basis block word must be nonempty");
    cur.expect(']');
    out += SymElement::basis(mode, ExponentMap::single(w, static_cast<std::uint32_t>(exp)),
                             coeff);
  }
  return out;
}

inline Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (auto g : w.letters()) arr.push_back(static_cast<int>(g));
  return arr;
}

inline Json exponent_map_to_json(const ExponentMap& alpha) {
  Json arr = Json::array();
  for (const auto& [word, exp] : alpha.entries())
    arr.push_back(Json::array({word_to_json(word), exp}));
  return arr;
}

/// {"mode": {"truncated": n} | "free", "terms": [{"alpha": [[word, exp]...],
///  "coeff": "p/q"}]}
inline Json sym_element_to_json(const SymElement& e) {
  Json out;
  if (e.mode().is_free())
    out["mode"] = "free";
  else
    out["mode"] = Json{{"truncated", e.mode().order()}};
  Json terms = Json::array();
  for (const auto& [alpha, c] : e.terms()) {
    Json term;
    term["alpha"] = exponent_map_to_json(alpha);
    term["coeff"] = to_string(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

inline Json tensor_element_to_json(const TensorElement& t) {
  Json out;
  out["n"] = t.order();
  Json terms = Json::array();
  for (const auto& [tuple, c] : t.terms()) {
    Json slots = Json::array();
    for (const auto& w : tuple.slots()) slots.push_back(word_to_json(w));
    Json term;
    term["slots"] = std::move(slots);
    term["coeff"] = to_string(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

// same shape as multipoly_to_json, with f[i;word] as the variable names
inline Json abelian_poly_to_json(const AbelianPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json factors = Json::array();
    for (const auto& [gen, exp] : it->first.factors())
      factors.push_back(Json::array({gen.to_string(), exp}));
    Json term;
    term["monomial"] = std::move(factors);
    term["coeff"] = to_string(it->second);
    terms.push_back(std::move(term));
  }
  return Json{{"terms", std::move(terms)}};
}

inline Json multipoly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json factors = Json::array();
    for (const auto& [var, exp] : it->first.factors())
      factors.push_back(Json::array({p.vars()->name(var), exp}));
    Json term;
    term["monomial"] = std::move(factors);
    term["coeff"] = to_string(it->second);
    terms.push_back(std::move(term));
  }
  return Json{{"terms", std::move(terms)}};
}

} // namespace symten
