#pragma once

/**
 * @file braid_words.hpp
 * @brief Text form of braids.
 *
 *   word  := [delta] term*
 *   delta := ("D" | "d") ["^" signed-int]
 *   term  := signed-int        (nonzero, |value| < n)
 *
 * Tokens are separated by whitespace; '.', ',', '(' and ')' are also treated
 * as separators.  Output is the left normal form, e.g. "D^1 (2 1 4 3 4) (1)".
 */

#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/braid.hpp"
#include "garside/element.hpp"

namespace garside::braid {

struct BraidWord {
  std::int64_t delta_power = 0;
  std::vector<int> letters;  // ±i stands for σ_i^{±1}

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline bool is_separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == ',' || c == '(' || c == ')';
}

class WordScanner {
 public:
  explicit WordScanner(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && is_separator(text_[pos_])) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() const { return text_[pos_]; }
  std::size_t position() const { return pos_; }
  void advance() { ++pos_; }

  std::int64_t signed_int() {
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected an integer", start);
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 40)) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ < text_.size() && !is_separator(text_[pos_])) {
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return negative ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a braid word for B_n; positions in errors are 0-based byte offsets.
inline BraidWord parse_word(std::string_view text, int strands) {
  BraidWord word;
  detail::WordScanner in(text);
  if (!in.done() && (in.peek() == 'D' || in.peek() == 'd')) {
    in.advance();
    word.delta_power = 1;
    if (in.position() < text.size() && in.peek() == '^') {
      in.advance();
      word.delta_power = in.signed_int();
    } else if (in.position() < text.size() && !detail::is_separator(in.peek())) {
      throw ParseError("expected '^' or a separator after D", in.position());
    }
  }
  while (!in.done()) {
    const std::size_t start = in.position();
    if (in.peek() == 'D' || in.peek() == 'd') {
      throw ParseError("a Delta power may only appear at the start", start);
    }
    const std::int64_t v = in.signed_int();
    if (v == 0) throw ParseError("generator index 0", start);
    if (v >= strands || -v >= strands) {
      throw ParseError("generator index " + std::to_string(v) + " out of range for " +
                           std::to_string(strands) + " strands",
                       start);
    }
    word.letters.push_back(static_cast<int>(v));
  }
  return word;
}

inline Element<BraidContext> element_from_word(const BraidContext& ctx, const BraidWord& word) {
  std::vector<SignedSimple<Permutation>> parts;
  parts.reserve(word.letters.size());
  for (int v : word.letters) {
    if (v == 0 || v >= ctx.strands() || -v >= ctx.strands()) {
      throw std::invalid_argument("generator index out of range");
    }
    parts.push_back({ctx.generator(v > 0 ? v : -v), v < 0});
  }
  return normalize(ctx, word.delta_power, parts);
}

inline Element<BraidContext> parse_element(const BraidContext& ctx, std::string_view text) {
  return element_from_word(ctx, parse_word(text, ctx.strands()));
}

/// Positive word of a simple braid, lowest generator first at each step.
inline std::string simple_word(const BraidContext& ctx, const Permutation& s) {
  std::string out;
  for (Atom a : atom_word(ctx, s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a.index);
  }
  return out;
}

/// The left normal form of x, e.g. "D^1 (2 1 4 3 4) (1)".
inline std::string word_from_element(const Element<BraidContext>& x) {
  std::string out = "D^" + std::to_string(x.inf());
  for (const auto& f : x.factors()) out += " (" + simple_word(x.context(), f) + ")";
  return out;
}

/// A flat word for x: the Δ power expanded into generators.  Useful for
/// feeding results to tools that do not understand "D".
inline BraidWord flat_word(const Element<BraidContext>& x) {
  const BraidContext& ctx = x.context();
  BraidWord w;
  const auto delta_word = atom_word(ctx, ctx.delta());
  const std::int64_t p = x.inf();
  for (std::int64_t k = 0; k < (p < 0 ? -p : p); ++k) {
    if (p > 0) {
      for (Atom a : delta_word) w.letters.push_back(a.index);
    } else {
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) w.letters.push_back(-it->index);
    }
  }
  for (const auto& f : x.factors()) {
    for (Atom a : atom_word(ctx, f)) w.letters.push_back(a.index);
  }
  return w;
}

/// A uniformly random word of the given length over σ_1^{±1}..σ_{n-1}^{±1}
/// (only positive letters when `positive`).
template <class Rng>
BraidWord random_word(Rng& rng, int strands, std::size_t length, bool positive = false) {
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::bernoulli_distribution negate(0.5);
  BraidWord w;
  w.letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    const int i = index(rng);
    w.letters.push_back(!positive && negate(rng) ? -i : i);
  }
  return w;
}

inline std::string to_string(const BraidWord& w) {
  std::string out;
  if (w.delta_power != 0) out = "D^" + std::to_string(w.delta_power);
  for (int v : w.letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace garside::braid
