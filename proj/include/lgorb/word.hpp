// Words in named generators, e.g. "RSRS^5" or "TS^-1", with a parser for
// the R, S, T, -I alphabet.

#ifndef LGORB_WORD_HPP_
#define LGORB_WORD_HPP_

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgorb {

struct WordToken {
  std::string base;
  long exponent = 1;

  friend bool operator==(const WordToken&, const WordToken&) = default;
};

class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<WordToken> tokens) : tokens_(std::move(tokens)) {}

  static GeneratorWord single(const std::string& base, long exponent = 1) {
    return GeneratorWord({WordToken{base, exponent}});
  }

  const std::vector<WordToken>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }

  /// Concatenation, merging equal neighbouring bases and dropping zero powers.
  GeneratorWord operator*(const GeneratorWord& other) const {
    GeneratorWord out = *this;
    for (const auto& t : other.tokens_) out.push(t);
    return out;
  }

  GeneratorWord inverse() const {
    GeneratorWord out;
    for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it)
      out.push(WordToken{it->base, -it->exponent});
    return out;
  }

  /// Canonical spelling; "id" for the empty word.
  std::string to_string() const {
    if (tokens_.empty()) return "id";
    std::string out;
    for (const auto& t : tokens_) {
      out += t.base;
      if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
    }
    return out;
  }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  void push(const WordToken& t) {
    if (t.exponent == 0) return;
    if (!tokens_.empty() && tokens_.back().base == t.base) {
      tokens_.back().exponent += t.exponent;
      if (tokens_.back().exponent == 0) tokens_.pop_back();
      return;
    }
    tokens_.push_back(t);
  }

  std::vector<WordToken> tokens_;
};

struct WordParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// word := term+ ; term := base ("^" signed-integer)? ; base := R | S | T | -I.
/// Whitespace and "*" separators are ignored. Tokens are kept as written
/// (no merging), so printing a parsed word reproduces its canonical text.
inline GeneratorWord parse_word(const std::string& text) {
  std::vector<WordToken> tokens;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    const std::size_t start = i;
    std::string base;
    if (text[i] == 'R' || text[i] == 'S' || text[i] == 'T') {
      base = std::string(1, text[i]);
      ++i;
    } else if (text[i] == '-' && i + 1 < text.size() && text[i + 1] == 'I') {
      base = "-I";
      i += 2;
    } else {
      std::size_t end = i + 1;
      while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end]))) ++end;
      throw WordParseError("unknown generator '" + text.substr(start, end - start) + "' at position " +
                           std::to_string(start) + " in \"" + text + "\"");
    }
    long exponent = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      const std::size_t num_start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      const std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits)
        throw WordParseError("malformed exponent after '" + base + "^' at position " +
                             std::to_string(num_start) + " in \"" + text + "\"");
      try {
        exponent = std::stol(text.substr(num_start, i - num_start));
      } catch (const std::out_of_range&) {
        throw WordParseError("exponent out of range in \"" + text + "\"");
      }
    }
    tokens.push_back(WordToken{base, exponent});
    skip();
  }
  if (tokens.empty()) throw WordParseError("empty generator word");
  return GeneratorWord(std::move(tokens));
}

}  // namespace lgorb

#endif  // LGORB_WORD_HPP_
