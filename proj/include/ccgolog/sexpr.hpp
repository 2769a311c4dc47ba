#pragma once

// A minimal s-expression reader used by the program and domain parsers.
// Atoms are maximal runs of characters other than whitespace, parentheses
// and ';' (which starts a comment running to end of line).

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccgolog/errors.hpp"

namespace ccgolog {

struct Sexpr {
  bool is_list = false;
  std::string atom;
  std::vector<Sexpr> items;
  SourceLocation where;

  bool is_atom() const { return !is_list; }
  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
  /// The head atom of a nonempty list, or "" otherwise.
  std::string_view head() const {
    if (!is_list || items.empty() || items.front().is_list) return {};
    return items.front().atom;
  }
};

namespace detail {

class SexprReader {
 public:
  explicit SexprReader(std::string_view text) : text_(text) {}

  std::vector<Sexpr> read_all() {
    std::vector<Sexpr> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip_space();
    }
    return out;
  }

 private:
  Sexpr read() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", here());
    Sexpr out;
    out.where = here();
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", here());
    if (c == '(') {
      out.is_list = true;
      advance();
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input, missing ')'", here());
        if (text_[pos_] == ')') {
          advance();
          return out;
        }
        out.items.push_back(read());
      }
    }
    std::size_t begin = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) advance();
    out.atom = std::string(text_.substr(begin, pos_ - begin));
    return out;
  }

  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';';
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  SourceLocation here() const { return {line_, column_}; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace detail

inline std::vector<Sexpr> read_sexprs(std::string_view text) {
  return detail::SexprReader(text).read_all();
}

/// Exactly one top-level expression.
inline Sexpr read_sexpr(std::string_view text) {
  auto all = read_sexprs(text);
  if (all.empty()) throw ParseError("unexpected end of input", {1, 1});
  if (all.size() > 1) throw ParseError("trailing input after expression", all[1].where);
  return std::move(all.front());
}

inline std::string to_string(const Sexpr& e) {
  if (!e.is_list) return e.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i > 0) out += " ";
    out += to_string(e.items[i]);
  }
  return out + ")";
}

/// Replaces atoms named in `bindings` throughout `e`.
inline Sexpr substitute(const Sexpr& e, const std::map<std::string, std::string>& bindings) {
  Sexpr out = e;
  if (!e.is_list) {
    if (auto it = bindings.find(e.atom); it != bindings.end()) out.atom = it->second;
    return out;
  }
  for (auto& item : out.items) item = substitute(item, bindings);
  return out;
}

}  // namespace ccgolog
