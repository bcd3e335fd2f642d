#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/errors.hpp"

namespace zkw {

namespace detail {

/// Cursor over UTF-8 input that tracks line and column for error messages.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("expected a keyword");
    return out;
  }

  long long integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-") fail("expected an integer");
    if (digits.size() > 9) fail("integer too large");
    return std::stoll(digits);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class ComplexBuilder {
 public:
  explicit ComplexBuilder(std::string_view text) : in_(text) {}

  SimplicialComplex run() {
    SimplicialComplex k = expr();
    in_.finish();
    return k;
  }

 private:
  // Every result uses the labels 1..n; callers shift blocks as they combine results.
  SimplicialComplex expr() {
    std::string word = in_.identifier();
    if (word == "pt") return SimplicialComplex::simplex({1});
    if (word == "simplex") {
      in_.expect('(');
      std::vector<int> given;
      do given.push_back(static_cast<int>(in_.integer()));
      while (in_.accept(','));
      in_.expect(')');
      std::vector<int> labels;
      for (std::size_t i = 0; i < given.size(); ++i) labels.push_back(static_cast<int>(i) + 1);
      make_face(given);  // rejects repeated vertices
      return SimplicialComplex::simplex(labels);
    }
    if (word == "bd") {
      in_.expect('(');
      SimplicialComplex inner = expr();
      in_.expect(')');
      if (inner.facets().size() != 1 || inner.vertex_count() < 2) in_.fail("bd() needs a simplex with at least two vertices");
      return SimplicialComplex::simplex_boundary(inner.labels());
    }
    if (word == "join") {
      in_.expect('(');
      SimplicialComplex a = expr();
      in_.expect(',');
      SimplicialComplex b = expr();
      in_.expect(')');
      std::map<int, int> shift;
      for (int l : b.labels()) shift[l] = l + static_cast<int>(a.vertex_count());
      return join(a, b.relabelled(shift));
    }
    if (word == "subst") {
      in_.expect('(');
      SimplicialComplex outer = expr();
      in_.expect(';');
      std::vector<SimplicialComplex> parts;
      do parts.push_back(expr());
      while (in_.accept(','));
      in_.expect(')');
      if (parts.size() != outer.vertex_count())
        in_.fail("subst() needs " + std::to_string(outer.vertex_count()) + " parts, got " + std::to_string(parts.size()));
      return substitute_relabelled(outer, parts).complex;
    }
    in_.fail("unknown constructor '" + word + "'");
  }

  TextCursor in_;
};

}  // namespace detail

/// Parses `pt | simplex(v,...) | bd(E) | join(E,E) | subst(E; E,...,E)`. Vertices are numbered
/// 1, 2, ... in the left-to-right order of the leaves that end up in the result.
inline SimplicialComplex parse_complex(std::string_view text) { return detail::ComplexBuilder(text).run(); }

}  // namespace zkw
