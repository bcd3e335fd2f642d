#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zkw/complexes/builder.hpp"
#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/exactalg/chain_complex.hpp"

namespace zkw {

/// Vertex labels 1..64 as a bit set (label l is bit l-1).
using LabelSet = std::uint64_t;

inline LabelSet label_bit(int label) {
  if (label < 1 || label > 64) throw ValidationError("vertex label " + std::to_string(label) + " outside 1..64");
  return LabelSet{1} << (label - 1);
}

inline LabelSet label_set(const Face& f) {
  LabelSet s = 0;
  for (int l : f) s |= label_bit(l);
  return s;
}

inline Face label_face(LabelSet s) {
  Face f;
  for (; s; s &= s - 1) f.push_back(std::countr_zero(s) + 1);
  return f;
}

inline int label_count(LabelSet s) { return std::popcount(s); }

/// Number of elements of `s` strictly below `label`.
inline int count_below(LabelSet s, int label) { return std::popcount(s & (label_bit(label) - 1)); }

/// Cell kappa(J, I) of Z_K: S-letters on J, D-letters on I.
struct Cell {
  LabelSet s = 0;  // J
  LabelSet d = 0;  // I

  int degree() const { return 2 * label_count(d) + label_count(s); }
  LabelSet support() const { return s | d; }
  auto operator<=>(const Cell&) const = default;
};

using CellChain = Chain<Cell>;

/// Word such as D1*D4*S5, letters ordered by vertex; the empty cell prints as 1.
inline std::string cell_to_string(const Cell& c) {
  std::string out;
  for (int v : label_face(c.support())) {
    if (!out.empty()) out += '*';
    out += (c.d & label_bit(v)) ? 'D' : 'S';
    out += std::to_string(v);
  }
  return out.empty() ? "1" : out;
}

/// Product of cells in the graded-commutative sense (D even, S odd, words vertex-sorted);
/// empty when the supports meet.
inline std::optional<std::pair<Cell, int>> cell_product(const Cell& a, const Cell& b) {
  if (a.support() & b.support()) return std::nullopt;
  int swaps = 0;
  for (LabelSet t = b.s; t; t &= t - 1) swaps += label_count(a.s & ~((LabelSet{1} << std::countr_zero(t) << 1) - 1));
  return std::pair{Cell{a.s | b.s, a.d | b.d}, swaps % 2 ? -1 : 1};
}

inline CellChain chain_product(const CellChain& a, const CellChain& b) {
  CellChain out;
  out.degree = a.degree + b.degree;
  for (const auto& [ca, xa] : a.coefficients)
    for (const auto& [cb, xb] : b.coefficients)
      if (auto p = cell_product(ca, cb)) out.add(p->first, p->second * xa * xb);
  return out;
}

inline CellChain cell_chain(const Cell& c, const Integer& x = 1) {
  CellChain out;
  out.degree = c.degree();
  out.add(c, x);
  return out;
}

/// Cellular differential: d kappa(J,I) = sum_{i in I} (-1)^{#{j in J : j < i}} kappa(J+i, I-i).
inline CellChain cellular_boundary(const CellChain& c) {
  CellChain out;
  out.degree = c.degree - 1;
  for (const auto& [cell, x] : c.coefficients)
    for (int i : label_face(cell.d)) {
      LabelSet bit = label_bit(i);
      out.add(Cell{cell.s | bit, cell.d & ~bit}, count_below(cell.s, i) % 2 ? Integer(-x) : x);
    }
  return out;
}

namespace detail {

inline std::string signed_terms(const std::vector<std::pair<std::string, Integer>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [word, x] = terms[k];
    if (k == 0)
      out += x < 0 ? "-" : "";
    else
      out += x < 0 ? " - " : " + ";
    Integer ax = abs_value(x);
    if (ax != 1) out += ax.str() + (word == "1" ? "" : "*");
    if (ax == 1 || word != "1") out += word;
  }
  return out;
}

}  // namespace detail

/// Signed sum of words with terms in lexicographic word order.
inline std::string chain_to_string(const CellChain& c) {
  std::vector<std::pair<std::string, Integer>> terms;
  for (const auto& [cell, x] : c.coefficients) terms.emplace_back(cell_to_string(cell), x);
  std::sort(terms.begin(), terms.end());
  return detail::signed_terms(terms);
}

namespace detail {

class CellChainParser {
 public:
  explicit CellChainParser(std::string_view text) : in_(text) {}

  CellChain run() {
    auto terms = sum();
    in_.finish();
    CellChain out;
    std::optional<int> degree;
    for (const auto& [cell, x] : terms.coefficients) {
      if (degree && *degree != cell.degree()) in_.fail("chain is not homogeneous in degree");
      degree = cell.degree();
    }
    out = std::move(terms);
    out.degree = degree.value_or(0);
    return out;
  }

 private:
  // Degree fields are irrelevant while parsing; chain_product only adds them.
  CellChain sum() {
    CellChain acc;
    bool negative = in_.accept('-');
    if (!negative) in_.accept('+');
    for (;;) {
      CellChain t = term();
      for (const auto& [c, x] : t.coefficients) acc.add(c, negative ? Integer(-x) : x);
      if (in_.accept('+'))
        negative = false;
      else if (in_.accept('-'))
        negative = true;
      else
        return acc;
    }
  }

  CellChain term() {
    CellChain acc = cell_chain(Cell{});
    bool any = false;
    for (;;) {
      char c = in_.peek();
      if (c == '*' && any) {
        in_.accept('*');
        c = in_.peek();
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        long long n = in_.integer();
        for (auto& [cell, x] : acc.coefficients) x *= n;
        if (n == 0) acc.coefficients.clear();
      } else if (c == 'D' || c == 'S') {
        in_.accept(c);
        long long v = in_.integer();
        if (v < 1 || v > 64) in_.fail("vertex label outside 1..64");
        Cell letter = c == 'D' ? Cell{0, label_bit(static_cast<int>(v))} : Cell{label_bit(static_cast<int>(v)), 0};
        for (const auto& [cell, x] : acc.coefficients)
          if (cell.support() & letter.support()) in_.fail("repeated vertex " + std::to_string(v) + " in a product");
        acc = chain_product(acc, cell_chain(letter));
      } else if (c == '(') {
        in_.accept('(');
        CellChain inner = sum();
        in_.expect(')');
        acc = chain_product(acc, inner);
      } else if (!any) {
        in_.fail("expected a cell word");
      } else {
        return acc;
      }
      any = true;
    }
  }

  TextCursor in_;
};

}  // namespace detail

/// Parses sums of products such as `(D1*D4*S5 + D1S4D5 + S1D4D5)S2`; products are expanded
/// with the graded-commutative sign.
inline CellChain parse_cell_chain(std::string_view text) { return detail::CellChainParser(text).run(); }

}  // namespace zkw
