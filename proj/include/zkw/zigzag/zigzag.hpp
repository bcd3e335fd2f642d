#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "zkw/exactalg/smith.hpp"
#include "zkw/moment_angle/cells.hpp"
#include "zkw/taylor/face_complex.hpp"

namespace zkw {

/// Basis element of the bicomplex: D-letters on I, S-letters on J, exterior word W.
struct BiTerm {
  LabelSet d = 0;  // I
  LabelSet s = 0;  // J
  GeneratorSet w = 0;
  auto operator<=>(const BiTerm&) const = default;
};

/// `degree` is the S-degree |J| shared by all terms.
using BicomplexElement = Chain<BiTerm>;

inline BicomplexElement from_cell_chain(const CellChain& z) {
  BicomplexElement e;
  for (const auto& [cell, x] : z.coefficients) {
    e.add(BiTerm{cell.d, cell.s, 0}, x);
    e.degree = label_count(cell.s);
  }
  return e;
}

/// Sum over terms and i in I of (-1)^{#{j in J : j < i}} (I - i, J + i, W).
inline BicomplexElement vertical_diff(const BicomplexElement& e) {
  BicomplexElement out;
  out.degree = e.degree + 1;
  for (const auto& [t, x] : e.coefficients)
    for (int i : label_face(t.d)) {
      LabelSet bit = label_bit(i);
      out.add(BiTerm{t.d & ~bit, t.s | bit, t.w}, count_below(t.s, i) % 2 ? Integer(-x) : x);
    }
  return out;
}

/// For each generator F outside W with F - (union W) inside I: (I - (F - union W), J, W + F).
inline BicomplexElement horizontal_diff(const TaylorComplex& tc, const BicomplexElement& e) {
  BicomplexElement out;
  out.degree = e.degree;
  for (const auto& [t, x] : e.coefficients) {
    LabelSet u = tc.union_of(t.w);
    for (std::size_t f = 0; f < tc.generator_count(); ++f) {
      if (t.w >> f & 1) continue;
      LabelSet extra = tc.support(static_cast<int>(f)) & ~u;
      if (extra & ~t.d) continue;
      int sign = insertion_sign(t.w, static_cast<int>(f));
      out.add(BiTerm{t.d & ~extra, t.s, t.w | GeneratorSet{1} << f}, sign < 0 ? Integer(-x) : x);
    }
  }
  return out;
}

/// Word such as D5*S6*w1234^w1456 (generators in ascending order).
inline std::string biterm_to_string(const TaylorComplex& tc, const BiTerm& t) {
  std::string cell = cell_to_string(Cell{t.s, t.d});
  std::string word;
  for (GeneratorSet r = t.w; r; r &= r - 1)
    word += (word.empty() ? "" : "^") + generator_word(tc.generators()[static_cast<std::size_t>(std::countr_zero(r))]);
  if (word.empty()) return cell;
  return cell == "1" ? word : cell + "*" + word;
}

inline std::string bicomplex_to_string(const TaylorComplex& tc, const BicomplexElement& e) {
  std::vector<std::pair<std::string, Integer>> terms;
  for (const auto& [t, x] : e.coefficients) terms.emplace_back(biterm_to_string(tc, t), x);
  std::sort(terms.begin(), terms.end());
  return detail::signed_terms(terms);
}

struct ZigzagStep {
  std::string kind;  // "solve-vertical" or "apply-horizontal"
  BicomplexElement element;
};

struct ZigzagTrace {
  BicomplexElement start;
  std::vector<ZigzagStep> steps;
};

struct ZigzagResult {
  TaylorChain cycle;
  ZigzagTrace trace;
};

namespace detail {

inline std::vector<LabelSet> subsets_of_size(LabelSet r, int size) {
  std::vector<LabelSet> out;
  if (size < 0) return out;
  for (LabelSet sub = r;; sub = (sub - 1) & r) {
    if (label_count(sub) == size) out.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertical preimage of a vertical cycle, solved independently in each (W, R = I u J) block.
inline BicomplexElement solve_vertical(const BicomplexElement& xi) {
  std::map<std::pair<GeneratorSet, LabelSet>, std::vector<std::pair<BiTerm, Integer>>> blocks;
  for (const auto& [t, x] : xi.coefficients) blocks[{t.w, t.d | t.s}].emplace_back(t, x);
  BicomplexElement eta;
  eta.degree = xi.degree - 1;
  for (const auto& [key, terms] : blocks) {
    auto [w, r] = key;
    auto rows = subsets_of_size(r, xi.degree);
    auto cols = subsets_of_size(r, xi.degree - 1);
    std::map<LabelSet, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    IntMatrix a(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (int i : label_face(r & ~cols[c]))
        a.set(row_of.at(cols[c] | label_bit(i)), c, count_below(cols[c], i) % 2 ? -1 : 1);
    IntVector b(rows.size(), Integer(0));
    for (const auto& [t, x] : terms) b[row_of.at(t.s)] = x;
    auto sol = solve_integer(a, b);
    if (!sol.solvable) throw VerificationError("vertical preimage does not exist; input is not a cycle");
    for (std::size_t c = 0; c < cols.size(); ++c) eta.add(BiTerm{r & ~cols[c], cols[c], w}, sol.x[c]);
  }
  return eta;
}

}  // namespace detail

/// Staircase from a cellular cycle of Z_K to a Taylor cycle: solve a vertical preimage, push it
/// horizontally, and repeat until no S-letters remain.
inline ZigzagResult koszul_to_taylor(const TaylorComplex& tc, const CellChain& z) {
  const auto& k = tc.complex();
  if (!is_zk_chain(k, z)) throw ValidationError("chain is not supported on cells of Z_K");
  if (!cellular_boundary(z).is_zero()) throw ValidationError("chain is not a cycle");
  ZigzagResult out;
  BicomplexElement xi = from_cell_chain(z);
  for (const auto& [t, x] : xi.coefficients)
    if (label_count(t.s) != xi.degree) throw ValidationError("chain is not homogeneous in S-degree");
  out.trace.start = xi;
  while (xi.degree > 0 && !xi.is_zero()) {
    BicomplexElement eta = detail::solve_vertical(xi);
    if (vertical_diff(eta) != xi) throw VerificationError("vertical preimage check failed");
    out.trace.steps.push_back({"solve-vertical", eta});
    xi = horizontal_diff(tc, eta);
    out.trace.steps.push_back({"apply-horizontal", xi});
  }
  TaylorChain result;
  for (const auto& [t, x] : xi.coefficients) {
    if (t.d || t.s) throw VerificationError("zigzag ended with cell letters left");
    result.add(t.w, x);
    result.degree = tc.degree_of(t.w);
  }
  if (!tc.differential(result).is_zero()) throw VerificationError("zigzag output is not a Taylor cycle");
  out.cycle = result;
  return out;
}

/// Re-checks every staircase equation: d_Z eta_k = xi_k and xi_{k+1} = d_T eta_k.
inline bool staircase_holds(const TaylorComplex& tc, const ZigzagTrace& trace) {
  BicomplexElement xi = trace.start;
  for (std::size_t i = 0; i + 1 < trace.steps.size(); i += 2) {
    const auto& eta = trace.steps[i].element;
    if (trace.steps[i].kind != "solve-vertical" || vertical_diff(eta) != xi) return false;
    if (trace.steps[i + 1].kind != "apply-horizontal" || horizontal_diff(tc, eta) != trace.steps[i + 1].element)
      return false;
    xi = trace.steps[i + 1].element;
  }
  return trace.steps.size() % 2 == 0;
}

inline nlohmann::ordered_json trace_to_json(const TaylorComplex& tc, const ZigzagTrace& trace) {
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : trace.steps) steps.push_back({{"kind", s.kind}, {"element", bicomplex_to_string(tc, s.element)}});
  return steps;
}

}  // namespace zkw
