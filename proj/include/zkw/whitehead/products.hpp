#pragma once

#include <vector>

#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/moment_angle/cells.hpp"
#include "zkw/whitehead/expr.hpp"

namespace zkw {

/// The canonical complex dDelta_w = dDelta(dDelta_{w_1}, ..., dDelta_{w_q}, i_1, ..., i_p) on the
/// leaves of w.
inline SimplicialComplex delta_w(const WhiteheadExpr& w) {
  if (w.is_leaf()) throw ValidationError("delta_w needs a bracket");
  std::vector<SimplicialComplex> parts;
  for (const auto* c : w.bracket_children()) parts.push_back(delta_w(*c));
  for (int i : w.leaf_children()) parts.push_back(SimplicialComplex::simplex({i}));
  std::vector<int> slots;
  for (std::size_t s = 0; s < parts.size(); ++s) slots.push_back(static_cast<int>(s) + 1);
  return substitute(SimplicialComplex::simplex_boundary(slots), parts);
}

/// Every bracket of w has at least one leaf argument.
inline bool has_leaf_in_every_bracket(const WhiteheadExpr& w) {
  if (w.is_leaf()) return true;
  if (w.leaf_children().empty()) return false;
  for (const auto* c : w.bracket_children())
    if (!has_leaf_in_every_bracket(*c)) return false;
  return true;
}

/// Top sphere: the join of the children's spheres with dDelta(i_1, ..., i_p). A single leaf
/// contributes the empty sphere, so its vertex is absent from the result. A bracket without
/// leaves contributes nothing; the result then need not lie in delta_w(w).
inline SimplicialComplex delta_w_sphere(const WhiteheadExpr& w) {
  if (w.is_leaf()) throw ValidationError("delta_w_sphere needs a bracket");
  SimplicialComplex acc;
  for (const auto* c : w.bracket_children()) acc = join(acc, delta_w_sphere(*c));
  auto ls = w.leaf_children();
  if (ls.size() >= 2) acc = join(acc, SimplicialComplex::simplex_boundary(ls));
  return acc;
}

/// sum_k D_{i_1} ... S_{i_k} ... D_{i_p}
inline CellChain single_bracket_chain(const std::vector<int>& leaves_of_bracket) {
  LabelSet all = label_set(make_face(leaves_of_bracket));
  CellChain out;
  out.degree = 2 * label_count(all) - 1;
  for (int i : leaves_of_bracket) out.add(Cell{label_bit(i), all & ~label_bit(i)}, 1);
  return out;
}

/// Canonical cellular chain h_c(w) = h_c(w_1) ... h_c(w_q) * (sum_k D..S_{i_k}..D).
/// Brackets without leaf arguments give the zero chain.
inline CellChain hurewicz_chain(const WhiteheadExpr& w) {
  if (w.is_leaf()) throw ValidationError("hurewicz_chain needs a bracket");
  CellChain acc = cell_chain(Cell{});
  for (const auto* c : w.bracket_children()) acc = chain_product(acc, hurewicz_chain(*c));
  acc = chain_product(acc, single_bracket_chain(w.leaf_children()));
  acc.degree = dimension(w);
  return acc;
}

}  // namespace zkw
