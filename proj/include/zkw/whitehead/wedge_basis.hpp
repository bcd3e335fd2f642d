#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkw/complexes/simplicial_homology.hpp"
#include "zkw/moment_angle/zk_complex.hpp"
#include "zkw/whitehead/products.hpp"

namespace zkw {

struct WedgeEntry {
  Face j;  // full subcomplex
  Face i;  // missing face of K_J
  WhiteheadExpr w;
  CellChain chain;
};

struct WedgeBasis {
  std::vector<WedgeEntry> entries;
  bool is_basis = false;
  std::string detail;  // first failing block, empty when is_basis
};

/// [[...[[mu_I], mu_{j_1}]...], mu_{j_q}] with j_1 < ... < j_q.
inline WhiteheadExpr nested_product(const Face& i, const Face& rest) {
  std::vector<WhiteheadExpr> leaves_of_i;
  for (int v : i) leaves_of_i.push_back(WhiteheadExpr::mu(v));
  WhiteheadExpr w = WhiteheadExpr::bracket(std::move(leaves_of_i));
  for (int v : rest) w = WhiteheadExpr::bracket({std::move(w), WhiteheadExpr::mu(v)});
  return w;
}

namespace detail {

// The entries of each block must have classes forming a Z-basis of that block's homology.
inline void check_basis(const SimplicialComplex& k, WedgeBasis& out) {
  std::map<LabelSet, std::map<int, std::vector<const WedgeEntry*>>> by_block;
  for (const auto& e : out.entries) by_block[label_set(e.j)][e.chain.degree].push_back(&e);
  out.is_basis = true;
  for (Mask s = 1; s <= k.full_mask() && k.full_mask() != 0; ++s) {
    LabelSet support = label_set(k.to_face(s));
    auto block = zk_block(k, support);
    for (int d : block.degrees()) {
      HomologyPresentation<Cell> pres(block, d);
      HomologyGroup g = pres.group();
      const auto& chosen = by_block[support][d];
      auto fail = [&](const std::string& why) {
        out.is_basis = false;
        out.detail = "block " + face_to_string(k.to_face(s)) + " degree " + std::to_string(d) + ": " + why;
      };
      if (g.is_zero() && chosen.empty()) continue;
      if (!g.torsion.empty()) return fail("homology has torsion");
      if (chosen.size() != g.rank)
        return fail(std::to_string(chosen.size()) + " chains for rank " + std::to_string(g.rank));
      IntMatrix coords(g.rank, chosen.size());
      for (std::size_t c = 0; c < chosen.size(); ++c) {
        auto cls = pres.classify(chosen[c]->chain);
        for (std::size_t r = 0; r < g.rank; ++r) coords.set(r, c, cls.free[r]);
      }
      auto snf = smith_normal_form(coords, {false, false, false});
      for (const auto& x : snf.diagonal)
        if (x != 1) return fail("coordinate matrix is not unimodular");
    }
    if (s == k.full_mask()) break;
  }
}

}  // namespace detail

/// Nested products over J and I in MF(K_J) containing the largest vertex of J in `order`
/// (listed smallest first); K must be shifted for that order.
inline WedgeBasis shifted_wedge_basis(const SimplicialComplex& k, std::vector<int> order = {}) {
  if (order.empty()) {
    auto r = is_shifted(k);
    if (!r.shifted) throw ValidationError("complex is not shifted");
    order = r.witnesses.front();
  } else if (!is_shifted_for_order(k, order)) {
    throw ValidationError("complex is not shifted for the given vertex order");
  }
  WedgeBasis out;
  for (Mask s = 1; s <= k.full_mask() && k.full_mask() != 0; ++s) {
    Face j = k.to_face(s);
    int top = 0;
    for (int v : order)
      if (std::binary_search(j.begin(), j.end(), v)) top = v;
    for (const auto& i : k.full_subcomplex(j).missing_faces()) {
      if (!std::binary_search(i.begin(), i.end(), top)) continue;
      WhiteheadExpr w = nested_product(i, face_difference(j, i));
      out.entries.push_back({j, i, w, hurewicz_chain(w)});
    }
    if (s == k.full_mask()) break;
  }
  detail::check_basis(k, out);
  return out;
}

/// Same construction with caller-chosen fillings. K_J together with the filled missing faces
/// must have vanishing reduced integral homology (used in place of contractibility).
inline WedgeBasis fillable_wedge_basis(const SimplicialComplex& k, const std::map<Face, std::vector<Face>>& fillings) {
  WedgeBasis out;
  for (Mask s = 1; s <= k.full_mask() && k.full_mask() != 0; ++s) {
    Face j = k.to_face(s);
    auto kj = k.full_subcomplex(j);
    std::vector<Face> fill;
    if (auto it = fillings.find(j); it != fillings.end()) fill = it->second;
    auto mf = kj.missing_faces();
    for (const auto& i : fill)
      if (!std::binary_search(mf.begin(), mf.end(), i))
        throw ValidationError(face_to_string(i) + " is not a missing face of the full subcomplex on " + face_to_string(j));
    if (!reduced_homology(kj.with_faces(fill)).empty())
      throw ValidationError("filling of the full subcomplex on " + face_to_string(j) + " is not acyclic");
    for (const auto& i : fill) {
      WhiteheadExpr w = nested_product(i, face_difference(j, i));
      out.entries.push_back({j, i, w, hurewicz_chain(w)});
    }
    if (s == k.full_mask()) break;
  }
  detail::check_basis(k, out);
  return out;
}

}  // namespace zkw
