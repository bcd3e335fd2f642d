#pragma once

#include <map>
#include <vector>

#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/exactalg/chain_complex.hpp"
#include "zkw/moment_angle/cells.hpp"

namespace zkw {

/// Direct sum of finitely generated abelian groups, torsion in invariant-factor form.
inline HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  HomologyGroup out;
  out.rank = a.rank + b.rank;
  IntVector t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  if (t.empty()) return out;
  IntMatrix diag(t.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) diag.set(i, i, t[i]);
  out.torsion = smith_normal_form(diag, {false, false, false}).torsion();
  return out;
}

inline void accumulate(std::map<int, HomologyGroup>& table, int degree, const HomologyGroup& g) {
  if (g.is_zero()) return;
  table[degree] = direct_sum(table[degree], g);
}

inline LabelSet vertex_set(const SimplicialComplex& k) { return label_set(k.labels()); }

inline bool is_face(const SimplicialComplex& k, LabelSet s) {
  if (s & ~vertex_set(k)) return false;
  return k.contains(label_face(s));
}

namespace detail {

// Index mask of K <-> label set; complexes are small so a per-call table is fine.
struct LabelIndex {
  explicit LabelIndex(const SimplicialComplex& k) : labels(k.labels()) {}
  Mask to_mask(LabelSet s) const {
    Mask m = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (s & label_bit(labels[i])) m |= Mask{1} << i;
    return m;
  }
  LabelSet to_labels(Mask m) const {
    LabelSet s = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (m & (Mask{1} << i)) s |= label_bit(labels[i]);
    return s;
  }
  std::vector<int> labels;
};

inline void fill_cellular_differentials(ChainComplex<Cell>& c) {
  for (int d : c.degrees()) {
    if (c.rank(d - 1) == 0) continue;
    IntMatrix m(c.rank(d - 1), c.rank(d));
    const auto& basis = c.basis(d);
    for (std::size_t col = 0; col < basis.size(); ++col)
      for (const auto& [cell, x] : cellular_boundary(cell_chain(basis[col])).coefficients)
        m.set(*c.index_of(d - 1, cell), col, x);
    c.set_differential(d, std::move(m));
  }
}

}  // namespace detail

/// The summand of the cellular chains of Z_K spanned by the cells with I + J = support.
inline ChainComplex<Cell> zk_block(const SimplicialComplex& k, LabelSet support) {
  if (support & ~vertex_set(k)) throw ValidationError("block support uses vertices outside the complex");
  detail::LabelIndex idx(k);
  const Mask sm = idx.to_mask(support);
  std::map<int, std::vector<Cell>> by_degree;
  for (Mask i = sm;; i = (i - 1) & sm) {
    if (k.contains_mask(i)) {
      LabelSet d = idx.to_labels(i);
      Cell c{support & ~d, d};
      by_degree[c.degree()].push_back(c);
    }
    if (i == 0) break;
  }
  ChainComplex<Cell> c;
  for (auto& [deg, cells] : by_degree) {
    std::sort(cells.begin(), cells.end());
    c.set_basis(deg, std::move(cells));
  }
  detail::fill_cellular_differentials(c);
  return c;
}

/// Full cellular chain complex of Z_K (all 2^m blocks at once; meant for small m).
inline ChainComplex<Cell> zk_chain_complex(const SimplicialComplex& k) {
  constexpr std::size_t kMaxFull = 12;
  if (k.vertex_count() > kMaxFull)
    throw SizeLimitError("zk_chain_complex materialises 3^m cells; use the blockwise homology", kMaxFull);
  detail::LabelIndex idx(k);
  std::map<int, std::vector<Cell>> by_degree;
  const Mask full = k.full_mask();
  for (Mask i : k.face_masks()) {
    const Mask rest = full & ~i;
    for (Mask j = rest;; j = (j - 1) & rest) {
      Cell c{idx.to_labels(j), idx.to_labels(i)};
      by_degree[c.degree()].push_back(c);
      if (j == 0) break;
    }
  }
  ChainComplex<Cell> c;
  for (auto& [deg, cells] : by_degree) {
    std::sort(cells.begin(), cells.end());
    c.set_basis(deg, std::move(cells));
  }
  detail::fill_cellular_differentials(c);
  if (!c.d_squared_is_zero()) throw VerificationError("cellular differential does not square to zero");
  return c;
}

/// Integral homology of Z_K (unreduced: degree 0 carries Z), computed block by block.
inline std::map<int, HomologyGroup> zk_homology(const SimplicialComplex& k) {
  constexpr std::size_t kMaxVertices = 20;
  if (k.vertex_count() > kMaxVertices) throw SizeLimitError("zk_homology vertex count", kMaxVertices);
  std::map<int, HomologyGroup> out;
  detail::LabelIndex idx(k);
  for (Mask s = 0;; ++s) {
    auto block = zk_block(k, idx.to_labels(s));
    for (const auto& [deg, g] : homology_table(block)) accumulate(out, deg, g);
    if (s == k.full_mask()) break;
  }
  return out;
}

/// Homology with the degree-0 summand removed.
inline std::map<int, HomologyGroup> reduced(std::map<int, HomologyGroup> table) {
  if (auto it = table.find(0); it != table.end()) {
    if (it->second.rank > 0) --it->second.rank;
    if (it->second.is_zero()) table.erase(it);
  }
  return table;
}

/// Class of a cellular cycle, computed separately in every multidegree block it touches.
struct ZkClass {
  bool is_boundary = true;
  std::map<LabelSet, HomologyClass> blocks;
};

/// True iff every cell of `z` is a cell of Z_K (its D-set is a face, sets disjoint).
inline bool is_zk_chain(const SimplicialComplex& k, const CellChain& z) {
  for (const auto& [cell, x] : z.coefficients)
    if ((cell.s & cell.d) || (cell.s & ~vertex_set(k)) || !is_face(k, cell.d)) return false;
  return true;
}

inline ZkClass zk_classify(const SimplicialComplex& k, const CellChain& z) {
  if (!is_zk_chain(k, z)) throw ValidationError("chain is not supported on cells of Z_K");
  std::map<LabelSet, CellChain> parts;
  for (const auto& [cell, x] : z.coefficients) {
    auto& p = parts[cell.support()];
    p.degree = z.degree;
    p.add(cell, x);
  }
  ZkClass out;
  for (const auto& [support, part] : parts) {
    auto block = zk_block(k, support);
    auto cls = HomologyPresentation<Cell>(block, z.degree).classify(part);
    out.is_boundary = out.is_boundary && cls.is_boundary;
    out.blocks.emplace(support, std::move(cls));
  }
  return out;
}

}  // namespace zkw
