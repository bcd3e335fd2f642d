#pragma once

#include <map>
#include <utility>
#include <vector>

#include "zkw/complexes/simplicial_homology.hpp"
#include "zkw/moment_angle/zk_complex.hpp"

namespace zkw {

/// Parity sign of shuffling L into J - L: (-1)^{#{(l, j) : l in L, j in J - L, j < l}}.
inline int shuffle_sign(LabelSet l, LabelSet j) {
  int count = 0;
  for (LabelSet t = l; t; t &= t - 1) count += count_below(j & ~l, std::countr_zero(t) + 1);
  return count % 2 ? -1 : 1;
}

/// Sends a simplex L of K_J to eps(L) * sign(L, J) * kappa(J - L, L), where
/// eps(L) = (-1)^{|L|(|L|-1)/2}. The extra eps makes the map commute with the differentials.
inline CellChain hochster_embed(const SimplicialComplex& k, const Face& j, const Chain<Face>& c) {
  const LabelSet js = label_set(make_face(j));
  CellChain out;
  out.degree = c.degree + 1 + static_cast<int>(j.size());
  for (const auto& [f, x] : c.coefficients) {
    LabelSet l = label_set(f);
    if ((l & ~js) || !is_face(k, l))
      throw ValidationError("simplex " + face_to_string(f) + " is not a face of the full subcomplex");
    const int size = label_count(l);
    int sign = shuffle_sign(l, js) * ((size * (size - 1) / 2) % 2 ? -1 : 1);
    out.add(Cell{js & ~l, l}, sign * x);
  }
  return out;
}

struct HochsterTable {
  /// (J, simplicial degree) -> reduced homology of K_J; only nonzero groups are kept.
  std::map<std::pair<Face, int>, HomologyGroup> per_subset;
  /// H_{p-1}(K_J) placed in degree p + |J|.
  std::map<int, HomologyGroup> aggregate;
};

inline HochsterTable hochster_table(const SimplicialComplex& k) {
  constexpr std::size_t kMaxVertices = 20;
  if (k.vertex_count() > kMaxVertices) throw SizeLimitError("hochster_table vertex count", kMaxVertices);
  HochsterTable out;
  for (Mask s = 0;; ++s) {
    Face j = k.to_face(s);
    for (const auto& [deg, g] : reduced_homology(k.full_subcomplex(j))) {
      out.per_subset.emplace(std::pair{j, deg}, g);
      accumulate(out.aggregate, deg + 1 + static_cast<int>(j.size()), g);
    }
    if (s == k.full_mask()) break;
  }
  return out;
}

}  // namespace zkw
