#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/exactalg/chain_complex.hpp"

namespace zkw {

/// Augmented simplicial chain complex: a face with k+1 vertices sits in degree k, the empty
/// face in degree -1. Within a degree, faces are listed lexicographically.
inline ChainComplex<Face> reduced_chain_complex(const SimplicialComplex& k) {
  std::map<int, std::vector<Face>> by_degree;
  for (auto& f : k.faces()) by_degree[static_cast<int>(f.size()) - 1].push_back(f);
  ChainComplex<Face> c;
  for (auto& [d, faces] : by_degree) {
    std::sort(faces.begin(), faces.end());
    c.set_basis(d, faces);
  }
  for (const auto& [d, faces] : by_degree) {
    if (d < 0) continue;
    IntMatrix m(c.rank(d - 1), faces.size());
    for (std::size_t col = 0; col < faces.size(); ++col)
      for (std::size_t i = 0; i < faces[col].size(); ++i) {
        Face g = faces[col];
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        m.set(*c.index_of(d - 1, g), col, i % 2 == 0 ? 1 : -1);
      }
    c.set_differential(d, std::move(m));
  }
  return c;
}

/// Simplicial boundary of a chain of faces.
inline Chain<Face> simplicial_boundary(const Chain<Face>& c) {
  Chain<Face> out;
  out.degree = c.degree - 1;
  for (const auto& [f, x] : c.coefficients)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(g, i % 2 == 0 ? x : Integer(-x));
    }
  return out;
}

/// Nonzero reduced homology groups of K, keyed by degree (degree -1 only for K = {empty face}).
inline std::map<int, HomologyGroup> reduced_homology(const SimplicialComplex& k) {
  return homology_table(reduced_chain_complex(k));
}

}  // namespace zkw
