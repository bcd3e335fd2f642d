#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "zkw/complexes/builder.hpp"
#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/whitehead/expr.hpp"

namespace zkw::testing {

inline SimplicialComplex figure_one() {
  return SimplicialComplex::from_facets(
      5, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {4, 5}});
}

inline SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(
      6, {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

/// bd(bd(1,2,3),4,5,6) with the triangle 123 filled in.
inline SimplicialComplex ten_sphere_complex() {
  std::vector<Face> facets{{1, 2, 3}, {4, 5, 6}};
  for (auto e : std::vector<Face>{{1, 2}, {1, 3}, {2, 3}})
    for (auto f : std::vector<Face>{{4, 5}, {4, 6}, {5, 6}}) facets.push_back({e[0], e[1], f[0], f[1]});
  return SimplicialComplex::from_facets(6, facets);
}

/// Random complex on 1..m: closure of a few random facets.
inline SimplicialComplex random_complex(int m, std::mt19937& rng, int max_facets = 5) {
  std::vector<Face> facets;
  int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_facets));
  for (int i = 0; i < count; ++i) {
    Face f;
    for (int v = 1; v <= m; ++v)
      if (rng() % 2) f.push_back(v);
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(m, facets);
}

/// Every subset of {1..m} as a face list, brute force.
inline std::set<Face> all_subsets(const std::vector<int>& labels) {
  std::set<Face> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << labels.size()); ++mask) {
    Face f;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (mask >> i & 1) f.push_back(labels[i]);
    out.insert(f);
  }
  return out;
}

/// Minimal non-faces by checking every subset.
inline std::vector<Face> brute_missing_faces(const SimplicialComplex& k) {
  std::vector<Face> out;
  for (const auto& f : all_subsets(k.labels())) {
    if (k.contains(f)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + static_cast<long>(i));
      minimal = minimal && k.contains(g);
    }
    if (minimal) out.push_back(f);
  }
  return out;
}

/// Faces of K(K_1..K_m) straight from the defining set formula.
inline std::set<Face> brute_substitution(const SimplicialComplex& k, const std::vector<SimplicialComplex>& parts) {
  std::set<Face> out;
  std::vector<int> all;
  for (auto& p : parts) all = face_union(all, p.labels());
  for (const auto& f : all_subsets(all)) {
    Face slots;
    bool ok = true;
    for (std::size_t i = 0; i < parts.size() && ok; ++i) {
      Face piece = face_intersection(f, parts[i].labels());
      if (piece.empty()) continue;
      ok = parts[i].contains(piece);
      slots.push_back(k.labels()[i]);
    }
    if (ok && k.contains(slots)) out.insert(f);
  }
  return out;
}

/// Random shifted complex for the order 1 < 2 < ... < m: closure of random faces under
/// replacing a vertex by a larger one.
inline SimplicialComplex random_shifted_complex(int m, std::mt19937& rng) {
  std::set<Face> faces;
  int seeds = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < seeds; ++t) {
    Face f;
    for (int v = 1; v <= m; ++v)
      if (rng() % 3 == 0) f.push_back(v);
    faces.insert(f);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Face> snapshot(faces.begin(), faces.end());
    for (const auto& f : snapshot)
      for (int i : f)
        for (int j = i + 1; j <= m; ++j) {
          if (std::binary_search(f.begin(), f.end(), j)) continue;
          Face g = face_union(face_difference(f, {i}), {j});
          grew = faces.insert(g).second || grew;
        }
  }
  return SimplicialComplex::from_facets(m, {faces.begin(), faces.end()});
}

/// Random bracket over the given leaves; every bracket keeps at least one leaf argument.
inline WhiteheadExpr random_expr(std::vector<int> pool, std::mt19937& rng, int depth) {
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<WhiteheadExpr> children;
  std::size_t pos = 0;
  if (depth > 1 && pool.size() >= 4) {
    int subs = 1 + static_cast<int>(rng() % 2);
    for (int s = 0; s < subs && pool.size() - pos >= 3; ++s) {
      std::size_t take = 2 + rng() % std::min<std::size_t>(3, pool.size() - pos - 2);
      children.push_back(random_expr({pool.begin() + static_cast<long>(pos), pool.begin() + static_cast<long>(pos + take)}, rng, depth - 1));
      pos += take;
    }
  }
  for (; pos < pool.size(); ++pos) children.push_back(WhiteheadExpr::mu(pool[pos]));
  if (children.size() < 2) return random_expr(pool, rng, 1);
  return normalised(WhiteheadExpr::bracket(std::move(children)));
}

/// Random nested product on 1..leaves with at most `depth` bracket levels.
inline WhiteheadExpr random_nested(int leaf_count, int depth, std::mt19937& rng) {
  std::vector<int> pool;
  for (int v = 1; v <= leaf_count; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  int levels = std::min(depth, 1 + static_cast<int>(rng() % static_cast<unsigned>(depth)));
  while (levels > 1 && 2 + (levels - 1) > leaf_count) --levels;
  // innermost bracket takes at least two leaves, each outer level at least one
  std::vector<int> sizes(static_cast<std::size_t>(levels), 1);
  sizes[0] = 2;
  for (int extra = leaf_count - 1 - levels; extra > 0; --extra) ++sizes[rng() % sizes.size()];
  std::size_t pos = 0;
  std::vector<WhiteheadExpr> inner;
  for (int t = 0; t < sizes[0]; ++t) inner.push_back(WhiteheadExpr::mu(pool[pos++]));
  WhiteheadExpr w = WhiteheadExpr::bracket(std::move(inner));
  for (std::size_t l = 1; l < sizes.size(); ++l) {
    std::vector<WhiteheadExpr> c{std::move(w)};
    for (int t = 0; t < sizes[l]; ++t) c.push_back(WhiteheadExpr::mu(pool[pos++]));
    w = WhiteheadExpr::bracket(std::move(c));
  }
  return normalised(std::move(w));
}

/// bd(bd(1,2,3), bd(4,5,6), 7, 8)
inline SimplicialComplex eight_vertex_complex() {
  return parse_complex("subst(bd(simplex(1,2,3,4)); bd(simplex(1,2,3)), bd(simplex(4,5,6)), pt, pt)");
}

/// Rows of the table of Whitehead products on the Figure-1 complex: expression, printed
/// cellular cycle, printed Taylor cycle.
struct TableRow {
  const char* w;
  const char* koszul;
  const char* taylor;
};

inline const std::vector<TableRow>& table_one() {
  static const std::vector<TableRow> rows{
      {"[1,2,3]", "D1D2S3 + D1S2D3 + S1D2D3", "w123"},
      {"[1,4,5]", "D1D4S5 + D1S4D5 + S1D4D5", "w145"},
      {"[2,4,5]", "D2D4S5 + D2S4D5 + S2D4D5", "w245"},
      {"[3,4,5]", "D3D4S5 + D3S4D5 + S3D4D5", "w345"},
      {"[[1,4,5],2]", "(D1D4S5 + D1S4D5 + S1D4D5)S2", "w245^w145"},
      {"[[1,4,5],3]", "(D1D4S5 + D1S4D5 + S1D4D5)S3", "w345^w145"},
      {"[[2,4,5],3]", "(D2D4S5 + D2S4D5 + S2D4D5)S3", "w345^w245"},
      {"[[[1,4,5],2],3]", "(D1D4S5 + D1S4D5 + S1D4D5)S2S3", "(w123 + w345)^w245^w145"},
      {"[[1,2,3],4,5]", "(D1D2S3 + D1S2D3 + S1D2D3)(D4S5+S4D5)", "(w145+w245+w345)^w123"},
  };
  return rows;
}

}  // namespace zkw::testing
