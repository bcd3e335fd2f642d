#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zkw/errors.hpp"

namespace zkw {

/// A face: strictly increasing vertex labels. The empty vector is the empty face.
using Face = std::vector<int>;
/// Subset of a complex's vertices as a bit mask over vertex indices (not labels).
using Mask = std::uint32_t;

inline std::string face_to_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

/// Sorts and checks a vertex list; throws on duplicates or non-positive labels.
inline Face make_face(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) throw ValidationError("vertex labels must be positive, got " + std::to_string(v[i]));
    if (i > 0 && v[i] == v[i - 1]) throw ValidationError("duplicate vertex " + std::to_string(v[i]) + " in face");
  }
  return v;
}

inline bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Simplicial complex on a finite set of positive vertex labels. Always contains the empty
/// face and every singleton. Immutable after construction; membership is answered from a
/// 2^m bit table over vertex indices.
class SimplicialComplex {
 public:
  static constexpr std::size_t kMaxVertices = 24;

  SimplicialComplex() : SimplicialComplex(std::vector<int>{}, {}) {}

  /// Downward closure of `facets` on the labels 1..m.
  static SimplicialComplex from_facets(int m, const std::vector<Face>& facets) {
    if (m < 0) throw ValidationError("vertex count must be non-negative");
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    return SimplicialComplex(std::move(labels), facets);
  }

  /// Downward closure of `facets` on an explicit label set.
  static SimplicialComplex from_facets(std::vector<int> labels, const std::vector<Face>& facets) {
    return SimplicialComplex(make_face(std::move(labels)), facets);
  }

  /// The complex whose minimal non-faces are exactly `missing` (each of size >= 2).
  static SimplicialComplex from_missing_faces(std::vector<int> labels, const std::vector<Face>& missing) {
    SimplicialComplex shell(make_face(std::move(labels)), {});
    std::vector<Mask> bad;
    for (const auto& f : missing) {
      if (f.size() < 2) throw ValidationError("missing faces must have at least two vertices");
      bad.push_back(shell.to_mask(f));
    }
    std::vector<Face> faces;
    const Mask full = shell.full_mask();
    for (Mask s = 0;; ++s) {
      bool ok = std::none_of(bad.begin(), bad.end(), [s](Mask b) { return (s & b) == b; });
      if (ok) faces.push_back(shell.to_face(s));
      if (s == full) break;
    }
    return SimplicialComplex(shell.labels_, faces);
  }

  static SimplicialComplex simplex(const std::vector<int>& labels) {
    Face f = make_face(labels);
    return SimplicialComplex(f, {f});
  }

  static SimplicialComplex simplex_boundary(const std::vector<int>& labels) {
    Face f = make_face(labels);
    std::vector<Face> facets;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      facets.push_back(g);
    }
    return SimplicialComplex(f, facets);
  }

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  Mask full_mask() const { return labels_.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << labels_.size()) - 1); }

  bool has_label(int l) const { return std::binary_search(labels_.begin(), labels_.end(), l); }

  std::size_t index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
      throw ValidationError("vertex " + std::to_string(label) + " is not in the complex");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  Mask to_mask(const Face& f) const {
    Mask m = 0;
    for (int l : f) m |= Mask{1} << index_of(l);
    return m;
  }

  Face to_face(Mask m) const {
    Face f;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (m & (Mask{1} << i)) f.push_back(labels_[i]);
    return f;
  }

  bool contains_mask(Mask m) const { return (table_[m >> 6] >> (m & 63)) & 1u; }

  bool contains(const Face& f) const {
    for (int l : f)
      if (!has_label(l)) return false;
    return contains_mask(to_mask(f));
  }

  /// Maximal faces in lexicographic order.
  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (Mask m : facet_masks_) out.push_back(to_face(m));
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<Mask>& facet_masks() const { return facet_masks_; }

  /// All faces including the empty one, as masks in increasing numeric order.
  std::vector<Mask> face_masks() const {
    std::vector<Mask> out;
    const Mask full = full_mask();
    for (Mask s = 0;; ++s) {
      if (contains_mask(s)) out.push_back(s);
      if (s == full) break;
    }
    return out;
  }

  /// All faces ordered by (size, lexicographic).
  std::vector<Face> faces() const {
    std::vector<Face> out;
    for (Mask m : face_masks()) out.push_back(to_face(m));
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  std::size_t face_count() const { return face_count_; }

  /// Dimension (largest face size minus one); -1 for the complex {empty face}.
  int dimension() const {
    int d = -1;
    for (Mask m : facet_masks_) d = std::max(d, std::popcount(m) - 1);
    return d;
  }

  /// Minimal non-faces, sorted lexicographically.
  std::vector<Face> missing_faces() const {
    std::set<Mask> found;
    for (Mask f : face_masks())
      for (std::size_t v = 0; v < labels_.size(); ++v) {
        Mask bit = Mask{1} << v;
        if (f & bit) continue;
        Mask c = f | bit;
        if (contains_mask(c) || found.count(c)) continue;
        bool minimal = true;
        for (Mask r = c; r && minimal; r &= r - 1) minimal = contains_mask(c & ~(r & (~r + 1)));
        if (minimal) found.insert(c);
      }
    std::vector<Face> out;
    for (Mask m : found) out.push_back(to_face(m));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Faces contained in the vertex subset `subset`, on the label set `subset`.
  SimplicialComplex full_subcomplex(const std::vector<int>& subset) const {
    Face j = make_face(subset);
    Mask jm = to_mask(j);
    std::vector<Face> facets;
    for (Mask f : facet_masks_) facets.push_back(to_face(f & jm));
    return SimplicialComplex(j, facets);
  }

  /// Adds faces whose proper subsets are already present (e.g. filling missing faces).
  SimplicialComplex with_faces(const std::vector<Face>& extra) const {
    std::vector<Face> fs = facets();
    fs.insert(fs.end(), extra.begin(), extra.end());
    return SimplicialComplex(labels_, fs);
  }

  /// Removes one facet, keeping all its proper faces. An isolated vertex takes its label with it.
  SimplicialComplex without_facet(const Face& facet) const {
    Mask fm = to_mask(facet);
    if (std::find(facet_masks_.begin(), facet_masks_.end(), fm) == facet_masks_.end())
      throw ValidationError(face_to_string(facet) + " is not a facet");
    std::vector<Face> fs;
    for (Mask m : facet_masks_)
      if (m != fm) fs.push_back(to_face(m));
    if (facet.size() == 1) {
      std::vector<int> ls;
      for (int l : labels_)
        if (l != facet[0]) ls.push_back(l);
      return SimplicialComplex(ls, fs);
    }
    for (Mask r = fm; r; r &= r - 1) fs.push_back(to_face(fm & ~(r & (~r + 1))));
    return SimplicialComplex(labels_, fs);
  }

  /// Applies an injective relabelling old label -> new label.
  SimplicialComplex relabelled(const std::map<int, int>& to) const {
    std::vector<int> new_labels;
    for (int l : labels_) new_labels.push_back(to.at(l));
    std::vector<Face> fs;
    for (Mask m : facet_masks_) {
      Face f;
      for (int l : to_face(m)) f.push_back(to.at(l));
      fs.push_back(make_face(f));
    }
    return SimplicialComplex(make_face(new_labels), fs);
  }

  bool operator==(const SimplicialComplex& o) const { return labels_ == o.labels_ && facets() == o.facets(); }

 private:
  SimplicialComplex(std::vector<int> labels, const std::vector<Face>& facets) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxVertices)
      throw SizeLimitError("simplicial complex has " + std::to_string(labels_.size()) + " vertices", kMaxVertices);
    const std::size_t bits = std::size_t{1} << labels_.size();
    table_.assign((bits + 63) / 64, 0);
    std::vector<Mask> gens;
    for (const auto& f : facets) {
      for (int l : make_face(f))
        if (!has_label(l)) throw ValidationError("vertex " + std::to_string(l) + " out of range");
      gens.push_back(to_mask(f));
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) gens.push_back(Mask{1} << i);
    gens.push_back(0);
    for (Mask g : gens) {
      if (contains_mask(g)) continue;
      // every submask of g
      for (Mask s = g;; s = (s - 1) & g) {
        set_bit(s);
        if (s == 0) break;
      }
    }
    for (Mask s = 0;; ++s) {
      if (contains_mask(s)) {
        ++face_count_;
        bool maximal = true;
        for (std::size_t v = 0; v < labels_.size() && maximal; ++v) {
          Mask bit = Mask{1} << v;
          if (!(s & bit) && contains_mask(s | bit)) maximal = false;
        }
        if (maximal) facet_masks_.push_back(s);
      }
      if (s == full_mask()) break;
    }
  }

  void set_bit(Mask m) { table_[m >> 6] |= std::uint64_t{1} << (m & 63); }

  std::vector<int> labels_;
  std::vector<std::uint64_t> table_;
  std::vector<Mask> facet_masks_;
  std::size_t face_count_ = 0;
};

/// Join of complexes on disjoint label sets.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (int l : a.labels())
    if (b.has_label(l)) throw ValidationError("join: vertex " + std::to_string(l) + " appears in both complexes");
  std::vector<int> labels = face_union(a.labels(), b.labels());
  std::vector<Face> facets;
  for (const auto& fa : a.facets())
    for (const auto& fb : b.facets()) facets.push_back(face_union(fa, fb));
  return SimplicialComplex::from_facets(labels, facets);
}

/// Substitution K(K_1, ..., K_m): parts[i] replaces the i-th vertex (in label order) of K.
/// Parts must use pairwise disjoint labels; they are kept as given.
inline SimplicialComplex substitute(const SimplicialComplex& k, const std::vector<SimplicialComplex>& parts) {
  if (parts.size() != k.vertex_count())
    throw ValidationError("substitute: expected " + std::to_string(k.vertex_count()) + " parts");
  std::vector<int> labels;
  for (const auto& p : parts) {
    for (int l : p.labels())
      if (std::binary_search(labels.begin(), labels.end(), l))
        throw ValidationError("substitute: parts share vertex " + std::to_string(l));
    labels = face_union(labels, p.labels());
  }
  std::vector<Face> facets;
  for (Mask sigma : k.facet_masks()) {
    std::vector<Face> acc{Face{}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!(sigma & (Mask{1} << i))) continue;
      std::vector<Face> next;
      for (const auto& partial : acc)
        for (const auto& f : parts[i].facets()) next.push_back(face_union(partial, f));
      acc = std::move(next);
    }
    facets.insert(facets.end(), acc.begin(), acc.end());
  }
  return SimplicialComplex::from_facets(labels, facets);
}

struct RelabelledSubstitution {
  SimplicialComplex complex;
  std::vector<std::map<int, int>> label_maps;  // per part: original label -> new label
};

/// Substitution after moving part i onto the contiguous label block following part i-1.
inline RelabelledSubstitution substitute_relabelled(const SimplicialComplex& k,
                                                    const std::vector<SimplicialComplex>& parts) {
  RelabelledSubstitution out;
  std::vector<SimplicialComplex> moved;
  int next = 1;
  for (const auto& p : parts) {
    std::map<int, int> m;
    for (int l : p.labels()) m[l] = next++;
    moved.push_back(p.relabelled(m));
    out.label_maps.push_back(std::move(m));
  }
  out.complex = substitute(k, moved);
  return out;
}

/// Missing faces of K(K_1, ..., K_m) from those of K and of the parts.
inline std::vector<Face> substitution_missing_faces(const SimplicialComplex& k,
                                                    const std::vector<SimplicialComplex>& parts) {
  if (parts.size() != k.vertex_count())
    throw ValidationError("substitution_missing_faces: expected " + std::to_string(k.vertex_count()) + " parts");
  std::set<Face> out;
  for (const auto& p : parts)
    for (auto& f : p.missing_faces()) out.insert(f);
  for (const auto& mf : k.missing_faces()) {
    std::vector<Face> acc{Face{}};
    for (int slot : mf) {
      const auto& part = parts[k.index_of(slot)];
      std::vector<Face> next;
      for (const auto& partial : acc)
        for (int v : part.labels()) next.push_back(face_union(partial, {v}));
      acc = std::move(next);
    }
    out.insert(acc.begin(), acc.end());
  }
  return {out.begin(), out.end()};
}

/// True iff every face of `small` maps to a face of `big` under `labelling`
/// (missing entries map a label to itself).
inline bool is_subcomplex(const SimplicialComplex& small, const SimplicialComplex& big,
                          const std::map<int, int>& labelling = {}) {
  for (const auto& f : small.facets()) {
    Face g;
    for (int l : f) {
      auto it = labelling.find(l);
      g.push_back(it == labelling.end() ? l : it->second);
    }
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end()) return false;
    if (!big.contains(g)) return false;
  }
  return true;
}

struct ShiftedResult {
  bool shifted = false;
  std::vector<std::vector<int>> witnesses;  // vertex orders, smallest first
};

/// Checks the shifting condition for one vertex order (labels listed smallest first):
/// I in K, i in I, j > i, j not in I  implies  (I - i) + j in K.
inline bool is_shifted_for_order(const SimplicialComplex& k, const std::vector<int>& order) {
  if (make_face(order) != k.labels()) throw ValidationError("shifted order must list every vertex once");
  std::vector<std::size_t> idx;
  for (int l : order) idx.push_back(k.index_of(l));
  for (Mask f : k.face_masks())
    for (std::size_t a = 0; a < idx.size(); ++a) {
      Mask ia = Mask{1} << idx[a];
      if (!(f & ia)) continue;
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        Mask jb = Mask{1} << idx[b];
        if (f & jb) continue;
        if (!k.contains_mask((f & ~ia) | jb)) return false;
      }
    }
  return true;
}

/// Exhaustive search over vertex orders; restricted to at most 7 vertices.
inline ShiftedResult is_shifted(const SimplicialComplex& k) {
  constexpr std::size_t kMaxBruteForce = 7;
  if (k.vertex_count() > kMaxBruteForce)
    throw SizeLimitError("is_shifted needs an explicit vertex order above 7 vertices", kMaxBruteForce);
  ShiftedResult r;
  std::vector<int> order = k.labels();
  do {
    if (is_shifted_for_order(k, order)) r.witnesses.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  r.shifted = !r.witnesses.empty();
  return r;
}

}  // namespace zkw
