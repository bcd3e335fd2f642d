#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zkw/moment_angle/zk_complex.hpp"
#include "zkw/whitehead/products.hpp"

namespace zkw {

enum class ProductStatus { undefined, defined_trivial, defined_nontrivial };

inline std::string to_string(ProductStatus s) {
  switch (s) {
    case ProductStatus::undefined: return "undefined";
    case ProductStatus::defined_trivial: return "defined-trivial";
    case ProductStatus::defined_nontrivial: return "defined-nontrivial";
  }
  return "?";
}

/// True iff the Hurewicz chain is a chain of Z_K, a cycle, and not a boundary.
inline bool hurewicz_class_nonzero(const SimplicialComplex& k, const CellChain& h) {
  if (h.is_zero() || !is_zk_chain(k, h)) return false;
  if (!cellular_boundary(h).is_zero()) return false;
  return !zk_classify(k, h).is_boundary;
}

/// [mu_{i_1}, ..., mu_{i_p}]: defined iff dDelta(I) lies in K, trivial iff Delta(I) is a face.
inline ProductStatus single_product_status(const SimplicialComplex& k, const std::vector<int>& vertices) {
  Face i = make_face(vertices);
  if (i.size() < 2) throw ValidationError("a single product needs at least two vertices");
  for (int v : i)
    if (!k.has_label(v)) return ProductStatus::undefined;
  if (k.contains(i)) return ProductStatus::defined_trivial;
  if (!is_subcomplex(SimplicialComplex::simplex_boundary(i), k)) return ProductStatus::undefined;
  if (!hurewicz_class_nonzero(k, single_bracket_chain(i)))
    throw VerificationError("Hurewicz class of a defined nontrivial single product vanished");
  return ProductStatus::defined_nontrivial;
}

/// Shape [w_1, ..., w_q, mu_{i_1}, ..., mu_{i_p}] with each w_j a bracket of leaves.
inline bool has_nested_shape(const WhiteheadExpr& w) {
  if (w.is_leaf()) return false;
  for (const auto* c : w.bracket_children())
    if (!c->bracket_children().empty()) return false;
  return true;
}

/// Exact status for the two-level shape: defined iff dDelta_w is a subcomplex, trivial iff the
/// join dDelta_{w_1} * ... * dDelta_{w_q} * Delta(i_1..i_p) is. The inner products must be
/// nontrivial in K. The answer is cross-checked against the Hurewicz class when p >= 1.
inline ProductStatus nested_shape_status(const SimplicialComplex& k, const WhiteheadExpr& w) {
  if (!has_nested_shape(w)) throw ValidationError("expression is not of the form [w_1..w_q, mu..] with single w_j");
  for (int v : leaves(w))
    if (!k.has_label(v)) return ProductStatus::undefined;
  for (const auto* c : w.bracket_children()) {
    auto inner = single_product_status(k, c->leaf_children());
    if (inner == ProductStatus::undefined) return ProductStatus::undefined;
    if (inner == ProductStatus::defined_trivial)
      throw ValidationError("inner product " + to_string(*c) + " is trivial in K");
  }
  if (!is_subcomplex(delta_w(w), k)) return ProductStatus::undefined;

  SimplicialComplex full;
  for (const auto* c : w.bracket_children()) full = join(full, SimplicialComplex::simplex_boundary(c->leaf_children()));
  auto ls = w.leaf_children();
  if (!ls.empty()) full = join(full, SimplicialComplex::simplex(ls));
  ProductStatus status =
      is_subcomplex(full, k) ? ProductStatus::defined_trivial : ProductStatus::defined_nontrivial;

  if (!ls.empty()) {
    bool nonzero = hurewicz_class_nonzero(k, hurewicz_chain(w));
    if (nonzero != (status == ProductStatus::defined_nontrivial))
      throw VerificationError("subcomplex criterion and Hurewicz class disagree for " + to_string(w));
  }
  return status;
}

enum class Verdict { yes, no, unknown };

inline std::string to_string(Verdict v) { return v == Verdict::yes ? "yes" : v == Verdict::no ? "no" : "unknown"; }

struct RealisationReport {
  Verdict defined = Verdict::unknown;
  Verdict nontrivial = Verdict::unknown;
  std::optional<CellChain> witness;  // h_c(w) when it is a nonzero class
  std::string method;                // which criterion produced the answer
};

/// Sufficient criteria for K to realise w. Leaves are fixed: the embedding of dDelta_w is the
/// identity on labels.
inline RealisationReport realises_sufficient(const SimplicialComplex& k, const WhiteheadExpr& w) {
  validate(w);
  RealisationReport r;
  // Z_K is contractible exactly when K is a full simplex
  const bool contractible = k.facet_masks().size() == 1 && k.facet_masks().front() == k.full_mask();

  if (has_nested_shape(w)) {
    try {
      ProductStatus s = nested_shape_status(k, w);
      r.method = "two-level subcomplex criterion";
      r.defined = s == ProductStatus::undefined ? Verdict::no : Verdict::yes;
      if (s == ProductStatus::defined_trivial) r.nontrivial = Verdict::no;
      if (s == ProductStatus::defined_nontrivial) r.nontrivial = Verdict::yes;
      if (s == ProductStatus::undefined && contractible) r.nontrivial = Verdict::no;
      if (s == ProductStatus::defined_nontrivial && !w.leaf_children().empty()) r.witness = hurewicz_chain(w);
      return r;
    } catch (const ValidationError&) {
      // hypothesis of the exact criterion fails; fall through
    }
  }

  bool leaves_present = true;
  for (int v : leaves(w)) leaves_present = leaves_present && k.has_label(v);
  if (leaves_present && is_subcomplex(delta_w(w), k)) {
    r.defined = Verdict::yes;
    CellChain h = hurewicz_chain(w);
    if (hurewicz_class_nonzero(k, h)) {
      r.nontrivial = Verdict::yes;
      r.witness = h;
      r.method = "canonical complex embeds; Hurewicz class nonzero";
      return r;
    }
    r.method = "canonical complex embeds; Hurewicz class zero";
  } else {
    r.method = "canonical complex does not embed";
  }
  if (contractible) {
    r.nontrivial = Verdict::no;
    r.method += "; Z_K has no reduced homology";
  }
  return r;
}

}  // namespace zkw
