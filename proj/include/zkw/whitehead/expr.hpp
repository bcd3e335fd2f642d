#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zkw/complexes/builder.hpp"
#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/errors.hpp"

namespace zkw {

/// Iterated higher Whitehead product: a leaf mu_i, or a bracket of at least two children.
struct WhiteheadExpr {
  int leaf = 0;
  std::vector<WhiteheadExpr> children;

  static WhiteheadExpr mu(int i) { return WhiteheadExpr{i, {}}; }
  static WhiteheadExpr bracket(std::vector<WhiteheadExpr> c) { return WhiteheadExpr{0, std::move(c)}; }

  bool is_leaf() const { return children.empty(); }
  bool operator==(const WhiteheadExpr&) const = default;

  /// Leaf children of a bracket, in order.
  std::vector<int> leaf_children() const {
    std::vector<int> out;
    for (const auto& c : children)
      if (c.is_leaf()) out.push_back(c.leaf);
    return out;
  }

  std::vector<const WhiteheadExpr*> bracket_children() const {
    std::vector<const WhiteheadExpr*> out;
    for (const auto& c : children)
      if (!c.is_leaf()) out.push_back(&c);
    return out;
  }
};

inline void collect_leaves(const WhiteheadExpr& w, std::vector<int>& out) {
  if (w.is_leaf()) {
    out.push_back(w.leaf);
    return;
  }
  for (const auto& c : w.children) collect_leaves(c, out);
}

/// All leaf labels, ascending.
inline Face leaves(const WhiteheadExpr& w) {
  std::vector<int> out;
  collect_leaves(w, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sub-brackets first, ordered by smallest leaf; then leaves ascending. Applied recursively.
inline WhiteheadExpr normalised(WhiteheadExpr w) {
  for (auto& c : w.children) c = normalised(std::move(c));
  std::stable_sort(w.children.begin(), w.children.end(), [](const WhiteheadExpr& a, const WhiteheadExpr& b) {
    if (a.is_leaf() != b.is_leaf()) return !a.is_leaf();
    return leaves(a).front() < leaves(b).front();
  });
  return w;
}

/// Checks bracket arity and leaf distinctness.
inline void validate(const WhiteheadExpr& w) {
  std::vector<int> all;
  collect_leaves(w, all);
  std::set<int> seen;
  for (int l : all) {
    if (l <= 0) throw ValidationError("leaf labels must be positive");
    if (!seen.insert(l).second) throw ValidationError("leaf " + std::to_string(l) + " appears twice");
  }
  auto check = [](auto&& self, const WhiteheadExpr& e) -> void {
    if (e.is_leaf()) return;
    if (e.children.size() < 2) throw ValidationError("a bracket needs at least two arguments");
    for (const auto& c : e.children) self(self, c);
  };
  check(check, w);
}

inline std::string to_string(const WhiteheadExpr& w) {
  if (w.is_leaf()) return std::to_string(w.leaf);
  std::string s = "[";
  for (std::size_t i = 0; i < w.children.size(); ++i) s += (i ? "," : "") + to_string(w.children[i]);
  return s + "]";
}

/// d(w) = d(w_1) + ... + d(w_q) + 2p - 1 for a bracket with q sub-brackets and p leaves.
inline int dimension(const WhiteheadExpr& w) {
  if (w.is_leaf()) throw ValidationError("a bare leaf has no dimension");
  int d = 2 * static_cast<int>(w.leaf_children().size()) - 1;
  for (const auto* c : w.bracket_children()) d += dimension(*c);
  return d;
}

/// Nested: every bracket has at most one sub-bracket.
inline bool is_nested(const WhiteheadExpr& w) {
  if (w.is_leaf()) return false;
  auto subs = w.bracket_children();
  if (subs.size() > 1) return false;
  return subs.empty() || is_nested(*subs.front());
}

/// Leaf sets by nesting level of a nested product, innermost first (I_1, I_2, ...).
inline std::vector<Face> nesting_levels(const WhiteheadExpr& w) {
  if (!is_nested(w)) throw ValidationError("expression is not a nested product");
  std::vector<Face> out;
  const WhiteheadExpr* e = &w;
  for (;;) {
    out.push_back(make_face(e->leaf_children()));
    auto subs = e->bracket_children();
    if (subs.empty()) break;
    e = subs.front();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace detail {

class WhiteheadParser {
 public:
  explicit WhiteheadParser(std::string_view text) : in_(text) {}

  WhiteheadExpr run() {
    WhiteheadExpr w = expr();
    in_.finish();
    return w;
  }

 private:
  WhiteheadExpr expr() {
    if (!in_.accept('[')) {
      long long v = in_.integer();
      if (v <= 0) in_.fail("leaf labels must be positive");
      return WhiteheadExpr::mu(static_cast<int>(v));
    }
    std::vector<WhiteheadExpr> children;
    do children.push_back(expr());
    while (in_.accept(','));
    if (children.size() < 2) in_.fail("a bracket needs at least two arguments");
    in_.expect(']');
    return WhiteheadExpr::bracket(std::move(children));
  }

  TextCursor in_;
};

}  // namespace detail

/// Parses nested integer lists such as `[[1,2,3],4,5]` and returns the normalised tree.
inline WhiteheadExpr parse_whitehead(std::string_view text) {
  WhiteheadExpr w = detail::WhiteheadParser(text).run();
  validate(w);
  return normalised(std::move(w));
}

}  // namespace zkw
