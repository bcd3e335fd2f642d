#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zkw/complexes/builder.hpp"
#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/exactalg/chain_complex.hpp"
#include "zkw/moment_angle/cells.hpp"
#include "zkw/moment_angle/zk_complex.hpp"
#include "zkw/whitehead/expr.hpp"

namespace zkw {

/// Exterior monomial w_{J_1} ^ ... ^ w_{J_s} as a set of generator indices (ascending order).
using GeneratorSet = std::uint32_t;

/// Taylor chain: Chain over exterior monomials; `degree` is the total degree 2|S| - s.
using TaylorChain = Chain<GeneratorSet>;

/// Sign of w_F ^ W after sorting F into the ascending word W.
inline int insertion_sign(GeneratorSet w, int f) {
  return std::popcount(w & ((GeneratorSet{1} << f) - 1)) % 2 ? -1 : 1;
}

/// Coalgebraic Taylor complex of the face coalgebra of K. Generators are the missing faces
/// sorted by (size, lex).
class TaylorComplex {
 public:
  static constexpr std::size_t kMaxGenerators = 20;

  explicit TaylorComplex(const SimplicialComplex& k) : k_(k) {
    generators_ = k.missing_faces();
    std::stable_sort(generators_.begin(), generators_.end(),
                     [](const Face& a, const Face& b) { return a.size() < b.size(); });
    if (generators_.size() > kMaxGenerators) throw SizeLimitError("Taylor complex generator count", kMaxGenerators);
    for (const auto& g : generators_) supports_.push_back(label_set(g));
  }

  const SimplicialComplex& complex() const { return k_; }
  const std::vector<Face>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  LabelSet support(int f) const { return supports_[static_cast<std::size_t>(f)]; }

  std::optional<int> generator_index(const Face& f) const {
    auto it = std::find(generators_.begin(), generators_.end(), f);
    if (it == generators_.end()) return std::nullopt;
    return static_cast<int>(it - generators_.begin());
  }

  LabelSet union_of(GeneratorSet w) const {
    LabelSet u = 0;
    for (; w; w &= w - 1) u |= supports_[static_cast<std::size_t>(std::countr_zero(w))];
    return u;
  }

  int degree_of(GeneratorSet w) const { return 2 * label_count(union_of(w)) - std::popcount(w); }

  /// d W = sum over generators F outside W with F inside the union of W of w_F ^ W.
  TaylorChain differential(const TaylorChain& c) const {
    TaylorChain out;
    out.degree = c.degree - 1;
    for (const auto& [w, x] : c.coefficients) {
      LabelSet u = union_of(w);
      for (std::size_t f = 0; f < supports_.size(); ++f) {
        if (w >> f & 1 || (supports_[f] & ~u)) continue;
        int sign = insertion_sign(w, static_cast<int>(f));
        out.add(w | GeneratorSet{1} << f, sign < 0 ? Integer(-x) : x);
      }
    }
    return out;
  }

  /// The summand with union S, graded by total degree.
  ChainComplex<GeneratorSet> component(LabelSet s) const {
    std::vector<int> inside;
    for (std::size_t f = 0; f < supports_.size(); ++f)
      if ((supports_[f] & ~s) == 0) inside.push_back(static_cast<int>(f));
    std::map<int, std::vector<GeneratorSet>> by_degree;
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << inside.size()); ++sub) {
      GeneratorSet w = 0;
      for (std::size_t i = 0; i < inside.size(); ++i)
        if (sub >> i & 1) w |= GeneratorSet{1} << inside[i];
      if (union_of(w) == s) by_degree[degree_of(w)].push_back(w);
    }
    return build(by_degree);
  }

  /// All components keyed by union S.
  std::map<LabelSet, ChainComplex<GeneratorSet>> components() const {
    std::map<LabelSet, std::map<int, std::vector<GeneratorSet>>> groups;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << generators_.size()); ++w)
      groups[union_of(static_cast<GeneratorSet>(w))][degree_of(static_cast<GeneratorSet>(w))].push_back(
          static_cast<GeneratorSet>(w));
    std::map<LabelSet, ChainComplex<GeneratorSet>> out;
    for (auto& [s, by_degree] : groups) out.emplace(s, build(by_degree));
    return out;
  }

  /// Exterior monomials with s factors in lexicographic order of their index lists.
  std::vector<GeneratorSet> words(int s) const {
    std::vector<GeneratorSet> out;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << generators_.size()); ++w)
      if (std::popcount(w) == s) out.push_back(static_cast<GeneratorSet>(w));
    auto key = [](GeneratorSet w) {
      std::vector<int> v;
      for (; w; w &= w - 1) v.push_back(std::countr_zero(w));
      return v;
    };
    std::sort(out.begin(), out.end(), [&](GeneratorSet a, GeneratorSet b) { return key(a) < key(b); });
    return out;
  }

  /// The whole differential from s factors to s+1 factors; rows words(s+1), columns words(s).
  IntMatrix global_differential(int s) const {
    auto src = words(s), dst = words(s + 1);
    std::map<GeneratorSet, std::size_t> row;
    for (std::size_t r = 0; r < dst.size(); ++r) row[dst[r]] = r;
    IntMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      TaylorChain one;
      one.add(src[c], 1);
      for (const auto& [w, x] : differential(one).coefficients) m.set(row.at(w), c, x);
    }
    return m;
  }

 private:
  ChainComplex<GeneratorSet> build(std::map<int, std::vector<GeneratorSet>>& by_degree) const {
    ChainComplex<GeneratorSet> c;
    for (auto& [d, ws] : by_degree) c.set_basis(d, ws);
    for (const auto& [d, ws] : by_degree) {
      if (!by_degree.count(d - 1)) continue;
      IntMatrix m(c.rank(d - 1), ws.size());
      for (std::size_t col = 0; col < ws.size(); ++col) {
        TaylorChain one;
        one.add(ws[col], 1);
        for (const auto& [w, x] : differential(one).coefficients) m.set(*c.index_of(d - 1, w), col, x);
      }
      c.set_differential(d, std::move(m));
    }
    return c;
  }

  SimplicialComplex k_;
  std::vector<Face> generators_;
  std::vector<LabelSet> supports_;
};

/// Per-(S, s) homology of the Taylor complex, nonzero groups only.
struct TaylorHomology {
  std::map<std::pair<LabelSet, int>, HomologyGroup> per_component;
  std::map<int, HomologyGroup> by_degree;  // unreduced: degree 0 carries Z
};

inline TaylorHomology taylor_homology(const TaylorComplex& t) {
  TaylorHomology out;
  for (const auto& [s, c] : t.components())
    for (const auto& [d, g] : homology_table(c)) {
      out.per_component[{s, 2 * label_count(s) - d}] = g;
      accumulate(out.by_degree, d, g);
    }
  return out;
}

/// Wedge product in written order: w_A ^ w_B, sorted with sign; zero on a repeated generator.
inline TaylorChain wedge(const TaylorComplex& t, const TaylorChain& a, const TaylorChain& b) {
  TaylorChain out;
  for (const auto& [wa, xa] : a.coefficients)
    for (const auto& [wb, xb] : b.coefficients) {
      if (wa & wb) continue;
      int swaps = 0;
      for (GeneratorSet r = wb; r; r &= r - 1) swaps += std::popcount(wa & ~((GeneratorSet{2} << std::countr_zero(r)) - 1));
      out.add(wa | wb, swaps % 2 ? Integer(-xa * xb) : Integer(xa * xb));
    }
  if (!out.coefficients.empty()) out.degree = t.degree_of(out.coefficients.begin()->first);
  return out;
}

inline TaylorChain generator_chain(const TaylorComplex& t, int f) {
  TaylorChain c;
  c.add(GeneratorSet{1} << f, 1);
  c.degree = t.degree_of(GeneratorSet{1} << f);
  return c;
}

/// w145 for single-digit labels, w{9,10,11} otherwise.
inline std::string generator_word(const Face& f) {
  bool digits = std::all_of(f.begin(), f.end(), [](int v) { return v < 10; });
  std::string s = "w";
  if (digits) {
    for (int v : f) s += std::to_string(v);
    return s;
  }
  s += "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

/// Canonical text: each word in descending generator order, terms sorted lexicographically.
inline std::string taylor_chain_to_string(const TaylorComplex& t, const TaylorChain& c) {
  std::vector<std::pair<std::string, Integer>> terms;
  for (const auto& [w, x] : c.coefficients) {
    std::vector<int> idx;
    for (GeneratorSet r = w; r; r &= r - 1) idx.push_back(std::countr_zero(r));
    std::string word;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
      word += (word.empty() ? "" : "^") + generator_word(t.generators()[static_cast<std::size_t>(*it)]);
    const int s = static_cast<int>(idx.size());
    terms.emplace_back(word.empty() ? "1" : word, (s * (s - 1) / 2) % 2 ? Integer(-x) : x);
  }
  std::sort(terms.begin(), terms.end());
  return detail::signed_terms(terms);
}

namespace detail {

class TaylorChainParser {
 public:
  TaylorChainParser(const TaylorComplex& t, std::string_view text) : t_(t), in_(text) {}

  TaylorChain run() {
    TaylorChain c = sum();
    in_.finish();
    std::optional<int> degree;
    for (const auto& [w, x] : c.coefficients) {
      if (degree && *degree != t_.degree_of(w)) in_.fail("chain is not homogeneous in degree");
      degree = t_.degree_of(w);
    }
    c.degree = degree.value_or(0);
    return c;
  }

 private:
  TaylorChain sum() {
    TaylorChain acc;
    bool negative = in_.accept('-');
    if (!negative) in_.accept('+');
    for (;;) {
      for (const auto& [w, x] : product().coefficients) acc.add(w, negative ? Integer(-x) : x);
      if (in_.accept('+'))
        negative = false;
      else if (in_.accept('-'))
        negative = true;
      else
        return acc;
    }
  }

  TaylorChain product() {
    TaylorChain acc = factor();
    for (;;) {
      if (in_.accept('^') || in_.accept('*'))
        acc = wedge(t_, acc, factor());
      else if (in_.peek() == 'w' || in_.peek() == '(')
        acc = wedge(t_, acc, factor());
      else
        return acc;
    }
  }

  TaylorChain factor() {
    TaylorChain c;
    char ch = in_.peek();
    if (ch == '(') {
      in_.accept('(');
      c = sum();
      in_.expect(')');
      return c;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      c.add(0, in_.integer());
      return c;
    }
    if (ch != 'w') in_.fail("expected a generator word such as w123");
    in_.accept('w');
    Face f;
    if (in_.accept('{')) {
      do f.push_back(static_cast<int>(in_.integer()));
      while (in_.accept(','));
      in_.expect('}');
    } else {
      for (char d : std::to_string(in_.integer())) f.push_back(d - '0');
    }
    for (int v : f)
      if (v <= 0) in_.fail("vertex labels must be positive");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) in_.fail("repeated vertex in a generator word");
    auto idx = t_.generator_index(f);
    if (!idx) in_.fail(face_to_string(f) + " is not a missing face");
    c.add(GeneratorSet{1} << *idx, 1);
    return c;
  }

  const TaylorComplex& t_;
  TextCursor in_;
};

}  // namespace detail

/// Parses sums of wedge products such as `(w145+w245+w345)^w123`.
inline TaylorChain parse_taylor_chain(const TaylorComplex& t, std::string_view text) {
  return detail::TaylorChainParser(t, text).run();
}

/// The closed-form cycle of a nested product: factor k (k = 1..n) is the sum of w_J over missing
/// faces J with J - (I_1 u ... u I_{n-k}) = I_{n-k+1}; factors are wedged left to right, so the
/// rightmost one is w_{I_1}.
inline TaylorChain nested_taylor_cycle(const TaylorComplex& t, const WhiteheadExpr& w) {
  auto levels = nesting_levels(w);
  const std::size_t n = levels.size();
  TaylorChain acc;
  acc.add(0, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    LabelSet below = 0;
    for (std::size_t l = 0; l < n - k; ++l) below |= label_set(levels[l]);
    LabelSet target = label_set(levels[n - k]);
    TaylorChain factor;
    for (std::size_t f = 0; f < t.generator_count(); ++f)
      if ((t.support(static_cast<int>(f)) & ~below) == target) factor.add(GeneratorSet{1} << f, 1);
    if (factor.is_zero())
      throw ValidationError("no missing face J with J - (lower levels) = " + face_to_string(levels[n - k]));
    acc = wedge(t, acc, factor);
  }
  if (acc.is_zero()) throw VerificationError("nested Taylor cycle vanished");
  if (!t.differential(acc).is_zero()) throw VerificationError("nested Taylor chain is not a cycle");
  return acc;
}

/// Splits a chain into its components by union S.
inline std::map<LabelSet, TaylorChain> split_by_union(const TaylorComplex& t, const TaylorChain& c) {
  std::map<LabelSet, TaylorChain> out;
  for (const auto& [w, x] : c.coefficients) {
    auto& part = out[t.union_of(w)];
    part.degree = t.degree_of(w);
    part.add(w, x);
  }
  return out;
}

/// True iff a - b is a boundary. Both must be cycles.
inline bool classes_equal(const TaylorComplex& t, const TaylorChain& a, const TaylorChain& b) {
  for (const auto* c : {&a, &b})
    if (!t.differential(*c).is_zero()) throw ValidationError("classes_equal: input is not a cycle");
  TaylorChain diff = a;
  for (const auto& [w, x] : b.coefficients) diff.add(w, -x);
  for (const auto& [s, part] : split_by_union(t, diff)) {
    auto comp = t.component(s);
    if (!class_in_homology(comp, part).is_boundary) return false;
  }
  return true;
}

template <class Label>
Chain<Label> negated(Chain<Label> c) {
  for (auto& [l, x] : c.coefficients) x = -x;
  return c;
}

inline bool classes_equal_up_to_sign(const TaylorComplex& t, const TaylorChain& a, const TaylorChain& b) {
  return classes_equal(t, a, b) || classes_equal(t, a, negated(b));
}

}  // namespace zkw
