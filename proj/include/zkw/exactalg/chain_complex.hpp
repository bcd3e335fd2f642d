#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkw/exactalg/int_matrix.hpp"
#include "zkw/exactalg/smith.hpp"

namespace zkw {

/// Finitely generated abelian group: Z^rank plus cyclic torsion summands.
struct HomologyGroup {
  std::size_t rank = 0;
  IntVector torsion;  // invariant factors > 1, each dividing the next

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;

  std::string to_string() const {
    std::string s;
    if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
    return s.empty() ? "0" : s;
  }
};

/// Sparse chain over an arbitrary ordered label type.
template <class Label>
struct Chain {
  int degree = 0;
  std::map<Label, Integer> coefficients;

  void add(const Label& l, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = coefficients.try_emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coefficients.erase(it);
    }
  }
  bool is_zero() const { return coefficients.empty(); }
  bool operator==(const Chain&) const = default;
};

/// Homologically graded complex of free Z-modules: differential(d) maps degree d to d-1.
template <class Label>
class ChainComplex {
 public:
  void set_basis(int degree, std::vector<Label> labels) {
    auto& idx = index_[degree];
    idx.clear();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = idx.emplace(labels[i], i);
      if (!inserted) throw ValidationError("ChainComplex: duplicate basis label");
    }
    basis_[degree] = std::move(labels);
  }

  void set_differential(int degree, IntMatrix d) {
    if (d.cols() != rank(degree) || d.rows() != rank(degree - 1))
      throw ValidationError("ChainComplex: differential has wrong shape in degree " + std::to_string(degree));
    differential_[degree] = std::move(d);
  }

  std::size_t rank(int degree) const {
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : it->second.size();
  }

  const std::vector<Label>& basis(int degree) const {
    static const std::vector<Label> empty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
  }

  std::optional<std::size_t> index_of(int degree, const Label& l) const {
    auto it = index_.find(degree);
    if (it == index_.end()) return std::nullopt;
    auto jt = it->second.find(l);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  }

  IntMatrix differential(int degree) const {
    auto it = differential_.find(degree);
    if (it != differential_.end()) return it->second;
    return IntMatrix(rank(degree - 1), rank(degree));
  }

  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [d, b] : basis_)
      if (!b.empty()) out.push_back(d);
    return out;
  }

  bool empty() const { return degrees().empty(); }

  bool d_squared_is_zero() const {
    for (int d : degrees())
      if (!(differential(d - 1) * differential(d)).is_zero()) return false;
    return true;
  }

  IntVector to_vector(const Chain<Label>& c) const {
    IntVector v(rank(c.degree));
    for (const auto& [l, x] : c.coefficients) {
      auto i = index_of(c.degree, l);
      if (!i) throw ValidationError("chain uses a label outside the complex");
      v[*i] = x;
    }
    return v;
  }

  Chain<Label> from_vector(int degree, const IntVector& v) const {
    Chain<Label> c;
    c.degree = degree;
    const auto& b = basis(degree);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) c.coefficients.emplace(b[i], v[i]);
    return c;
  }

  Chain<Label> boundary(const Chain<Label>& c) const {
    return from_vector(c.degree - 1, differential(c.degree).apply(to_vector(c)));
  }

 private:
  std::map<int, std::vector<Label>> basis_;
  std::map<int, std::map<Label, std::size_t>> index_;
  std::map<int, IntMatrix> differential_;
};

/// Homology of a complex in a single degree; degrees without generators give the zero group.
template <class Label>
HomologyGroup homology(const ChainComplex<Label>& c, int degree) {
  HomologyGroup h;
  const std::size_t n = c.rank(degree);
  if (n == 0) return h;
  const std::size_t rank_out = matrix_rank(c.differential(degree));
  IntMatrix incoming = c.differential(degree + 1);
  std::size_t rank_in = 0;
  if (!incoming.is_zero()) {
    SmithForm snf = smith_normal_form(incoming, {false, false, false});
    rank_in = snf.rank;
    h.torsion = snf.torsion();
  }
  h.rank = n - rank_out - rank_in;
  return h;
}

template <class Label>
std::map<int, HomologyGroup> homology_table(const ChainComplex<Label>& c) {
  std::map<int, HomologyGroup> out;
  for (int d : c.degrees()) {
    HomologyGroup h = homology(c, d);
    if (!h.is_zero()) out[d] = h;
  }
  return out;
}

/// Coordinates of a homology class: free part plus residues modulo each torsion order.
struct HomologyClass {
  IntVector free;
  IntVector torsion;        // residues in [0, order)
  IntVector torsion_orders;
  bool is_boundary = true;
};

/// Presentation H_d = Z^f / im(B) in kernel coordinates, prepared once per degree so that
/// many cycles can be classified cheaply.
template <class Label>
class HomologyPresentation {
 public:
  HomologyPresentation(const ChainComplex<Label>& c, int degree) : complex_(&c), degree_(degree) {
    const std::size_t n = c.rank(degree);
    out_ = c.differential(degree);
    SmithForm out_snf = smith_normal_form(out_, {false, false, true});
    kernel_offset_ = out_snf.rank;
    v_inv_ = std::move(out_snf.v_inv);
    const std::size_t f = n - kernel_offset_;

    IntMatrix incoming = c.differential(degree + 1);
    IntMatrix rel(f, incoming.cols());
    std::vector<IntVector> columns(incoming.cols(), IntVector(n));
    for (const auto& [k, val] : incoming.entries()) columns[k.second][k.first] = val;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      IntVector coords = kernel_coordinates(columns[j]);
      for (std::size_t i = 0; i < f; ++i) rel.set(i, j, coords[i]);
    }
    SmithForm rel_snf = smith_normal_form(rel, {true, false, false});
    u_rel_ = std::move(rel_snf.u);
    factors_.assign(f, 0);
    for (std::size_t i = 0; i < rel_snf.rank; ++i) factors_[i] = rel_snf.diagonal[i];
  }

  HomologyGroup group() const {
    HomologyGroup h;
    for (const auto& s : factors_) {
      if (s == 0)
        ++h.rank;
      else if (s > 1)
        h.torsion.push_back(s);
    }
    return h;
  }

  HomologyClass classify(const Chain<Label>& z) const {
    if (z.degree != degree_) throw ValidationError("classify: chain has the wrong degree");
    IntVector v = complex_->to_vector(z);
    for (const auto& x : out_.apply(v))
      if (x != 0) throw ValidationError("classify: chain is not a cycle");
    IntVector coords = dense_apply(u_rel_, kernel_coordinates(v));
    HomologyClass cls;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] == 0) {
        cls.free.push_back(coords[i]);
        if (coords[i] != 0) cls.is_boundary = false;
      } else if (factors_[i] > 1) {
        Integer r = mod_positive(coords[i], factors_[i]);
        if (r != 0) cls.is_boundary = false;
        cls.torsion.push_back(r);
        cls.torsion_orders.push_back(factors_[i]);
      }
    }
    return cls;
  }

 private:
  IntVector kernel_coordinates(const IntVector& v) const {
    IntVector full = dense_apply(v_inv_, v);
    return IntVector(full.begin() + static_cast<std::ptrdiff_t>(kernel_offset_), full.end());
  }

  const ChainComplex<Label>* complex_;
  int degree_;
  IntMatrix out_;
  std::size_t kernel_offset_ = 0;
  DenseMatrix v_inv_;
  DenseMatrix u_rel_;
  IntVector factors_;
};

/// Coordinates of [z] in the Smith-derived presentation of H_d; throws if z is not a cycle.
template <class Label>
HomologyClass class_in_homology(const ChainComplex<Label>& c, const Chain<Label>& z) {
  return HomologyPresentation<Label>(c, z.degree).classify(z);
}

}  // namespace zkw
