#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <vector>

#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/exactalg/chain_complex.hpp"

namespace zkw {

/// Exponent vector of a monomial in x_1..x_m.
using Monomial = std::vector<int>;

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline std::string monomial_to_string(const Monomial& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    s += "x" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

/// Taylor's sign(j, J) = (-1)^{n-1} when j is the n-th element of J.
inline int taylor_sign(std::uint32_t j_bit, std::uint32_t subset) {
  return std::popcount(subset & (j_bit - 1)) % 2 ? -1 : 1;
}

/// Monomial ideal (m_1, ..., m_t) in variables x_1..x_m with a minimal generating set.
class MonomialIdeal {
 public:
  static constexpr std::size_t kMaxGenerators = 20;

  MonomialIdeal(std::size_t variables, std::vector<Monomial> gens) : m_(variables), gens_(std::move(gens)) {
    if (gens_.size() > kMaxGenerators) throw SizeLimitError("monomial ideal generator count", kMaxGenerators);
    for (const auto& g : gens_) {
      if (g.size() != m_) throw ValidationError("generator has the wrong number of exponents");
      for (int e : g)
        if (e < 0) throw ValidationError("negative exponent");
    }
    for (std::size_t a = 0; a < gens_.size(); ++a)
      for (std::size_t b = 0; b < gens_.size(); ++b)
        if (a != b && divides(gens_[a], gens_[b]))
          throw ValidationError("generator " + monomial_to_string(gens_[a]) + " divides " + monomial_to_string(gens_[b]));
  }

  /// Stanley-Reisner ideal: one square-free generator per missing face, in (size, lex) order.
  static MonomialIdeal stanley_reisner(const SimplicialComplex& k) {
    auto mf = k.missing_faces();
    std::stable_sort(mf.begin(), mf.end(), [](const Face& a, const Face& b) { return a.size() < b.size(); });
    std::vector<Monomial> gens;
    for (const auto& f : mf) {
      Monomial g(k.vertex_count());
      for (int v : f) g[k.index_of(v)] = 1;
      gens.push_back(g);
    }
    return MonomialIdeal(k.vertex_count(), gens);
  }

  std::size_t variables() const { return m_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool square_free() const {
    for (const auto& g : gens_)
      for (int e : g)
        if (e > 1) return false;
    return true;
  }

  /// lcm of the generators indexed by `subset`; 1 for the empty subset.
  Monomial lcm_of(std::uint32_t subset) const {
    Monomial c(m_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (subset >> i & 1) c = lcm(c, gens_[i]);
    return c;
  }

  bool contains(const Monomial& x) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, x); });
  }

 private:
  std::size_t m_;
  std::vector<Monomial> gens_;
};

/// The multidegree-beta strand of the Taylor resolution: basis {J : m_J divides x^beta}, index
/// |J|, and d(e_J) = sum_j sign(j, J) e_{J - j} (the monomial coefficient is absorbed by the
/// grading).
inline ChainComplex<std::uint32_t> taylor_module_strand(const MonomialIdeal& ideal, const Monomial& beta) {
  const std::size_t t = ideal.generators().size();
  std::map<int, std::vector<std::uint32_t>> by_index;
  for (std::uint32_t j = 0; j < (std::uint32_t{1} << t); ++j)
    if (divides(ideal.lcm_of(j), beta)) by_index[std::popcount(j)].push_back(j);
  ChainComplex<std::uint32_t> c;
  for (auto& [s, subsets] : by_index) c.set_basis(s, subsets);
  for (const auto& [s, subsets] : by_index) {
    if (s == 0) continue;
    IntMatrix d(c.rank(s - 1), subsets.size());
    for (std::size_t col = 0; col < subsets.size(); ++col)
      for (std::uint32_t r = subsets[col]; r; r &= r - 1) {
        std::uint32_t bit = r & (~r + 1);
        d.set(*c.index_of(s - 1, subsets[col] & ~bit), col, taylor_sign(bit, subsets[col]));
      }
    c.set_differential(s, std::move(d));
  }
  return c;
}

/// Free ranks of the Taylor resolution by homological index: binomial(t, s).
inline std::vector<std::size_t> taylor_ranks(const MonomialIdeal& ideal) {
  const std::size_t t = ideal.generators().size();
  std::vector<std::size_t> r(t + 1, 0);
  for (std::uint32_t j = 0; j < (std::uint32_t{1} << t); ++j) ++r[static_cast<std::size_t>(std::popcount(j))];
  return r;
}

/// Multidegrees used to certify exactness: square-free ones for square-free ideals, otherwise
/// every beta below the lcm of all generators.
inline std::vector<Monomial> truncation_multidegrees(const MonomialIdeal& ideal) {
  Monomial top = ideal.square_free() ? Monomial(ideal.variables(), 1) : ideal.lcm_of(~std::uint32_t{0});
  std::vector<Monomial> out;
  Monomial beta(ideal.variables(), 0);
  for (;;) {
    out.push_back(beta);
    std::size_t i = 0;
    while (i < beta.size() && beta[i] == top[i]) beta[i++] = 0;
    if (i == beta.size()) break;
    ++beta[i];
  }
  return out;
}

struct ResolutionReport {
  bool exact = true;
  std::size_t multidegrees_checked = 0;
  std::string failure;  // first failing multidegree
};

/// Positive indices are exact and H_0 is Z exactly when x^beta lies outside the ideal.
inline ResolutionReport verify_taylor_module_resolution(const MonomialIdeal& ideal) {
  ResolutionReport r;
  for (const auto& beta : truncation_multidegrees(ideal)) {
    ++r.multidegrees_checked;
    auto strand = taylor_module_strand(ideal, beta);
    HomologyGroup expected_h0{ideal.contains(beta) ? 0u : 1u, {}};
    bool ok = homology(strand, 0) == expected_h0;
    for (int s : strand.degrees())
      if (s > 0 && !homology(strand, s).is_zero()) ok = false;
    if (!ok) {
      r.exact = false;
      r.failure = "multidegree " + monomial_to_string(beta);
      return r;
    }
  }
  return r;
}

/// Free complex over the polynomial ring with basis e_J (J a subset of the generator indices);
/// entries are a sign times a monomial. Keyed by (target J, source J).
struct MonomialComplex {
  struct Entry {
    int sign;
    Monomial monomial;
    bool operator==(const Entry&) const = default;
  };
  std::size_t generators = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Entry> d;
};

/// Direct Taylor differential d(e_J) = sum_j sign(j, J) (m_J / m_{J-j}) e_{J-j}.
inline MonomialComplex taylor_monomial_complex(const std::vector<Monomial>& gens, std::size_t variables) {
  MonomialComplex c;
  c.generators = gens.size();
  auto lcm_of = [&](std::uint32_t s) {
    Monomial x(variables);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (s >> i & 1) x = lcm(x, gens[i]);
    return x;
  };
  for (std::uint32_t j = 0; j < (std::uint32_t{1} << gens.size()); ++j)
    for (std::uint32_t r = j; r; r &= r - 1) {
      std::uint32_t bit = r & (~r + 1);
      c.d[{j & ~bit, j}] = {taylor_sign(bit, j), quotient(lcm_of(j), lcm_of(j & ~bit))};
    }
  return c;
}

/// T(m_1..m_t) rebuilt as the cone of phi: T(n_1..n_{t-1}) -> T(m_1..m_{t-1}),
/// n_i = m_i / gcd(m_i, m_t), phi(ebar_J) = (m_{J+t} / m_J) e_J, with cone differential
/// (e, ebar) -> (d e + phi ebar, -d ebar), then transported along psi(e_J) = e_J,
/// psi(ebar_J) = (-1)^{|J|} e_{J+t}.
inline MonomialComplex taylor_by_cones(const std::vector<Monomial>& gens, std::size_t variables) {
  MonomialComplex c;
  c.generators = gens.size();
  if (gens.empty()) return c;
  const std::size_t t = gens.size();
  const Monomial& last = gens.back();
  std::vector<Monomial> prime(gens.begin(), gens.end() - 1), bar;
  for (const auto& g : prime) {
    Monomial n(variables);
    for (std::size_t v = 0; v < variables; ++v) n[v] = g[v] - std::min(g[v], last[v]);
    bar.push_back(n);
  }
  MonomialComplex lower = taylor_by_cones(prime, variables);
  MonomialComplex barred = taylor_by_cones(bar, variables);
  const std::uint32_t t_bit = std::uint32_t{1} << (t - 1);
  auto lcm_of = [&](std::uint32_t s) {
    Monomial x(variables);
    for (std::size_t i = 0; i < t; ++i)
      if (s >> i & 1) x = lcm(x, gens[i]);
    return x;
  };
  auto psi_sign = [](std::uint32_t j) { return std::popcount(j) % 2 ? -1 : 1; };

  for (const auto& [key, e] : lower.d) c.d[key] = e;
  for (std::uint32_t j = 0; j < t_bit; ++j)
    c.d[{j, j | t_bit}] = {psi_sign(j), quotient(lcm_of(j | t_bit), lcm_of(j))};
  for (const auto& [key, e] : barred.d) {
    auto [target, source] = key;
    c.d[{target | t_bit, source | t_bit}] = {-e.sign * psi_sign(target) * psi_sign(source), e.monomial};
  }
  return c;
}

struct ConeReport {
  bool matches = false;
  std::size_t generators = 0;
  std::size_t entries = 0;
  std::string mismatch;
};

/// Compares the recursive cone construction with the direct Taylor differential entry by entry.
inline ConeReport cone_reconstruction(const MonomialIdeal& ideal) {
  constexpr std::size_t kMaxGenerators = 8;
  if (ideal.generators().size() > kMaxGenerators) throw SizeLimitError("cone_reconstruction generator count", kMaxGenerators);
  ConeReport r;
  r.generators = ideal.generators().size();
  auto direct = taylor_monomial_complex(ideal.generators(), ideal.variables());
  auto cones = taylor_by_cones(ideal.generators(), ideal.variables());
  r.entries = direct.d.size();
  r.matches = direct.d == cones.d;
  if (!r.matches) {
    for (const auto& [key, e] : direct.d) {
      auto it = cones.d.find(key);
      if (it == cones.d.end() || !(it->second == e)) {
        r.mismatch = "entry (" + std::to_string(key.first) + ", " + std::to_string(key.second) + ")";
        break;
      }
    }
    if (r.mismatch.empty()) r.mismatch = "cone complex has extra entries";
  }
  return r;
}

}  // namespace zkw
