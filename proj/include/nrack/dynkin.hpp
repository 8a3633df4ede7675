#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nrack/braided.hpp"
#include "nrack/error.hpp"

namespace nrack {

inline bool scalar_is_one(const Cyclotomic& c) { return c.is_one(); }
inline bool scalar_is_one(const Monomial& m) { return m.is_one(); }
inline std::string scalar_text(const Cyclotomic& c) { return c.str(); }
inline std::string scalar_text(const Monomial& m) { return m.str(); }

// Vertex labels q_ii; an edge {i,j} (i<j) carries q~_ij = q_ij q_ji and exists iff q~_ij != 1.
template <class S>
struct Gdd {
  std::vector<S> vertex;
  std::map<std::pair<int, int>, S> edges;

  std::size_t size() const { return vertex.size(); }
  // q~_ij with 1 for non-adjacent pairs.
  S mixed(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = edges.find({i, j});
    return it == edges.end() ? scalar_one<S>() : it->second;
  }
  bool adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
  }
  int degree(int i) const {
    int d = 0;
    for (const auto& [e, l] : edges) d += (e.first == i) + (e.second == i);
    return d;
  }
};

using ConcreteGdd = Gdd<Cyclotomic>;
using SymbolicGdd = Gdd<Monomial>;

template <class S>
Gdd<S> gdd(const BraidedSpace<S>& b) {
  if (!is_diagonal(b)) throw usage_error("gdd: braiding is not of diagonal type");
  Gdd<S> g;
  const std::size_t m = b.dim();
  for (std::size_t i = 0; i < m; ++i) g.vertex.push_back(b.R[i][i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      S t = b.R[i][j] * b.R[j][i];
      if (!scalar_is_one(t)) g.edges[{static_cast<int>(i), static_cast<int>(j)}] = t;
    }
  return g;
}

// q_ii = q_{tau(i)tau(i)} and q~_ij = q~_{tau(i)tau(j)} for all i, j.
template <class S>
bool check_tau_symmetry(const Gdd<S>& g, const Permutation& tau) {
  if (tau.degree() != g.size()) throw usage_error("check_tau_symmetry: degree mismatch");
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    if (!(g.vertex[static_cast<std::size_t>(i)] == g.vertex[static_cast<std::size_t>(tau(i))])) return false;
    for (int j = i + 1; j < n; ++j)
      if (!(g.mixed(i, j) == g.mixed(tau(i), tau(j)))) return false;
  }
  return true;
}

enum class RenderFormat { Ascii, Dot };

template <class S>
std::string render(const Gdd<S>& g, RenderFormat f) {
  std::string out;
  if (f == RenderFormat::Dot) {
    out = "graph gdd {\n";
    for (std::size_t i = 0; i < g.size(); ++i)
      out += "  v" + std::to_string(i + 1) + " [label=\"" + std::to_string(i + 1) + ": " + scalar_text(g.vertex[i]) +
             "\"];\n";
    for (const auto& [e, l] : g.edges)
      out += "  v" + std::to_string(e.first + 1) + " -- v" + std::to_string(e.second + 1) + " [label=\"" +
             scalar_text(l) + "\"];\n";
    out += "}\n";
    return out;
  }
  out = "vertices:\n";
  for (std::size_t i = 0; i < g.size(); ++i) out += "  " + std::to_string(i + 1) + " : " + scalar_text(g.vertex[i]) + "\n";
  out += "edges:\n";
  if (g.edges.empty()) out += "  (none)\n";
  for (const auto& [e, l] : g.edges)
    out += "  " + std::to_string(e.first + 1) + " -- " + std::to_string(e.second + 1) + " : " + scalar_text(l) + "\n";
  return out;
}

struct TypeLabel {
  std::string family;
  std::map<std::string, std::string> params;
  std::optional<long> predicted_dim;
  std::string anchor;  // where the template comes from
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
  friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;
};

// A_n(q;J) on a path given in order: vertex labels d[0..n-1], edge labels e[k] = q~_{k,k+1}.
// J holds 0-based path positions. Returns q = d[n-1]^2 e[n-2] when all clauses hold.
std::optional<Cyclotomic> check_An(const std::vector<Cyclotomic>& d, const std::vector<Cyclotomic>& e,
                                   const std::set<int>& J);
bool check_symmetric_super(const std::vector<Cyclotomic>& d, const std::vector<Cyclotomic>& e, const std::set<int>& J);

// Every matching template, sorted; empty means the diagram is outside the catalogue.
std::vector<TypeLabel> classify(const ConcreteGdd& g);

// Structural filters for fixed-point-free tau: a vertex adjacent to both i and tau(i),
// or a vertex of degree at least 3. Returns the reason when the diagram is rejected.
std::optional<std::string> fpf_structural_reject(const ConcreteGdd& g, const Permutation& tau);
bool adjacent_to_tau_pair(const ConcreteGdd& g, const Permutation& tau, int* witness = nullptr);

}  // namespace nrack
