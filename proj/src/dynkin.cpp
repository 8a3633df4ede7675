#include "nrack/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nrack {

namespace {

bool in_g(const Cyclotomic& q, int m) { return q.root_order() == m; }

std::string set_text(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool connected(const ConcreteGdd& g) {
  const int n = static_cast<int>(g.size());
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (!seen[static_cast<std::size_t>(u)] && g.adjacent(u, v)) {
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

// Vertices of the induced path on `keep` starting at `start`, or empty if not a simple path.
std::vector<int> walk_path(const ConcreteGdd& g, const std::vector<char>& keep, int start) {
  const int n = static_cast<int>(g.size());
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1, count = 0;
    for (int u = 0; u < n; ++u)
      if (keep[static_cast<std::size_t>(u)] && u != cur && g.adjacent(u, cur)) {
        ++count;
        if (u != prev) next = u;
      }
    if (count > (prev < 0 ? 1 : 2)) return {};
    if (next < 0) break;
    if (std::find(order.begin(), order.end(), next) != order.end()) return {};
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

void path_labels(const ConcreteGdd& g, const std::vector<int>& path, std::vector<Cyclotomic>& d,
                 std::vector<Cyclotomic>& e) {
  d.clear();
  e.clear();
  for (std::size_t k = 0; k < path.size(); ++k) {
    d.push_back(g.vertex[static_cast<std::size_t>(path[k])]);
    if (k + 1 < path.size()) e.push_back(g.mixed(path[k], path[k + 1]));
  }
}

// All (J, q) for which the oriented path is A_n(q;J).
std::vector<std::pair<std::set<int>, Cyclotomic>> an_matches(const std::vector<Cyclotomic>& d,
                                                             const std::vector<Cyclotomic>& e) {
  std::vector<int> minus;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] == Cyclotomic(-1)) minus.push_back(static_cast<int>(k));
  std::vector<std::pair<std::set<int>, Cyclotomic>> out;
  if (minus.size() > 16) return out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << minus.size()); ++mask) {
    std::set<int> J;
    for (std::size_t k = 0; k < minus.size(); ++k)
      if (mask >> k & 1) J.insert(minus[k]);
    if (auto q = check_An(d, e, J)) out.emplace_back(J, *q);
  }
  return out;
}

std::set<int> to_vertices(const std::set<int>& positions, const std::vector<int>& path) {
  std::set<int> out;
  for (int p : positions) out.insert(path[static_cast<std::size_t>(p)] + 1);
  return out;
}

void classify_path(const ConcreteGdd& g, std::vector<TypeLabel>& out) {
  const int n = static_cast<int>(g.size());
  if (n < 2 || g.edges.size() != static_cast<std::size_t>(n - 1)) return;
  std::vector<char> keep(static_cast<std::size_t>(n), 1);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 1) continue;
    std::vector<int> path = walk_path(g, keep, v);
    if (path.size() != static_cast<std::size_t>(n)) return;
    std::vector<Cyclotomic> d, e;
    path_labels(g, path, d, e);
    for (const auto& [J, q] : an_matches(d, e)) {
      TypeLabel t;
      t.family = J.empty() ? "Cartan A_" + std::to_string(n) : "super A_" + std::to_string(n) + "(q;J)";
      t.params["q"] = q.str();
      if (!J.empty()) t.params["J"] = set_text(to_vertices(J, path));
      t.anchor = "definition of the diagrams A_n(q;J)";
      out.push_back(t);
      if (check_symmetric_super(d, e, J)) {
        TypeLabel s = t;
        s.family = "symmetric super A_" + std::to_string(n) + "(q;J)";
        s.anchor = "definition of symmetric super type";
        out.push_back(s);
      }
    }
  }
}

// Trees with a single branch vertex; all vertex labels q, all edges q^-1.
void classify_cartan_branched(const ConcreteGdd& g, std::vector<TypeLabel>& out) {
  const int n = static_cast<int>(g.size());
  if (n < 4 || g.edges.size() != static_cast<std::size_t>(n - 1)) return;
  int center = -1;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d > 3) return;
    if (d == 3) {
      if (center >= 0) return;
      center = v;
    }
  }
  if (center < 0) return;
  const Cyclotomic q = g.vertex[0];
  if (q == Cyclotomic(1) || q == Cyclotomic(-1)) return;
  for (int v = 0; v < n; ++v)
    if (!(g.vertex[static_cast<std::size_t>(v)] == q)) return;
  const Cyclotomic qi = q.inverse();
  for (const auto& [e, l] : g.edges)
    if (!(l == qi)) return;
  std::vector<int> lengths;
  std::vector<char> keep(static_cast<std::size_t>(n), 1);
  keep[static_cast<std::size_t>(center)] = 0;
  for (int u = 0; u < n; ++u)
    if (g.adjacent(u, center)) lengths.push_back(static_cast<int>(walk_path(g, keep, u).size()));
  std::sort(lengths.begin(), lengths.end());
  if (std::accumulate(lengths.begin(), lengths.end(), 1) != n) return;
  TypeLabel t;
  t.params["q"] = q.str();
  t.anchor = "Cartan types named in the classification for tau with two or three transpositions";
  if (lengths[0] == 1 && lengths[1] == 1) {
    t.family = "Cartan D_" + std::to_string(n);
    out.push_back(t);
  } else if (lengths == std::vector<int>{1, 2, 2}) {
    t.family = "Cartan E_6";
    out.push_back(t);
  }
}

// A_{n-2}(p;J) path ending at a vertex v joined to two more vertices a, b.
void classify_super_d(const ConcreteGdd& g, std::vector<TypeLabel>& out) {
  const int n = static_cast<int>(g.size());
  if (n < 4) return;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 3) continue;
    std::vector<int> nb;
    for (int u = 0; u < n; ++u)
      if (u != v && g.adjacent(u, v)) nb.push_back(u);
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        int a = nb[x], b = nb[y];
        bool triangle = g.adjacent(a, b);
        if (triangle ? (g.degree(a) != 2 || g.degree(b) != 2) : (g.degree(a) != 1 || g.degree(b) != 1)) continue;
        std::vector<char> keep(static_cast<std::size_t>(n), 1);
        keep[static_cast<std::size_t>(a)] = keep[static_cast<std::size_t>(b)] = 0;
        std::vector<int> path = walk_path(g, keep, v);
        if (path.size() != static_cast<std::size_t>(n - 2)) continue;
        std::size_t rest_edges = 0;
        for (const auto& [e, l] : g.edges)
          if (keep[static_cast<std::size_t>(e.first)] && keep[static_cast<std::size_t>(e.second)]) ++rest_edges;
        if (rest_edges != path.size() - 1) continue;
        std::reverse(path.begin(), path.end());  // v is the last vertex
        std::vector<Cyclotomic> d, e;
        path_labels(g, path, d, e);
        const Cyclotomic &la = g.vertex[static_cast<std::size_t>(a)], &lb = g.vertex[static_cast<std::size_t>(b)];
        const Cyclotomic ea = g.mixed(v, a), eb = g.mixed(v, b);
        for (const auto& [J, p] : an_matches(d, e)) {
          TypeLabel t;
          t.family = "super D_" + std::to_string(n);
          t.anchor = "super type D_n diagrams for tau=(1,2)";
          if (!triangle) {
            Cyclotomic q = p.inverse();
            if (J.empty() || !(ea == q) || !(eb == q) || !(la == q.inverse()) || !(lb == q.inverse())) continue;
            t.params["variant"] = "two q-edges to q^-1 vertices";
            t.params["q"] = q.str();
          } else {
            const Cyclotomic& q = p;
            if (!(ea == q.inverse()) || !(eb == q.inverse()) || !(la == Cyclotomic(-1)) || !(lb == Cyclotomic(-1)) ||
                !(g.mixed(a, b) == q * q))
              continue;
            t.params["variant"] = "triangle with q^2 edge";
            t.params["q"] = q.str();
          }
          if (!J.empty()) t.params["J"] = set_text(to_vertices(J, path));
          out.push_back(t);
        }
      }
  }
}

struct Lab {
  int sign;
  int k;
};

struct Template {
  std::string family;
  std::string variant;
  std::vector<Lab> v;
  std::vector<std::pair<std::pair<int, int>, Lab>> e;
  std::function<bool(int)> order_ok;
  std::string anchor;
};

Cyclotomic value_of(const Lab& l, const Cyclotomic& q) { return Cyclotomic(l.sign) * q.pow(l.k); }

const std::vector<Template>& exotic_templates() {
  static const std::vector<Template> t = [] {
    auto big = [](int m) { return m > 2; };
    auto three = [](int m) { return m == 3; };
    const Lab M{-1, 0}, Q{1, 1}, Qi{1, -1}, Q2{1, 2}, MQi{-1, -1};
    std::vector<Template> v;
    v.push_back({"triangle (-1,-1,q)", "", {M, M, Q}, {{{0, 1}, Q2}, {{0, 2}, Qi}, {{1, 2}, Qi}}, big,
                 "triangle diagram for tau=(1,2), q of order > 2"});
    v.push_back({"D(2,1)", "path", {Q, M, Q}, {{{0, 1}, Qi}, {{1, 2}, Qi}}, big, "type D(2,1) diagrams for tau=(1,2)"});
    v.push_back({"D(2,1)", "triangle", {M, M, M}, {{{0, 1}, Q2}, {{0, 2}, Qi}, {{1, 2}, Qi}}, big,
                 "type D(2,1) diagrams for tau=(1,2)"});
    v.push_back({"g(2,3)", "path -1,-1,-1", {M, M, M}, {{{0, 1}, Q}, {{1, 2}, Q}}, three,
                 "type g(2,3) diagrams for tau=(1,2)"});
    v.push_back({"g(2,3)", "path -1,-q^-1,-1", {M, MQi, M}, {{{0, 1}, Qi}, {{1, 2}, Qi}}, three,
                 "type g(2,3) diagrams for tau=(1,2)"});
    v.push_back({"g(2,3)", "triangle", {Q, Q, M}, {{{0, 1}, Qi}, {{0, 2}, Qi}, {{1, 2}, Qi}}, three,
                 "type g(2,3) diagrams for tau=(1,2)"});
    v.push_back({"g(3,3)", "center q", {Qi, Q, M, M}, {{{0, 1}, Q}, {{1, 2}, Qi}, {{1, 3}, Qi}}, three,
                 "type g(3,3) diagrams for tau=(1,2)"});
    v.push_back({"g(3,3)", "center q^-1", {Qi, Qi, M, M}, {{{0, 1}, Q}, {{1, 2}, Q}, {{1, 3}, Q}}, three,
                 "type g(3,3) diagrams for tau=(1,2)"});
    v.push_back({"g(2,6)", "branched", {Q, M, M, Q, M},
                 {{{0, 1}, Qi}, {{1, 2}, Q}, {{2, 3}, Qi}, {{1, 4}, Q}, {{2, 4}, Q}}, three,
                 "type g(2,6) diagrams for tau=(1,2)(3,4)"});
    v.push_back({"g(2,6)", "path", {Q, Q, M, Q, Q}, {{{0, 1}, Qi}, {{1, 2}, Qi}, {{2, 3}, Qi}, {{3, 4}, Qi}}, three,
                 "type g(2,6) diagrams for tau=(1,2)(3,4)"});
    return v;
  }();
  return t;
}

void classify_exotic(const ConcreteGdd& g, std::vector<TypeLabel>& out) {
  const int n = static_cast<int>(g.size());
  for (const auto& t : exotic_templates()) {
    if (static_cast<int>(t.v.size()) != n || t.e.size() != g.edges.size()) continue;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool shape = true;
      for (const auto& [e, l] : t.e)
        if (!g.adjacent(perm[static_cast<std::size_t>(e.first)], perm[static_cast<std::size_t>(e.second)])) {
          shape = false;
          break;
        }
      if (!shape) continue;
      // Read q off the first label q^(+-1).
      std::optional<Cyclotomic> q;
      for (std::size_t k = 0; k < t.v.size() && !q; ++k)
        if (t.v[k].k == 1 || t.v[k].k == -1) {
          Cyclotomic x = g.vertex[static_cast<std::size_t>(perm[k])] * Cyclotomic(t.v[k].sign);
          q = t.v[k].k == 1 ? x : x.inverse();
        }
      for (std::size_t k = 0; k < t.e.size() && !q; ++k)
        if (t.e[k].second.k == 1 || t.e[k].second.k == -1) {
          const auto& [e, l] = t.e[k];
          Cyclotomic x = g.mixed(perm[static_cast<std::size_t>(e.first)], perm[static_cast<std::size_t>(e.second)]) *
                         Cyclotomic(l.sign);
          q = l.k == 1 ? x : x.inverse();
        }
      if (!q || !t.order_ok(q->root_order())) continue;
      bool ok = true;
      for (std::size_t k = 0; k < t.v.size() && ok; ++k)
        ok = g.vertex[static_cast<std::size_t>(perm[k])] == value_of(t.v[k], *q);
      for (const auto& [e, l] : t.e) {
        if (!ok) break;
        ok = g.mixed(perm[static_cast<std::size_t>(e.first)], perm[static_cast<std::size_t>(e.second)]) ==
             value_of(l, *q);
      }
      if (!ok) continue;
      TypeLabel lab;
      lab.family = t.family;
      if (!t.variant.empty()) lab.params["variant"] = t.variant;
      lab.params["q"] = q->str();
      lab.params["m"] = std::to_string(q->root_order());
      lab.anchor = t.anchor;
      out.push_back(lab);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

void classify_small(const ConcreteGdd& g, std::vector<TypeLabel>& out) {
  if (g.size() == 1) {
    int m = g.vertex[0].root_order();
    if (m >= 2) out.push_back({"Cartan A_1", {{"q", g.vertex[0].str()}, {"m", std::to_string(m)}}, m,
                               "rank one: dimension equals the order of q"});
    return;
  }
  if (g.size() != 2 || !(g.vertex[0] == g.vertex[1])) return;
  const Cyclotomic& b = g.vertex[0];
  const std::string anchor = "dimension table for the two-dimensional involutive braiding";
  if (g.edges.empty()) {
    int m = b.root_order();
    if (m >= 2)
      out.push_back({"table: Cartan A_1 x A_1", {{"b", b.str()}, {"m", std::to_string(m)}}, long{m} * m, anchor});
    return;
  }
  const Cyclotomic& t = g.edges.begin()->second;
  if (in_g(b, 3) && t == b.inverse()) out.push_back({"table: Cartan A_2", {{"b", b.str()}}, 27, anchor});
  int m = t.root_order();
  if (b == Cyclotomic(-1) && m >= 2)
    out.push_back({"table: super A_2(q;{1,2})", {{"ae", t.str()}, {"m", std::to_string(m)}}, 4L * m, anchor});
}

}  // namespace

std::optional<Cyclotomic> check_An(const std::vector<Cyclotomic>& d, const std::vector<Cyclotomic>& e,
                                   const std::set<int>& J) {
  const std::size_t n = d.size();
  if (n < 2 || e.size() != n - 1) return std::nullopt;
  for (int j : J)
    if (j < 0 || static_cast<std::size_t>(j) >= n) return std::nullopt;
  for (const auto& x : e)
    if (x.is_one()) return std::nullopt;
  Cyclotomic q = d[n - 1] * d[n - 1] * e[n - 2];
  if (q == Cyclotomic(1) || q == Cyclotomic(-1)) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    const Cyclotomic* left = i > 0 ? &e[i - 1] : nullptr;
    const Cyclotomic* right = i + 1 < n ? &e[i] : nullptr;
    if (J.count(static_cast<int>(i))) {
      if (!(d[i] == Cyclotomic(-1))) return std::nullopt;
      if (left && right && !(*left == right->inverse())) return std::nullopt;
    } else {
      Cyclotomic inv = d[i].inverse();
      if (left && !(*left == inv)) return std::nullopt;
      if (right && !(*right == inv)) return std::nullopt;
    }
  }
  return q;
}

bool check_symmetric_super(const std::vector<Cyclotomic>& d, const std::vector<Cyclotomic>& e, const std::set<int>& J) {
  if (J.empty() || !check_An(d, e, J)) return false;
  const std::size_t n = d.size();
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    if (!(d[k - 1] == d[n - k])) return false;
    if (k >= 2 && !(e[k - 2] == e[n - k - 1])) return false;
  }
  if (n % 2 == 0) {
    std::size_t m = n / 2;
    if (!J.count(static_cast<int>(m - 1))) {
      if (!(e[m - 1] == d[m - 1] * d[m - 1]) || !(d[m - 1] == d[m]) || !in_g(d[m - 1], 3)) return false;
    }
  }
  return true;
}

std::vector<TypeLabel> classify(const ConcreteGdd& g) {
  std::vector<TypeLabel> out;
  classify_small(g, out);
  if (g.size() >= 2 && connected(g)) {
    classify_path(g, out);
    classify_cartan_branched(g, out);
    classify_super_d(g, out);
    classify_exotic(g, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool adjacent_to_tau_pair(const ConcreteGdd& g, const Permutation& tau, int* witness) {
  if (tau.degree() != g.size()) throw usage_error("adjacent_to_tau_pair: degree mismatch");
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    if (tau(i) == i) continue;
    for (int k = 0; k < n; ++k)
      if (k != i && k != tau(i) && g.adjacent(k, i) && g.adjacent(k, tau(i))) {
        if (witness) *witness = k;
        return true;
      }
  }
  return false;
}

std::optional<std::string> fpf_structural_reject(const ConcreteGdd& g, const Permutation& tau) {
  int k = -1;
  if (adjacent_to_tau_pair(g, tau, &k))
    return "vertex " + std::to_string(k + 1) + " is adjacent to some i and tau(i)";
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    if (g.degree(v) >= 3) return "vertex " + std::to_string(v + 1) + " has degree at least 3";
  return std::nullopt;
}

}  // namespace nrack
