#include "nrack/solution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nrack/error.hpp"

namespace nrack {

namespace {

std::string pair_str(int x, int y) { return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")"; }

}  // namespace

SetSolution::SetSolution(std::vector<Permutation> sigma, std::vector<Permutation> tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  std::size_t n = sigma_.size();
  if (tau_.size() != n) throw usage_error("solution needs as many tau maps as sigma maps");
  for (std::size_t i = 0; i < n; ++i)
    if (sigma_[i].degree() != n || tau_[i].degree() != n)
      throw usage_error("solution map " + std::to_string(i + 1) + " has the wrong degree");
}

SetSolution::SetSolution(std::vector<Permutation> sigma, const Permutation& tau)
    : SetSolution(sigma, std::vector<Permutation>(sigma.size(), tau)) {}

std::optional<Permutation> SetSolution::constant_tau() const {
  for (const auto& t : tau_)
    if (t != tau_[0]) return std::nullopt;
  if (tau_.empty()) return std::nullopt;
  return tau_[0];
}

bool satisfies_ybe(const SetSolution& s, std::array<int, 3>* witness) {
  int n = static_cast<int>(s.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a1, b1] = s(x, y);
      for (int z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id)
        auto [b2, c2] = s(b1, z);
        auto [a3, b3] = s(a1, b2);
        // (id x r)(r x id)(id x r)
        auto [p1, q1] = s(y, z);
        auto [u2, p2] = s(x, p1);
        auto [p3, q3] = s(p2, q1);
        if (a3 != u2 || b3 != p3 || c2 != q3) {
          if (witness) *witness = {x, y, z};
          return false;
        }
      }
    }
  return true;
}

Report verify(const SetSolution& s) {
  Report rep;
  std::array<int, 3> w{};
  rep.is_ybe = satisfies_ybe(s, &w);
  if (!rep.is_ybe) rep.ybe_witness = w;
  int n = static_cast<int>(s.size());
  rep.involutive = true;
  rep.rack_type = true;
  for (int x = 0; x < n; ++x) {
    if (!s.tau(x).is_identity()) rep.rack_type = false;
    for (int y = 0; y < n; ++y) {
      auto [a, b] = s(x, y);
      if (s(a, b) != std::pair<int, int>{x, y}) rep.involutive = false;
      if (a == x && b == y) ++rep.fixed_pairs;
    }
  }
  auto t = s.constant_tau();
  rep.near_rack = rep.is_ybe && t && t->is_involution() && !t->is_identity();
  return rep;
}

Rack::Rack(std::vector<std::vector<int>> table) : t_(std::move(table)) {
  std::size_t n = t_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (t_[x].size() != n) throw usage_error("rack table is not square");
    Permutation::from_images(t_[x]);  // throws unless bijective
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        int lhs = op(static_cast<int>(x), op(static_cast<int>(y), static_cast<int>(z)));
        int rhs = op(op(static_cast<int>(x), static_cast<int>(y)), op(static_cast<int>(x), static_cast<int>(z)));
        if (lhs != rhs)
          throw verification_error("not self-distributive at x=" + std::to_string(x + 1) + " y=" +
                                   std::to_string(y + 1) + " z=" + std::to_string(z + 1));
      }
}

Rack Rack::from_one_based(const std::vector<std::vector<int>>& table) {
  std::vector<std::vector<int>> t = table;
  for (auto& row : t)
    for (auto& v : row) --v;
  return Rack(std::move(t));
}

Permutation Rack::row(int x) const { return Permutation::from_images(t_[static_cast<std::size_t>(x)]); }

Rack derived_rack(const SetSolution& s) {
  int n = static_cast<int>(s.size());
  std::vector<Permutation> tau_inv;
  for (int y = 0; y < n; ++y) tau_inv.push_back(s.tau(y).inverse());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = s.tau(x)(s.sigma(tau_inv[y](x))(y));
  return Rack(std::move(t));
}

SetSolution rack_solution(const Rack& r) {
  std::vector<Permutation> sigma;
  for (int x = 0; x < static_cast<int>(r.size()); ++x) sigma.push_back(r.row(x));
  return SetSolution(sigma, Permutation(r.size()));
}

SetSolution derived_solution(const SetSolution& s) { return rack_solution(derived_rack(s)); }

bool near_rack_compatible(const Rack& r, const Permutation& tau, std::pair<int, int>* witness) {
  int n = static_cast<int>(r.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (tau(r.op(tau(x), y)) != r.op(x, tau(y))) {
        if (witness) *witness = {x, y};
        return false;
      }
  return true;
}

SetSolution near_rack_from(const Rack& r, const Permutation& tau) {
  if (tau.degree() != r.size()) throw usage_error("near_rack_from: tau has the wrong degree");
  if (!tau.is_involution() || tau.is_identity())
    throw verification_error("near_rack_from: tau " + print_cycles(tau) + " is not a nontrivial involution");
  std::pair<int, int> w;
  if (!near_rack_compatible(r, tau, &w))
    throw verification_error("near_rack_from: tau(tau(x)|>y) != x|>tau(y) at (x,y)=" + pair_str(w.first, w.second));
  int n = static_cast<int>(r.size());
  std::vector<Permutation> sigma;
  for (int x = 0; x < n; ++x) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) img[y] = r.op(x, tau(y));
    sigma.push_back(Permutation::from_images(img));
  }
  return SetSolution(sigma, tau);
}

namespace {

// Backtracking with closure under phi(sigma_x(y)) = sigma'_{phi x}(phi y) and the tau analogue.
class IsoSearch {
 public:
  IsoSearch(const SetSolution& a, const SetSolution& b) : a_(a), b_(b), n_(static_cast<int>(a.size())) {
    for (int x = 0; x < n_; ++x) {
      inv_a_.push_back({a.sigma(x).cycle_type(), a.tau(x).cycle_type()});
      inv_b_.push_back({b.sigma(x).cycle_type(), b.tau(x).cycle_type()});
    }
  }

  std::optional<Permutation> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    std::vector<int> phi(static_cast<std::size_t>(n_), -1), used(static_cast<std::size_t>(n_), 0);
    if (search(phi, used)) return Permutation::from_images(phi);
    return std::nullopt;
  }

 private:
  using Inv = std::pair<std::vector<int>, std::vector<int>>;
  const SetSolution& a_;
  const SetSolution& b_;
  int n_;
  std::vector<Inv> inv_a_, inv_b_;

  bool assign(std::vector<int>& phi, std::vector<int>& used, int x, int y) {
    if (phi[x] >= 0) return phi[x] == y;
    if (used[y] || inv_a_[x] != inv_b_[y]) return false;
    phi[x] = y;
    used[y] = 1;
    return true;
  }

  bool close(std::vector<int>& phi, std::vector<int>& used) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n_; ++x) {
        if (phi[x] < 0) continue;
        for (int y = 0; y < n_; ++y) {
          if (phi[y] < 0) continue;
          auto [s, t] = a_(x, y);
          auto [s2, t2] = b_(phi[x], phi[y]);
          bool fs = phi[s] < 0, ft = phi[t] < 0;
          if (!assign(phi, used, s, s2) || !assign(phi, used, t, t2)) return false;
          changed = changed || fs != (phi[s] < 0) || ft != (phi[t] < 0);
        }
      }
    }
    return true;
  }

  bool search(std::vector<int>& phi, std::vector<int>& used) {
    if (!close(phi, used)) return false;
    int x = 0;
    while (x < n_ && phi[x] >= 0) ++x;
    if (x == n_) return true;
    for (int y = 0; y < n_; ++y) {
      if (used[y]) continue;
      std::vector<int> p2 = phi, u2 = used;
      if (assign(p2, u2, x, y) && search(p2, u2)) {
        phi = p2;
        used = u2;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> isomorphism(const SetSolution& a, const SetSolution& b) { return IsoSearch(a, b).run(); }

NearRackEnumeration enum_near_racks(const Rack& r) {
  NearRackEnumeration e;
  std::vector<SetSolution> reps;
  for_each_involution(r.size(), false, [&](const Permutation& tau) {
    if (!near_rack_compatible(r, tau)) return;
    SetSolution s = near_rack_from(r, tau);
    e.taus.push_back(tau);
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (isomorphic(reps[c], s)) {
        e.class_of.push_back(c);
        return;
      }
    e.class_of.push_back(reps.size());
    e.representatives.push_back(e.taus.size() - 1);
    reps.push_back(s);
  });
  return e;
}

Rack dihedral_rack(int n) {
  if (n < 1) throw usage_error("dihedral_rack: n must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = ((2 * i - j) % n + n) % n;
  return Rack(std::move(t));
}

Rack affine_rack(int m, int u) {
  if (m < 1) throw usage_error("affine_rack: modulus must be positive");
  if (std::gcd(((u % m) + m) % m, m) != 1)
    throw usage_error("affine_rack: " + std::to_string(u) + " is not a unit mod " + std::to_string(m));
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      long v = static_cast<long>(u) * b + static_cast<long>(1 - u) * a;
      t[a][b] = static_cast<int>(((v % m) + m) % m);
    }
  return Rack(std::move(t));
}

Rack conjugation_rack(const std::vector<Permutation>& elems) {
  std::size_t n = elems.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Permutation c = elems[x] * elems[y] * elems[x].inverse();
      auto it = std::find(elems.begin(), elems.end(), c);
      if (it == elems.end()) throw usage_error("conjugation_rack: elements are not closed under conjugation");
      t[x][y] = static_cast<int>(it - elems.begin());
    }
  return Rack(std::move(t));
}

Rack trivial_rack(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : t) std::iota(row.begin(), row.end(), 0);
  return Rack(std::move(t));
}

namespace {

SetSolution from_pair_map(int size, const std::function<std::pair<int, int>(int, int)>& r1) {
  // r1 works with labels 1..size.
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  std::vector<std::vector<int>> tau(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  for (int a = 1; a <= size; ++a)
    for (int b = 1; b <= size; ++b) {
      auto [u, v] = r1(a, b);
      if (u < 1 || u > size || v < 1 || v > size)
        throw Error(ErrorKind::Internal, "family formula left the set at " + pair_str(a - 1, b - 1));
      sig[a - 1][b - 1] = u - 1;
      tau[b - 1][a - 1] = v - 1;
    }
  std::vector<Permutation> s, t;
  for (int i = 0; i < size; ++i) {
    s.push_back(Permutation::from_images(sig[i]));
    t.push_back(Permutation::from_images(tau[i]));
  }
  return SetSolution(s, t);
}

long mod_floor(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

SetSolution k_family(int n) {
  if (n < 1) throw usage_error("k_family: n must be positive");
  const int N = 2 * n;
  return from_pair_map(N, [&](int a, int b) -> std::pair<int, int> {
    if (a == 1) return {b, 1};
    int t = N - a + 2;
    int d = static_cast<int>(mod_floor(b + 2 * a - 2, N));
    int f = static_cast<int>(mod_floor(N + 1 - b + 2 * a - 2, N));
    bool even = (a + b) % 2 == 0;
    if (even) return {d == 0 ? N : d, t};
    return {f == 0 ? 1 : N + 1 - f, t};
  });
}

SetSolution n_family(int n) {
  if (n < 1) throw usage_error("n_family: n must be positive");
  const int N = 2 * n + 1;
  auto R = [&](int gamma, int a, int b) -> std::pair<int, int> {
    int t = 2 * n - a + 2;
    if (b + gamma <= N) return {b + gamma, t};
    if (b + gamma == N + 1) return {N, t};
    return {4 * n + 3 - gamma - b, t};
  };
  auto L = [&](int gamma, int a, int b) -> std::pair<int, int> {
    int t = 2 * n - a + 2;
    if (gamma < b) return {b - gamma, t};
    if (gamma <= b + 2 * n) return {gamma - b + 1, t};
    throw Error(ErrorKind::Internal, "n_family: no branch for gamma=" + std::to_string(gamma) + " at " +
                                         pair_str(a - 1, b - 1));
  };
  return from_pair_map(N, [&](int a, int b) -> std::pair<int, int> {
    bool even = (a + b) % 2 == 0;
    if (a == n + 1) return {b, 2 * n - a + 2};
    if (a < n + 1) return even ? L(2 * (n - a + 1), a, b) : R(2 * (n - a + 1), a, b);
    return even ? R(2 * (a - n - 1), a, b) : L(2 * (a - n - 1), a, b);
  });
}

SetSolution metahomo_solution(const std::vector<std::vector<int>>& mult, const std::vector<int>& tau) {
  int n = static_cast<int>(mult.size());
  if (static_cast<int>(tau.size()) != n) throw usage_error("metahomo_solution: tau has the wrong size");
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n; ++y) ok = ok && mult[x][y] == y && mult[y][x] == y;
    if (ok) e = x;
  }
  if (e < 0) throw usage_error("metahomo_solution: table has no identity");
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mult[x][y] == e) inv[x] = y;
  auto m = [&](int a, int b) { return mult[a][b]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = tau[m(m(x, y), inv[tau[x]])];
      int rhs = m(m(tau[x], tau[y]), inv[tau[tau[x]]]);
      if (lhs != rhs)
        throw verification_error("metahomo_solution: tau(x y tau(x)^-1) != tau(x) tau(y) tau^2(x)^-1 at (x,y)=" +
                                 pair_str(x, y));
    }
  Permutation t = Permutation::from_images(tau);
  std::vector<Permutation> sigma;
  for (int x = 0; x < n; ++x) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) img[y] = m(m(x, y), inv[tau[x]]);
    sigma.push_back(Permutation::from_images(img));
  }
  return SetSolution(sigma, t);
}

std::vector<SetSolution> involutive_near_racks(int n) {
  std::vector<SetSolution> out;
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < k; ++i) std::swap(img[2 * i], img[2 * i + 1]);
    Permutation t = Permutation::from_images(img);
    out.emplace_back(std::vector<Permutation>(static_cast<std::size_t>(n), t), t);
  }
  return out;
}

}  // namespace nrack
