#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "nrack/error.hpp"
#include "nrack/modp.hpp"
#include "nrack/nichols.hpp"
#include "nrack/rank.hpp"
#include "spaces.hpp"

using namespace nrack;

namespace {

using Op = MonomialOperator<Cyclotomic>;
using Dense = std::vector<std::vector<Cyclotomic>>;

void accumulate(Dense& d, const Op& op) {
  for (std::size_t k = 0; k < op.dim(); ++k) d[op.target[k]][k] += op.scale[k];
}

// id + c1 + c2 + c1c2 + c2c1 + c1c2c1 on V^(x)3.
Dense six_terms(const ConcreteSpace& b) {
  std::size_t m = b.dim();
  Op c = braiding_operator(b), c1 = c.tensor_id(m), c2 = c.id_tensor(m);
  Dense d(m * m * m, std::vector<Cyclotomic>(m * m * m));
  for (const Op& t : {Op::identity(m * m * m), c1, c2, c1.after(c2), c2.after(c1), c1.after(c2.after(c1))})
    accumulate(d, t);
  return d;
}

Dense assembled(const ConcreteSpace& b, int n) {
  auto cols = symmetrizer(b, n);
  std::size_t N = cols.size();
  Dense d(N, std::vector<Cyclotomic>(N));
  for (std::size_t w = 0; w < N; ++w)
    for (const auto& [i, v] : cols[w]) d[i][w] = v;
  return d;
}

ConcreteSpace twisted_near_rack() {
  SetSolution s = near_rack_from(dihedral_rack(3), parse_cycles("(2,3)", 3));
  return spaces::solved(s, cyc_root_of_unity(3, 1));
}

// rows x cols matrix of rank at most r: small random combinations of r random rows over Q(zeta_6).
std::vector<SparseVec<Cyclotomic>> planted(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  auto entry = [&] {
    if (rng() % 3) return Cyclotomic(0);
    Cyclotomic z = cyc_root_of_unity(6, static_cast<int>(rng() % 6));
    return z * Cyclotomic(mpq_class(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3));
  };
  std::vector<std::vector<Cyclotomic>> base(r, std::vector<Cyclotomic>(cols));
  for (auto& row : base)
    for (auto& x : row) x = entry();
  std::vector<SparseVec<Cyclotomic>> out;
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Cyclotomic> v(cols, Cyclotomic(0));
    for (std::size_t k = 0; k < r; ++k) {
      Cyclotomic c = entry();
      for (std::size_t j = 0; j < cols; ++j) v[j] += c * base[k][j];
    }
    SparseVec<Cyclotomic> sv;
    for (std::size_t j = 0; j < cols; ++j)
      if (!v[j].is_zero()) sv.push_back({static_cast<std::uint32_t>(j), v[j]});
    out.push_back(sv);
  }
  return out;
}

}  // namespace

TEST_CASE("symmetrizer words enumerate the symmetric group") {
  CHECK(symmetrizer_words(1) == std::vector<std::vector<int>>{{}});
  CHECK(symmetrizer_words(3).size() == 6);
  CHECK(symmetrizer_words(5).size() == 120);
  std::size_t longest = 0;
  for (const auto& w : symmetrizer_words(4)) longest = std::max(longest, w.size());
  CHECK(longest == 6);
}

TEST_CASE("degree three symmetrizer is the six-term sum") {
  std::vector<ConcreteSpace> cases{
      spaces::two_dim(Cyclotomic(-1), cyc_root_of_unity(3, 1), cyc_root_of_unity(5, 2)),
      spaces::constant(rack_solution(dihedral_rack(3)), Cyclotomic(-1)),
      twisted_near_rack(),
  };
  for (const auto& b : cases) {
    REQUIRE(!braid_check(b).has_value());
    CHECK(assembled(b, 3) == six_terms(b));
  }
}

TEST_CASE("one-dimensional Nichols algebras") {
  for (int m = 2; m <= 6; ++m) {
    ConcreteSpace b = spaces::diagonal({{cyc_root_of_unity(m, 1)}});
    NicholsOptions opt;
    opt.cutoff = 10;
    opt.mode = RankMode::Exact;
    HilbertData h = graded_dims(b, opt);
    CHECK(h.finite == Finiteness::Finite);
    CHECK(h.total() == static_cast<std::size_t>(m));
  }
  NicholsOptions opt;
  opt.cutoff = 6;
  HilbertData h = graded_dims(spaces::diagonal({{Cyclotomic(1)}}), opt);
  CHECK(h.finite == Finiteness::UnknownAtCutoff);
  CHECK(h.dims == std::vector<std::size_t>(7, 1));
}

TEST_CASE("the dihedral rack of order three with constant -1 gives dimension 12") {
  NicholsOptions opt;
  opt.cutoff = 6;
  opt.mode = RankMode::Exact;
  HilbertData h = graded_dims(spaces::constant(rack_solution(dihedral_rack(3)), Cyclotomic(-1)), opt);
  // dims end with the first vanishing degree
  CHECK(h.dims == std::vector<std::size_t>{1, 3, 4, 3, 1, 0});
  CHECK(h.finite == Finiteness::Finite);
  CHECK(h.certification == "exact");
}

TEST_CASE("modular and exact ranks agree on small instances") {
  std::vector<ConcreteSpace> cases{
      spaces::two_dim(cyc_root_of_unity(3, 2), cyc_root_of_unity(3, 1), Cyclotomic(1)),
      spaces::two_dim(Cyclotomic(-1), Cyclotomic(-1), cyc_root_of_unity(4, 1)),
      spaces::constant(rack_solution(dihedral_rack(3)), Cyclotomic(-1)),
      twisted_near_rack(),
  };
  for (const auto& b : cases) {
    int N = 1;
    for (const auto& row : b.R)
      for (const auto& x : row) N = std::lcm(N, x.field());
    auto ps = primes_one_mod(N, 2);
    std::size_t words = 1;
    for (int n = 1; words * b.dim() <= 300; ++n) {
      words *= b.dim();
      std::size_t exact = symmetrizer_rank_exact(b, n);
      for (auto p : ps) CHECK(symmetrizer_rank_mod(b, n, p) == exact);
    }
  }
}

TEST_CASE("modular mode reports its primes") {
  NicholsOptions opt;
  opt.cutoff = 8;
  HilbertData mod = graded_dims(spaces::two_dim(Cyclotomic(-1), Cyclotomic(-1), cyc_root_of_unity(3, 1)), opt);
  opt.mode = RankMode::Exact;
  HilbertData ex = graded_dims(spaces::two_dim(Cyclotomic(-1), Cyclotomic(-1), cyc_root_of_unity(3, 1)), opt);
  CHECK(mod.dims == ex.dims);
  CHECK(mod.certification.rfind("modular(", 0) == 0);
}

TEST_CASE("graded comparison") {
  ConcreteSpace a = spaces::two_dim(Cyclotomic(-1), Cyclotomic(1), Cyclotomic(-1));
  ConcreteSpace b = spaces::two_dim(Cyclotomic(-1), cyc_root_of_unity(4, 1), Cyclotomic(-1));
  auto same = compare_graded(a, a, 4);
  CHECK(same.equal);
  auto diff = compare_graded(a, b, 4);
  CHECK(!diff.equal);
  CHECK(diff.first.dims != diff.second.dims);
}

TEST_CASE("budgets and bad input") {
  ConcreteSpace b = spaces::constant(rack_solution(dihedral_rack(3)), Cyclotomic(-1));
  CHECK_THROWS_AS(symmetrizer(b, 6, 1000), Error);
  NicholsOptions opt;
  opt.cutoff = 0;
  CHECK_THROWS_AS(graded_dims(b, opt), Error);
  ConcreteSpace z = b;
  z.R[0][0] = 0;
  CHECK_THROWS_AS(graded_dims(z), Error);
}

TEST_CASE("certified multi-modular rank matches plain elimination") {
  std::mt19937 rng(5);
  for (int t = 0; t < 6; ++t) {
    std::size_t rows = 50 + rng() % 12, cols = 50 + rng() % 12, r = 5 + rng() % 25;
    auto m = planted(rng, rows, cols, r);
    std::size_t expect = rank_exact_sparse(m);
    CHECK(expect <= r);
    CHECK(rank_exact(m, cols, kernels::Isa::Scalar) == expect);
    CHECK(rank_exact(m, cols, kernels::best_isa()) == expect);
  }
}
