#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nrack/braided.hpp"
#include "nrack/rank.hpp"

namespace nrack {

// Generator sequences (1-based c_i indices, operator product left to right) from the recursion
// S_n = (S_{n-1} (x) id)(id + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}..c_1).
std::vector<std::vector<int>> symmetrizer_words(int n);

enum class RankMode { Exact, Modular };

struct NicholsOptions {
  int cutoff = 8;
  RankMode mode = RankMode::Modular;
  std::size_t memory_budget = std::size_t{1} << 30;  // bytes for stored symmetrizer columns
  kernels::Isa isa = kernels::best_isa();
  std::size_t prime_pool = 12;  // candidate primes for modular mode
};

enum class Finiteness { Finite, UnknownAtCutoff };

struct HilbertData {
  std::vector<std::size_t> dims;  // degrees 0..last computed
  Finiteness finite = Finiteness::UnknownAtCutoff;
  std::string certification;     // "exact" or "modular(p1,p2,..)"
  std::size_t total() const;
};

// Columns of S_n: column w (word index, first letter most significant) as a sparse vector.
std::vector<SparseVec<Cyclotomic>> symmetrizer(const ConcreteSpace& b, int n,
                                                std::size_t memory_budget = std::size_t{1} << 30);

HilbertData graded_dims(const ConcreteSpace& b, const NicholsOptions& opt = {});

struct GradedComparison {
  bool equal = false;
  HilbertData first, second;
};
GradedComparison compare_graded(const ConcreteSpace& a, const ConcreteSpace& b, int cutoff,
                                 RankMode mode = RankMode::Exact);

// Rank of S_n at one degree, mod p; exposed for cross-checks.
std::size_t symmetrizer_rank_mod(const ConcreteSpace& b, int n, std::uint32_t p,
                                 kernels::Isa isa = kernels::best_isa());
std::size_t symmetrizer_rank_exact(const ConcreteSpace& b, int n);

}  // namespace nrack
