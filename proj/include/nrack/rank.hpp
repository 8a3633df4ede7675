#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nrack/cyclotomic.hpp"
#include "nrack/kernels/axpy.hpp"

namespace nrack {

// Row-major rows x cols over F_p; destroyed in place.
std::size_t rank_mod_dense(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p,
                           kernels::Isa isa = kernels::best_isa());

template <class T>
using SparseVec = std::vector<std::pair<std::uint32_t, T>>;  // sorted by index, no zeros

// Rank of the matrix whose rows are given, by elimination with Markowitz pivoting.
std::size_t rank_exact_sparse(std::vector<SparseVec<Cyclotomic>> rows);

// Exact rank over Q(zeta) of a rows x ncols matrix. Small inputs are eliminated directly. Larger
// ones take ranks modulo prime ideals of degree one: each is a lower bound, and once the product
// of the primes exceeds a Hadamard bound on the norm of any nonzero minor one size larger than
// the best rank seen, that rank is exact.
std::size_t rank_exact(const std::vector<SparseVec<Cyclotomic>>& rows, std::size_t ncols,
                       kernels::Isa isa = kernels::best_isa());

// Basis of {v : sum_k v_k * col_k = 0} for the given columns in a space of dimension `dim`.
std::vector<std::vector<Cyclotomic>> kernel_exact(const std::vector<SparseVec<Cyclotomic>>& cols, std::size_t dim);

}  // namespace nrack
