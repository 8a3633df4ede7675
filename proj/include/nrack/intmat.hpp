#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace nrack {

using IntVec = std::vector<mpz_class>;
using IntMat = std::vector<IntVec>;

IntMat int_identity(std::size_t n);
IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t inner);
mpz_class int_det(const IntMat& a);
std::size_t rank_q(const IntMat& a, std::size_t ncols);

// Observes the unimodular row operations applied by hermite_rows.
class RowListener {
 public:
  virtual ~RowListener() = default;
  virtual void swap(std::size_t, std::size_t) {}
  virtual void addmul(std::size_t dst, std::size_t src, const mpz_class& k) = 0;  // row dst += k*row src
  virtual void negate(std::size_t) {}
};

struct Pivot {
  std::size_t row, col;
};

// Row echelon form over Z visiting columns in `order`; pivots made positive and entries above
// them reduced into [0, pivot). Rows below the last pivot become zero.
std::vector<Pivot> hermite_rows(IntMat& a, const std::vector<std::size_t>& order, RowListener* listener = nullptr);

struct SmithForm {
  IntMat U, D, V;              // U*A*V = D
  std::vector<mpz_class> diag;  // nonzero diagonal entries d1 | d2 | ...
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMat& a, std::size_t ncols);

}  // namespace nrack
