#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace nrack {

// Permutation of {0,..,n-1}. Text I/O uses labels 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n);

  // Images are 0-based; throws unless they form a bijection.
  static Permutation from_images(std::vector<int> images);
  static Permutation from_one_based(const std::vector<int>& table);

  std::size_t degree() const { return img_.size(); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  std::size_t order() const;
  int fixed_points() const;
  // Sorted cycle lengths, including fixed points as 1-cycles.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// (f*g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);
inline Permutation operator*(const Permutation& f, const Permutation& g) { return compose(f, g); }

Permutation parse_cycles(std::string_view text, std::size_t n);
// Cycles ordered by smallest moved point, each starting at its smallest point; "id" for identity.
std::string print_cycles(const Permutation& p);

// Visits every involution of degree n other than the identity, in a fixed order.
void for_each_involution(std::size_t n, bool fixed_point_free,
                         const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> involutions(std::size_t n, bool fixed_point_free = false);

}  // namespace nrack
