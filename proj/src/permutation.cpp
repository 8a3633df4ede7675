#include "nrack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nrack/error.hpp"

namespace nrack {

Permutation::Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
      throw verification_error("map is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& table) {
  std::vector<int> img(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) img[i] = table[i] - 1;
  return from_images(std::move(img));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> t(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) t[i] = img_[i] + 1;
  return t;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[static_cast<std::size_t>(img_[i])] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<char> seen(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (int len : cycle_type()) o = std::lcm(o, static_cast<std::size_t>(len));
  return o;
}

int Permutation::fixed_points() const {
  int c = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) c += img_[i] == static_cast<int>(i);
  return c;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw usage_error("compose: degree mismatch");
  std::vector<int> img(f.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = f(g(static_cast<int>(i)));
  return Permutation::from_images(std::move(img));
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "id" || text.substr(pos) == "()" || pos == text.size()) return Permutation(n);
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw usage_error("parse_cycles: expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw usage_error("parse_cycles: expected a point in \"" + std::string(text) + "\"");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw usage_error("parse_cycles: point " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(v - 1)])
        throw usage_error("parse_cycles: point " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(v - 1)] = 1;
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw usage_error("parse_cycles: unterminated cycle in \"" + std::string(text) + "\"");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
  }
  return Permutation::from_images(std::move(img));
}

std::string print_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(static_cast<int>(i)) == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p(static_cast<int>(j)));
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

namespace {

void involutions_rec(std::vector<int>& img, std::size_t i, bool fpf, bool any_swap,
                     const std::function<void(const Permutation&)>& visit) {
  std::size_t n = img.size();
  while (i < n && img[i] >= 0) ++i;
  if (i == n) {
    if (any_swap) visit(Permutation::from_images(img));
    return;
  }
  if (!fpf) {
    img[i] = static_cast<int>(i);
    involutions_rec(img, i + 1, fpf, any_swap, visit);
    img[i] = -1;
  }
  for (std::size_t j = i + 1; j < n; ++j) {
    if (img[j] >= 0) continue;
    img[i] = static_cast<int>(j);
    img[j] = static_cast<int>(i);
    involutions_rec(img, i + 1, fpf, true, visit);
    img[i] = img[j] = -1;
  }
}

}  // namespace

void for_each_involution(std::size_t n, bool fixed_point_free,
                         const std::function<void(const Permutation&)>& visit) {
  std::vector<int> img(n, -1);
  involutions_rec(img, 0, fixed_point_free, false, visit);
}

std::vector<Permutation> involutions(std::size_t n, bool fixed_point_free) {
  std::vector<Permutation> out;
  for_each_involution(n, fixed_point_free, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace nrack
