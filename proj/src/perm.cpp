#include "rsc/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rsc/error.hpp"

namespace rsc {

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), Point{1});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x < 1 || x > images.size() || seen[x - 1])
      throw DomainError("images do not form a bijection of {1..n}");
    seen[x - 1] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  Permutation p(n);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto x = cycle[k];
      if (x < 1 || x > n || used[x - 1]) throw DomainError("cycles must be disjoint and within {1..n}");
      used[x - 1] = true;
      p.images_[x - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  const auto n = p.degree();
  std::vector<Cycle> cycles;
  std::vector<bool> seen(n, false);
  for (Point start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    Cycle c;
    for (Point x = start; !seen[x - 1]; x = p(x)) {
      seen[x - 1] = true;
      c.points.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::uint32_t> lambda(p.degree(), 0);
  for (const auto& c : cycle_decomposition(p)) ++lambda[c.length() - 1];
  return CycleType::from_multiplicities(std::move(lambda));
}

std::size_t cycle_count(const Permutation& p) { return cycle_decomposition(p).size(); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("permutations of different degree");
  std::vector<Point> images(p.degree());
  for (Point x = 1; x <= p.degree(); ++x) images[x - 1] = p(q(x));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (Point x = 1; x <= p.degree(); ++x) images[p(x) - 1] = x;
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  if (g.degree() != x.degree()) throw DomainError("permutations of different degree");
  // g x g⁻¹ sends g(i) to g(x(i))
  std::vector<Point> images(x.degree());
  for (Point i = 1; i <= x.degree(); ++i) images[g(i) - 1] = g(x(i));
  return Permutation::from_images(std::move(images));
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (const auto& c : cycle_decomposition(p)) {
    if (c.length() == 1) continue;
    os << '(';
    for (std::size_t k = 0; k < c.length(); ++k) os << (k ? " " : "") << c.points[k];
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

Permutation canonical_representative(const CycleType& type) {
  std::vector<std::vector<Point>> cycles;
  Point next = 1;
  for (std::size_t len = 1; len <= type.n(); ++len) {
    for (std::uint32_t k = 0; k < type.multiplicity(len); ++k) {
      std::vector<Point> cycle(len);
      std::iota(cycle.begin(), cycle.end(), next);
      next += static_cast<Point>(len);
      cycles.push_back(std::move(cycle));
    }
  }
  return Permutation::from_cycles(type.n(), cycles);
}

std::map<std::size_t, std::vector<Point>> support_blocks(const Permutation& sigma) {
  std::map<std::size_t, std::vector<Point>> blocks;
  for (const auto& c : cycle_decomposition(sigma)) {
    auto& block = blocks[c.length()];
    block.insert(block.end(), c.points.begin(), c.points.end());
  }
  for (auto& [len, block] : blocks) std::sort(block.begin(), block.end());
  return blocks;
}

bool centralizer_membership(const Permutation& rho, const Permutation& sigma) {
  if (rho.degree() != sigma.degree()) throw DomainError("permutations of different degree");
  for (const auto& [len, block] : support_blocks(sigma)) {
    for (auto y : block)
      if (!std::binary_search(block.begin(), block.end(), rho(y))) return false;
    for (auto y : block)
      if (rho(sigma(y)) != sigma(rho(y))) return false;
  }
  return true;
}

} // namespace rsc
