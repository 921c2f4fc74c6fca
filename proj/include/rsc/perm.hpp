#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rsc/cycle_type.hpp"

namespace rsc {

using Point = std::uint32_t;

/// A bijection of {1..n} in one-line image form.
class Permutation {
public:
  Permutation() = default;
  /// Identity on {1..n}.
  explicit Permutation(std::size_t n);

  /// `images[i-1]` is the image of point i. Throws DomainError unless the
  /// images form a bijection of {1..n}.
  static Permutation from_images(std::vector<Point> images);
  /// Product of the given disjoint cycles on {1..n}; unlisted points are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x - 1]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<Point> images_;
};

struct Cycle {
  std::vector<Point> points;
  std::size_t length() const noexcept { return points.size(); }
  bool operator==(const Cycle&) const = default;
};

/// Cycles ordered by smallest point, each rotated to start there.
/// Fixed points appear as 1-cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& p);
CycleType cycle_type(const Permutation& p);
std::size_t cycle_count(const Permutation& p);

/// (compose(p, q))(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// g x g⁻¹
Permutation conjugate(const Permutation& g, const Permutation& x);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Cycle notation with fixed points omitted; the identity prints as "()".
std::string to_string(const Permutation& p);

/// Cycles of ascending length packed onto consecutive points from 1, each
/// cycle sending p to p+1 cyclically. For 1^1 2^2 this is (2 3)(4 5).
Permutation canonical_representative(const CycleType& type);

/// Y_i: the points lying in cycles of length i, keyed by i, each sorted.
std::map<std::size_t, std::vector<Point>> support_blocks(const Permutation& sigma);

/// ρ ∈ Z_σ tested blockwise: each Y_i is ρ-invariant and ρ|Y_i commutes
/// with σ|Y_i.
bool centralizer_membership(const Permutation& rho, const Permutation& sigma);

} // namespace rsc
