#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rsc/integer.hpp"

namespace rsc {

/// Unsigned Stirling numbers of the first kind s(n, k) for 1 <= k <= n <= n_max,
/// filled by s(n+1, k) = s(n, k-1) + n s(n, k).
class StirlingTable {
public:
  explicit StirlingTable(std::size_t n_max);

  std::size_t n_max() const noexcept { return n_max_; }
  /// Throws DomainError unless 1 <= k <= n <= n_max.
  const Integer& operator()(std::size_t n, std::size_t k) const;

private:
  std::size_t n_max_;
  std::vector<std::vector<Integer>> rows_; // rows_[n][k], k in 0..n
};

/// Number of permutations of n letters with exactly k cycles. Backed by a
/// shared table that grows on demand; safe to call concurrently.
Integer stirling_first(std::size_t n, std::size_t k);

/// C(a, b); zero when b > a.
Integer binomial(const Integer& a, std::uint64_t b);

/// C(γ + r - 1, r): multisets of size r drawn from γ symbols.
Integer multiset_coefficient(const Integer& gamma, std::uint64_t r);

/// Sets `parts` to the first weak composition of `total`: (total, 0, .., 0).
void first_weak_composition(std::span<std::uint64_t> parts, std::uint64_t total) noexcept;
/// Steps `parts` to its successor in descending lexicographic order among
/// weak compositions of the same total. Returns false (leaving `parts`
/// unchanged) when it is already (0, .., 0, total).
inline bool next_weak_composition(std::span<std::uint64_t> parts) noexcept {
  const auto k = parts.size();
  if (k < 2) return false;
  // rightmost non-zero entry before the last slot; every entry between it
  // and the last slot is zero
  std::size_t pos = k - 1;
  while (pos > 0 && parts[pos - 1] == 0) --pos;
  if (pos == 0) return false;
  --pos;
  const auto tail = parts[k - 1];
  parts[k - 1] = 0;
  --parts[pos];
  parts[pos + 1] = tail + 1;
  return true;
}

/// Lazy stream of weak compositions of `total` into `parts` non-negative
/// parts, descending lexicographic: (r,0,..,0) first, (0,..,0,r) last.
class WeakCompositions {
public:
  WeakCompositions(std::uint64_t total, std::size_t parts);

  /// Advances to the next composition; false once exhausted. The first
  /// call positions the stream on the first composition.
  bool next();
  const std::vector<std::uint64_t>& current() const noexcept { return current_; }
  /// Rewinds to the state before the first next().
  void reset() noexcept;

  /// Materializes the remaining stream.
  std::vector<std::vector<std::uint64_t>> collect();

private:
  std::uint64_t total_;
  std::vector<std::uint64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

} // namespace rsc
