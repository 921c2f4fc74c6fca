#include "rsc/combinatorics.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "rsc/error.hpp"

namespace rsc {

StirlingTable::StirlingTable(std::size_t n_max) : n_max_(n_max), rows_(n_max + 1) {
  rows_[0] = {Integer(1)};
  for (std::size_t n = 0; n < n_max; ++n) {
    auto& next = rows_[n + 1];
    next.assign(n + 2, Integer(0));
    for (std::size_t k = 1; k <= n + 1; ++k) {
      next[k] = rows_[n][k - 1];
      if (k <= n) next[k] += n * rows_[n][k];
    }
  }
}

const Integer& StirlingTable::operator()(std::size_t n, std::size_t k) const {
  if (k < 1 || k > n || n > n_max_)
    throw DomainError("stirling_first requires 1 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  return rows_[n][k];
}

Integer stirling_first(std::size_t n, std::size_t k) {
  static std::mutex mutex;
  static std::shared_ptr<const StirlingTable> table;

  if (k < 1 || k > n)
    throw DomainError("stirling_first requires 1 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  std::shared_ptr<const StirlingTable> snapshot;
  {
    std::lock_guard lock(mutex);
    if (!table || table->n_max() < n) {
      const auto grown = table ? std::max(n, 2 * table->n_max()) : std::max<std::size_t>(n, 32);
      table = std::make_shared<const StirlingTable>(grown);
    }
    snapshot = table;
  }
  return (*snapshot)(n, k);
}

Integer binomial(const Integer& a, std::uint64_t b) {
  if (a < 0) throw DomainError("binomial requires a non-negative top argument");
  if (b > a) return 0;
  Integer result = 1;
  // result stays C(a - b + i, i) after step i, so every division is exact
  for (std::uint64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Integer multiset_coefficient(const Integer& gamma, std::uint64_t r) {
  if (gamma < 1) throw DomainError("multiset_coefficient requires gamma >= 1");
  return binomial(gamma + r - 1, r);
}

WeakCompositions::WeakCompositions(std::uint64_t total, std::size_t parts)
  : total_(total), current_(parts, 0) {
  if (parts == 0) throw DomainError("weak compositions need at least one part");
}

void WeakCompositions::reset() noexcept {
  started_ = false;
  done_ = false;
}

bool WeakCompositions::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    first_weak_composition(current_, total_);
    return true;
  }
  done_ = !next_weak_composition(current_);
  return !done_;
}

void first_weak_composition(std::span<std::uint64_t> parts, std::uint64_t total) noexcept {
  std::fill(parts.begin(), parts.end(), 0);
  if (!parts.empty()) parts[0] = total;
}

std::vector<std::vector<std::uint64_t>> WeakCompositions::collect() {
  std::vector<std::vector<std::uint64_t>> out;
  while (next()) out.push_back(current_);
  return out;
}

} // namespace rsc
