#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rsc/integer.hpp"

namespace rsc {

/// A partition of n stored as cycle-length multiplicities λ_1..λ_n.
/// Identifies a conjugacy class of S_n.
class CycleType {
public:
  /// `lambda[i-1]` is the number of cycles of length i; n = Σ i·λ_i.
  /// Trailing entries beyond n must be zero and are dropped.
  static CycleType from_multiplicities(std::vector<std::uint32_t> lambda);
  /// Part list in any order, e.g. {2, 2, 1}. Parts must be positive.
  static CycleType from_parts(std::vector<std::uint32_t> parts);

  std::size_t n() const noexcept { return lambda_.size(); }
  /// λ_i for 1-based cycle length i; zero for i outside 1..n.
  std::uint32_t multiplicity(std::size_t i) const noexcept;
  const std::vector<std::uint32_t>& multiplicities() const noexcept { return lambda_; }

  /// Parts in descending order.
  std::vector<std::uint32_t> parts() const;
  /// Σ λ_i, fixed points included.
  std::size_t cycle_count() const noexcept;

  bool operator==(const CycleType&) const = default;

private:
  explicit CycleType(std::vector<std::uint32_t> lambda) : lambda_(std::move(lambda)) {}
  std::vector<std::uint32_t> lambda_;
};

/// Canonical class order used by every table and enumeration: descending
/// lexicographic on the descending part list, so for n = 4 the order is
/// 4, 3 1, 2 2, 2 1 1, 1 1 1 1. Types of different n order by n.
std::strong_ordering canonical_compare(const CycleType& a, const CycleType& b);

struct CanonicalOrder {
  bool operator()(const CycleType& a, const CycleType& b) const {
    return canonical_compare(a, b) < 0;
  }
};

/// `i^m` tokens, ascending i, zero multiplicities omitted: "1^1 2^2".
std::string to_string(const CycleType& type);

/// Accepts "1^1 2^2" (any token order, no repeats) or "[2,2,1]".
/// Throws ParseError with the offending offset.
CycleType parse_cycle_type(std::string_view text);

/// n! / ∏ λ_i! i^λ_i
Integer class_size(const CycleType& type);
/// ∏ λ_i! i^λ_i
Integer centralizer_order(const CycleType& type);

/// All partitions of n, each once, in canonical order.
std::vector<CycleType> enumerate_cycle_types(std::size_t n);

} // namespace rsc
