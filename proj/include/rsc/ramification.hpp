#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>

#include "rsc/cycle_type.hpp"

namespace rsc {

/// A formal combination r = Σ r_C C over the conjugacy classes of S_n.
/// Only classes with r_C > 0 are stored; they form the support.
class Ramification {
public:
  using Support = std::map<CycleType, std::uint64_t, CanonicalOrder>;

  explicit Ramification(std::size_t n);
  /// r_C = k for every class of S_n (k = 1 gives Σ_C C).
  static Ramification uniform(std::size_t n, std::uint64_t k);

  std::size_t n() const noexcept { return n_; }
  /// Throws DomainError if `type` is not a partition of n. Setting zero
  /// removes the class from the support.
  void set(const CycleType& type, std::uint64_t r);
  std::uint64_t operator[](const CycleType& type) const;
  const Support& support() const noexcept { return support_; }

  bool operator==(const Ramification&) const = default;

private:
  std::size_t n_;
  Support support_;
};

/// Grammar: entry (";" entry)*, entry = <cycle-type> ":" <count>, where the
/// cycle type is in either accepted text form. "all:<k>" sets every class to
/// k and must be the only entry. Unknown partitions, partitions of the wrong
/// n, repeated classes and negative counts raise ParseError.
Ramification parse_ramification(std::string_view text, std::size_t n);

/// Inverse of parse_ramification for the support: "1^3:2;3^1:1".
std::string to_string(const Ramification& r);

} // namespace rsc
