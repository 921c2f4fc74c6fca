#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsc/combinatorics.hpp"
#include "rsc/cycle_type.hpp"
#include "rsc/integer.hpp"
#include "rsc/ramification.hpp"

namespace rsc {

/// Throws UnsupportedGroupError for n = 6.
void require_supported(std::size_t n);

/// Per-class data behind a count: γ_C and the factor C(γ_C + r_C - 1, r_C).
struct ClassFactor {
  CycleType type;
  std::uint64_t r;
  Integer gamma;
  Integer factor;
};

std::vector<ClassFactor> class_factors(const Ramification& r);

/// Number of isomorphism classes of RSCs over S_n with ramification r:
/// ∏_C C(γ_C + r_C - 1, r_C) over the support. Empty support gives 1.
Integer count_rsc(const Ramification& r);

/// Same count by the orbit-counting route: ∏_C (1/r_C!) Σ_k s(r_C, k) γ_C^k.
/// Each division is checked to be exact (InvariantViolation otherwise).
Integer count_rsc_stirling(const Ramification& r);

/// Per support class (canonical order), the multiplicity of each of the
/// γ_C characters among the r_C characters attached to that class.
struct RSCTypeVector {
  struct Entry {
    CycleType type;
    std::vector<std::uint64_t> multiplicities;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;
  bool operator==(const RSCTypeVector&) const = default;
};

/// "{(1,0,0)_{3^1}, (1,0)_{1^1 2^1}}"; the empty type vector is "{}".
std::string to_string(const RSCTypeVector& t);

/// Lazy stream over representative types: the Cartesian product of the
/// per-class weak compositions, last class varying fastest. Single consumer.
class TypeStream {
public:
  explicit TypeStream(const Ramification& r);

  /// Advances to the next type vector; false once exhausted.
  bool next();
  const RSCTypeVector& current() const noexcept { return current_; }

private:
  // each entry's multiplicities double as that class's composition state
  std::vector<std::uint64_t> totals_;
  RSCTypeVector current_;
  bool started_ = false;
  bool done_ = false;
};

/// Materializes up to `limit` representative types.
std::vector<RSCTypeVector> enumerate_types(const Ramification& r,
                                           std::optional<std::size_t> limit = std::nullopt);

/// {"n", "ramification": [{"class", "r", "gamma"}], "count": "<decimal>"}
nlohmann::json count_report_json(const Ramification& r);
/// Reads the "n" and "ramification" members of a count report.
Ramification ramification_from_json(const nlohmann::json& report);

} // namespace rsc
