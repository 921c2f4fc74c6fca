#pragma once

#include <cstdint>
#include <vector>

#include "rsc/cycle_type.hpp"
#include "rsc/integer.hpp"
#include "rsc/perm.hpp"

namespace rsc {

/// Element ((b_i)_i, θ) of C_l wr S_m = (C_l)^m ⋊ S_m with C_l written
/// additively: b_i is a residue mod l.
struct WreathElement {
  std::uint32_t l = 1;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> f;
  Permutation theta;

  static WreathElement identity(std::uint32_t l, std::uint32_t m);
  /// Validates residues and the size of θ; throws DomainError.
  static WreathElement make(std::uint32_t l, std::vector<std::uint32_t> f, Permutation theta);

  bool operator==(const WreathElement&) const = default;
};

/// ((b_i + b'_{θ⁻¹(i)})_i, θθ')
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b);
/// ((-b_{θ(i)})_i, θ⁻¹)
WreathElement wreath_inverse(const WreathElement& a);

inline WreathElement operator*(const WreathElement& a, const WreathElement& b) {
  return wreath_multiply(a, b);
}

/// Labelling a_{ij} = τ^j(anchor_i) of the block of τ formed by its
/// m cycles of length l. Anchors are the smallest points of those cycles and
/// cycles are indexed by ascending anchor.
///
/// The block is the set of points on cycles of length l. With no explicit l,
/// l is the common length of the non-trivial cycles of τ (or 1 when τ is
/// the identity); mixed non-trivial lengths are a DomainError.
class WreathFrame {
public:
  explicit WreathFrame(const Permutation& tau);
  WreathFrame(const Permutation& tau, std::uint32_t l);

  std::uint32_t l() const noexcept { return l_; }
  std::uint32_t m() const noexcept { return static_cast<std::uint32_t>(labels_.size()); }
  const Permutation& tau() const noexcept { return tau_; }
  /// a_{ij}, i in 1..m, j taken mod l.
  Point label(std::uint32_t i, std::uint64_t j) const { return labels_[i - 1][j % l_]; }

  /// φ(ρ) = (f_ρ, θ(ρ)) with ρ⁻¹(a_{i0}) = a_{jk}, j = θ⁻¹(i), f(i) = k.
  /// ρ must map the block onto itself and commute with τ there; points off
  /// the block are ignored.
  WreathElement decompose(const Permutation& rho) const;
  /// The unique ρ supported on the block with φ(ρ) = w.
  Permutation compose(const WreathElement& w) const;

private:
  void build(std::uint32_t l);

  Permutation tau_;
  std::uint32_t l_ = 1;
  std::vector<std::vector<Point>> labels_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> position_; // point -> (i, j), i = 0 off block
};

WreathElement wreath_decompose(const Permutation& rho, const Permutation& tau);
Permutation wreath_compose(const WreathElement& w, const Permutation& tau);

/// Direct-product factors of Z_σ/Z_σ' kept as listed per cycle length:
/// C_i when λ_i = 1, C_i × C_2 when λ_i >= 2. Trivial factors dropped.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;
  Integer order() const;
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelianization_invariants(const CycleType& type);

/// Number of one-dimensional characters of a centralizer in the class:
/// (∏_{λ_i = 1} i)(∏_{λ_i >= 2} 2i).
Integer gamma(const CycleType& type);

} // namespace rsc
