#pragma once

// Brute-force ground truth on explicit small symmetric groups. Everything
// here is computed from group elements directly and shares nothing with
// the closed-form counting path beyond Permutation and CycleType.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "rsc/cycle_type.hpp"
#include "rsc/integer.hpp"
#include "rsc/perm.hpp"
#include "rsc/ramification.hpp"

namespace rsc::oracle {

inline constexpr std::size_t kMaxDegree = 5;
/// Largest point set an orbit partition will materialize.
inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 21;

/// An explicit permutation group, elements kept sorted.
class Subgroup {
public:
  /// Throws InvariantViolation unless `elements` is closed under products and
  /// contains the identity of degree n.
  Subgroup(std::size_t n, std::vector<Permutation> elements);
  static Subgroup generated_by(std::size_t n, const std::vector<Permutation>& generators);

  std::size_t degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const& noexcept { return elements_; }
  std::vector<Permutation> elements() && noexcept { return std::move(elements_); }
  bool contains(const Permutation& p) const;
  bool is_abelian() const;

  bool operator==(const Subgroup&) const = default;

private:
  std::size_t n_;
  std::vector<Permutation> elements_;
};

/// All n! permutations; 1 <= n <= kMaxDegree.
Subgroup symmetric_group(std::size_t n);
/// {g ∈ S_n : gσ = σg}; degree at most kMaxDegree.
Subgroup centralizer(const Permutation& sigma);
/// Centralizer of σ inside the symmetric group on the points σ moves (other
/// points fixed). Lets degree-7 permutations with small support be handled
/// without enumerating S_7. Support of at most 8 points.
Subgroup centralizer_on_support(const Permutation& sigma);
/// Generated by all commutators a b a⁻¹ b⁻¹.
Subgroup commutator_subgroup(const Subgroup& h);

/// H/H' realized on coset representatives (the least element of each coset)
/// with an internal direct decomposition into cyclic factors.
class FiniteAbelianGroup {
public:
  struct Generator {
    Permutation element; // coset representative
    std::uint64_t order;
  };

  const Subgroup& group() const noexcept { return group_; }
  const Subgroup& derived() const noexcept { return derived_; }
  const std::vector<Permutation>& carrier() const noexcept { return carrier_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

  std::uint64_t order() const noexcept { return carrier_.size(); }
  /// lcm of the generator orders (1 for the trivial group).
  std::uint64_t exponent() const noexcept { return exponent_; }
  /// Coordinates of h ∈ H, one residue per generator.
  const std::vector<std::uint64_t>& coordinates(const Permutation& h) const;
  /// Element order in H/H' -> number of quotient elements of that order.
  std::map<std::uint64_t, std::uint64_t> order_histogram() const;

private:
  friend FiniteAbelianGroup abelian_quotient(const Subgroup& h);
  FiniteAbelianGroup(Subgroup group, Subgroup derived)
    : group_(std::move(group)), derived_(std::move(derived)) {}

  Subgroup group_;
  Subgroup derived_;
  std::vector<Permutation> carrier_;
  std::vector<Generator> generators_;
  std::uint64_t exponent_ = 1;
  std::map<Permutation, std::vector<std::uint64_t>> projection_;
  std::vector<std::uint64_t> quotient_orders_;
};

/// Cyclic factors are extracted greedily: take an element of largest order
/// modulo the factors found so far, lifted to an element of that same order.
FiniteAbelianGroup abelian_quotient(const Subgroup& h);

/// One-dimensional character of H written additively: χ(h) = ζ^value(h) for a
/// fixed primitive modulus-th root of unity ζ.
class Character {
public:
  Character(std::uint64_t modulus, std::map<Permutation, std::uint64_t> values);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::map<Permutation, std::uint64_t>& values() const noexcept { return values_; }
  /// Throws DomainError if h is outside the domain.
  std::uint64_t operator()(const Permutation& h) const;

  auto operator<=>(const Character&) const = default;

private:
  std::uint64_t modulus_;
  std::map<Permutation, std::uint64_t> values_;
};

/// All |A| characters of H = A.group() trivial on H', modulus exponent(A),
/// sorted by their coordinate tuple on A's generators.
std::vector<Character> dual_characters(const FiniteAbelianGroup& a);

/// One class factor of an RSC: base point u and r characters of Z_u.
struct RSCPoint {
  Permutation u;
  std::vector<Character> chars;
  auto operator<=>(const RSCPoint&) const = default;
};

/// (g, π) · (u, (χ_i)) = (g u g⁻¹, (χ_{π⁻¹(i)} ∘ c_g⁻¹)) where c_g is
/// conjugation by g. π permutes {1..r}.
RSCPoint act(const Permutation& g, const Permutation& pi, const RSCPoint& p);

/// Explicit point set ⋃_{u ∈ C} (Ẑ_u)^r for one class C and multiplicity r.
/// Points are indexed by (member, character indices) in mixed radix.
class ClassSpace {
public:
  ClassSpace(const CycleType& type, std::uint64_t r, std::uint64_t budget = kDefaultPointBudget);

  const CycleType& type() const noexcept { return type_; }
  std::uint64_t r() const noexcept { return r_; }
  std::size_t gamma() const noexcept { return gamma_; }
  std::uint64_t size() const noexcept { return size_; }

  /// Class members in sorted order.
  const std::vector<Permutation>& members() const noexcept { return members_; }
  std::size_t member_index(const Permutation& u) const;
  const std::vector<Character>& characters(std::size_t member) const { return chars_[member]; }
  std::size_t character_index(std::size_t member, const Character& chi) const;

  std::uint64_t index(std::size_t member, std::span<const std::size_t> char_indices) const;
  std::pair<std::size_t, std::vector<std::size_t>> decode(std::uint64_t index) const;
  RSCPoint point(std::uint64_t index) const;
  std::uint64_t index_of(const RSCPoint& p) const;

private:
  CycleType type_;
  std::uint64_t r_;
  std::size_t gamma_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Permutation> members_;
  std::vector<std::vector<Character>> chars_;
  std::vector<std::map<Character, std::size_t>> char_lookup_;
};

struct OrbitPartition {
  std::vector<std::uint64_t> orbit_of; // point index -> orbit id, ids dense from 0
  std::uint64_t count = 0;
};

/// Orbits of Inn(S_n) × S_r on a class space, found by union-find over moves
/// of adjacent transpositions of S_n and of S_r.
OrbitPartition orbit_partition(const ClassSpace& space);

std::uint64_t orbit_count_class(std::size_t n, const CycleType& type, std::uint64_t r,
                                std::uint64_t budget = kDefaultPointBudget);

/// Memo for per-class orbit counts; safe for concurrent use.
class OrbitCountCache {
public:
  std::uint64_t get(const CycleType& type, std::uint64_t r, std::uint64_t budget = kDefaultPointBudget);

private:
  std::mutex mutex_;
  std::map<std::pair<std::vector<std::uint32_t>, std::uint64_t>, std::uint64_t> counts_;
};

/// Number of isomorphism classes as the product of per-class orbit counts.
Integer oracle_count(const Ramification& r, OrbitCountCache* cache = nullptr);

/// Orbit count on the whole of Ω(S_n, r) under ∏_C (Inn S_n × S_{r_C}),
/// without factoring over classes.
std::uint64_t orbit_count_monolithic(const Ramification& r, std::uint64_t budget = kDefaultPointBudget);

/// |{h ∈ C : gh = hg}|
std::uint64_t beta(const Permutation& g, const CycleType& type);

/// Points of the class space fixed by (g, π), counted one by one.
std::uint64_t fixed_point_count(const Permutation& g, const Permutation& pi, const CycleType& type,
                                std::uint64_t r);
/// Same on a prebuilt space.
std::uint64_t fixed_point_count(const Permutation& g, const Permutation& pi, const ClassSpace& space);

} // namespace rsc::oracle
