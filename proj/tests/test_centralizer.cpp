#include <doctest.h>

#include <random>
#include <set>

#include "brute_force.hpp"
#include "rsc/centralizer.hpp"
#include "rsc/error.hpp"

using namespace rsc;

namespace {

std::vector<WreathElement> all_wreath_elements(std::uint32_t l, std::uint32_t m) {
  std::vector<WreathElement> out;
  for (const auto& theta : brute::all_images(m)) {
    std::vector<std::uint32_t> f(m, 0);
    while (true) {
      out.push_back(WreathElement::make(l, f, brute::to_perm(theta)));
      std::size_t i = 0;
      while (i < m && ++f[i] == l) f[i++] = 0;
      if (i == m) break;
    }
  }
  return out;
}

using Key = std::pair<std::vector<std::uint32_t>, std::vector<Point>>;
Key key(const WreathElement& w) { return {w.f, {w.theta.images().begin(), w.theta.images().end()}}; }

WreathElement random_wreath(std::uint32_t l, std::uint32_t m, std::mt19937_64& rng) {
  std::vector<std::uint32_t> f(m);
  for (auto& b : f) b = static_cast<std::uint32_t>(rng() % l);
  return WreathElement::make(l, f, brute::random_perm(m, rng));
}

std::vector<Permutation> brute_centralizer(const Permutation& tau) {
  std::vector<Permutation> out;
  for (const auto& g : brute::all_images(tau.degree())) {
    const auto p = brute::to_perm(g);
    if (p * tau == tau * p) out.push_back(p);
  }
  return out;
}

} // namespace

TEST_CASE("wreath_multiply: identity, inverse, associativity") {
  std::mt19937_64 rng(42);
  const auto e = WreathElement::identity(4, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_wreath(4, 3, rng);
    const auto b = random_wreath(4, 3, rng);
    const auto c = random_wreath(4, 3, rng);
    CHECK(a * e == a);
    CHECK(e * a == a);
    CHECK(a * wreath_inverse(a) == e);
    CHECK(wreath_inverse(a) * a == e);
    CHECK((a * b) * c == a * (b * c));
  }
  CHECK_THROWS_AS(wreath_multiply(WreathElement::identity(2, 2), WreathElement::identity(3, 2)), DomainError);
  CHECK_THROWS_AS(WreathElement::make(3, {3}, Permutation(1)), DomainError);
  CHECK_THROWS_AS(WreathElement::make(3, {0, 1}, Permutation(3)), DomainError);
}

TEST_CASE("wreath_multiply follows the coordinate formula") {
  // b_i + b'_{θ⁻¹(i)} with θ⁻¹ = (1 2)
  const auto a = WreathElement::make(3, {1, 0}, Permutation::from_images({2, 1}));
  const auto b = WreathElement::make(3, {0, 2}, Permutation(2));
  const auto ab = a * b;
  CHECK(ab.f == std::vector<std::uint32_t>{(1 + 2) % 3, (0 + 0) % 3});
  CHECK(ab.theta == Permutation::from_images({2, 1}));
}

TEST_CASE("wreath_decompose examples") {
  const auto tau3 = Permutation::from_cycles(3, {{1, 2, 3}});
  const auto id = wreath_decompose(Permutation(3), tau3);
  CHECK(id == WreathElement::identity(3, 1));
  const auto w = wreath_decompose(tau3, tau3);
  CHECK(w.f == std::vector<std::uint32_t>{2});
  CHECK(w.theta.is_identity());
  CHECK(wreath_compose(WreathElement::make(3, {2}, Permutation(1)), tau3) == tau3);
  CHECK(wreath_compose(WreathElement::identity(3, 1), tau3).is_identity());

  CHECK_THROWS_AS(wreath_decompose(Permutation::from_cycles(3, {{1, 2}}), tau3), DomainError);
  CHECK_THROWS_AS(wreath_compose(WreathElement::identity(2, 1), tau3), DomainError);
  CHECK_THROWS_AS(WreathFrame(Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}})), DomainError);
}

TEST_CASE("wreath_decompose is an isomorphism Z_tau -> C_2 wr S_2 for (1 2)(3 4)") {
  const auto tau = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  const auto z = brute_centralizer(tau);
  REQUIRE(z.size() == 8);
  const WreathFrame frame(tau);
  std::set<Key> image;
  for (const auto& rho : z) {
    image.insert(key(frame.decompose(rho)));
    CHECK(frame.compose(frame.decompose(rho)) == rho);
    for (const auto& pi : z) CHECK(frame.decompose(rho * pi) == frame.decompose(rho) * frame.decompose(pi));
  }
  CHECK(image.size() == 8);
  for (const auto& w : all_wreath_elements(2, 2)) {
    const auto rho = frame.compose(w);
    CHECK(rho * tau == tau * rho);
    CHECK(frame.decompose(rho) == w);
  }
}

TEST_CASE("wreath frames on blocks of a mixed permutation") {
  // σ = (1 2)(3 4 5)(6 7 8) in S_8: block of 3-cycles is {3..8}
  const auto sigma = Permutation::from_cycles(8, {{1, 2}, {3, 4, 5}, {6, 7, 8}});
  const WreathFrame frame(sigma, 3);
  CHECK(frame.m() == 2);
  CHECK(frame.label(2, 0) == 6);
  CHECK(frame.label(1, 4) == 4);
  for (const auto& w : all_wreath_elements(3, 2)) {
    const auto rho = frame.compose(w);
    CHECK(rho * sigma == sigma * rho);
    CHECK(rho(1) == 1);
    CHECK(frame.decompose(rho) == w);
  }
}

TEST_CASE("derived subgroup of C_l wr S_m is {sum f = 0} x| A_m") {
  for (std::uint32_t l = 1; l <= 4; ++l) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      const auto all = all_wreath_elements(l, m);
      std::set<Key> seen;
      std::vector<WreathElement> derived;
      auto add = [&](const WreathElement& w) {
        if (seen.insert(key(w)).second) derived.push_back(w);
      };
      add(WreathElement::identity(l, m));
      for (const auto& a : all)
        for (const auto& b : all) add(wreath_inverse(a) * wreath_inverse(b) * a * b);
      for (std::size_t i = 0; i < derived.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          add(derived[i] * derived[j]);
          add(derived[j] * derived[i]);
        }
      std::uint64_t expected = 1;
      for (std::uint32_t i = 1; i < m; ++i) expected *= l;
      std::uint64_t alt = 1;
      for (std::uint32_t i = 3; i <= m; ++i) alt *= i;
      expected *= alt;
      CHECK(derived.size() == expected);
      for (const auto& w : derived) {
        std::uint32_t sum = 0;
        for (auto b : w.f) sum += b;
        CHECK(sum % l == 0);
        CHECK((m - brute::cycles({w.theta.images().begin(), w.theta.images().end()})) % 2 == 0);
      }
      // quotient order matches the per-factor rule: l, times 2 when m >= 2
      CHECK(all.size() / derived.size() == (m >= 2 ? 2 * l : l));
    }
  }
}

TEST_CASE("abelianization_invariants and gamma") {
  CHECK(abelianization_invariants(parse_cycle_type("1^3")).factors == std::vector<std::uint64_t>{2});
  CHECK(abelianization_invariants(parse_cycle_type("2^1 3^1")).factors == std::vector<std::uint64_t>{2, 3});
  CHECK(abelianization_invariants(parse_cycle_type("1^2 2^1")).factors == std::vector<std::uint64_t>{2, 2});
  CHECK(abelianization_invariants(parse_cycle_type("1^1")).factors.empty());
  CHECK(gamma(parse_cycle_type("1^4")) == 2);
  CHECK(gamma(parse_cycle_type("1^1 4^1")) == 4);
  CHECK(gamma(parse_cycle_type("5^1")) == 5);
  CHECK(gamma(parse_cycle_type("1^1")) == 1);

  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& t : enumerate_cycle_types(n)) {
      const auto inv = abelianization_invariants(t);
      CHECK(inv.order() == gamma(t));
      for (auto f : inv.factors) CHECK(f >= 2);
      // |Z_σ| = ∏ |C_i wr S_λi| = ∏ i^λi λi!
      std::uint64_t wreath_orders = 1;
      for (std::size_t i = 1; i <= n; ++i)
        for (std::uint32_t k = 1; k <= t.multiplicity(i); ++k) wreath_orders *= i * k;
      CHECK(centralizer_order(t) == wreath_orders);
    }
  }
}
