#include "rsc/centralizer.hpp"

#include <algorithm>
#include <numeric>

#include "rsc/error.hpp"

namespace rsc {

WreathElement WreathElement::identity(std::uint32_t l, std::uint32_t m) {
  return WreathElement{l, m, std::vector<std::uint32_t>(m, 0), Permutation(m)};
}

WreathElement WreathElement::make(std::uint32_t l, std::vector<std::uint32_t> f, Permutation theta) {
  if (l == 0) throw DomainError("wreath base order must be positive");
  if (f.size() != theta.degree() || f.empty())
    throw DomainError("wreath element: base length must equal the degree of the top permutation");
  for (auto b : f)
    if (b >= l) throw DomainError("wreath element: base entry out of range");
  const auto m = static_cast<std::uint32_t>(f.size());
  return WreathElement{l, m, std::move(f), std::move(theta)};
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b) {
  if (a.l != b.l || a.m != b.m) throw DomainError("wreath elements from different groups");
  const auto theta_inv = inverse(a.theta);
  std::vector<std::uint32_t> f(a.m);
  for (Point i = 1; i <= a.m; ++i)
    f[i - 1] = (a.f[i - 1] + b.f[theta_inv(i) - 1]) % a.l;
  return WreathElement{a.l, a.m, std::move(f), compose(a.theta, b.theta)};
}

WreathElement wreath_inverse(const WreathElement& a) {
  std::vector<std::uint32_t> f(a.m);
  for (Point i = 1; i <= a.m; ++i) f[i - 1] = (a.l - a.f[a.theta(i) - 1]) % a.l;
  return WreathElement{a.l, a.m, std::move(f), inverse(a.theta)};
}

WreathFrame::WreathFrame(const Permutation& tau) : tau_(tau) {
  std::uint32_t l = 1;
  for (const auto& c : cycle_decomposition(tau)) {
    if (c.length() == 1) continue;
    if (l != 1 && l != c.length())
      throw DomainError("tau must consist of cycles of a single length; pass l explicitly");
    l = static_cast<std::uint32_t>(c.length());
  }
  build(l);
}

WreathFrame::WreathFrame(const Permutation& tau, std::uint32_t l) : tau_(tau) { build(l); }

void WreathFrame::build(std::uint32_t l) {
  l_ = l;
  position_.assign(tau_.degree() + 1, {0, 0});
  // cycle_decomposition already yields cycles by ascending smallest point,
  // each starting at that point
  for (const auto& c : cycle_decomposition(tau_)) {
    if (c.length() != l) continue;
    labels_.push_back(c.points);
    const auto i = static_cast<std::uint32_t>(labels_.size());
    for (std::uint32_t j = 0; j < l; ++j) position_[c.points[j]] = {i, j};
  }
  if (labels_.empty()) throw DomainError("tau has no cycles of length " + std::to_string(l));
}

WreathElement WreathFrame::decompose(const Permutation& rho) const {
  if (rho.degree() != tau_.degree()) throw DomainError("permutations of different degree");
  for (const auto& cycle : labels_) {
    for (auto y : cycle) {
      if (position_[rho(y)].first == 0) throw DomainError("rho does not preserve the block of tau");
      if (rho(tau_(y)) != tau_(rho(y))) throw DomainError("rho does not commute with tau");
    }
  }
  const auto rho_inv = inverse(rho);
  const auto m = this->m();
  std::vector<std::uint32_t> f(m);
  std::vector<Point> theta(m);
  for (std::uint32_t i = 1; i <= m; ++i) {
    const auto [j, k] = position_[rho_inv(label(i, 0))];
    f[i - 1] = k;
    theta[j - 1] = i;
  }
  return WreathElement{l_, m, std::move(f), Permutation::from_images(std::move(theta))};
}

Permutation WreathFrame::compose(const WreathElement& w) const {
  if (w.l != l_ || w.m != m()) throw DomainError("wreath element does not match the frame of tau");
  std::vector<Point> images(tau_.degree());
  std::iota(images.begin(), images.end(), Point{1});
  // ρ⁻¹(a_{i,r}) = a_{j,k+r} with θ(j) = i, f(i) = k
  for (std::uint32_t j = 1; j <= m(); ++j) {
    const auto i = w.theta(j);
    const auto k = w.f[i - 1];
    for (std::uint32_t r = 0; r < l_; ++r) images[label(j, k + r) - 1] = label(i, r);
  }
  return Permutation::from_images(std::move(images));
}

WreathElement wreath_decompose(const Permutation& rho, const Permutation& tau) {
  return WreathFrame(tau).decompose(rho);
}

Permutation wreath_compose(const WreathElement& w, const Permutation& tau) {
  return WreathFrame(tau).compose(w);
}

Integer AbelianInvariants::order() const {
  Integer p = 1;
  for (auto f : factors) p *= f;
  return p;
}

AbelianInvariants abelianization_invariants(const CycleType& type) {
  AbelianInvariants inv;
  for (std::size_t i = 1; i <= type.n(); ++i) {
    const auto m = type.multiplicity(i);
    if (m == 0) continue;
    if (i > 1) inv.factors.push_back(i);
    if (m >= 2) inv.factors.push_back(2);
  }
  return inv;
}

Integer gamma(const CycleType& type) {
  Integer g = 1;
  for (std::size_t i = 1; i <= type.n(); ++i) {
    const auto m = type.multiplicity(i);
    if (m == 1) g *= i;
    else if (m >= 2) g *= 2 * i;
  }
  return g;
}

} // namespace rsc
