#include "rsc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rsc/error.hpp"

namespace rsc::oracle {

namespace {

void require_oracle_degree(std::size_t n) {
  if (n < 1 || n > kMaxDegree)
    throw DomainError("oracle supports 1 <= n <= " + std::to_string(kMaxDegree) + " (got " +
                      std::to_string(n) + ")");
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation transposition(std::size_t n, Point a, Point b) {
  return Permutation::from_cycles(n, {{a, b}});
}

// S_k is generated by (1 2), (2 3), ..., (k-1 k).
std::vector<Permutation> adjacent_transpositions(std::size_t k) {
  std::vector<Permutation> out;
  for (Point a = 1; a < k; ++a) out.push_back(transposition(k, a, a + 1));
  return out;
}

class UnionFind {
public:
  explicit UnionFind(std::uint64_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::uint64_t{0});
  }
  std::uint64_t find(std::uint64_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  OrbitPartition partition() {
    OrbitPartition out;
    out.orbit_of.resize(parent_.size());
    std::vector<std::uint64_t> id(parent_.size(), UINT64_MAX);
    for (std::uint64_t x = 0; x < parent_.size(); ++x) {
      const auto root = find(x);
      if (id[root] == UINT64_MAX) id[root] = out.count++;
      out.orbit_of[x] = id[root];
    }
    return out;
  }

private:
  std::vector<std::uint64_t> parent_;
};

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(std::size_t n, std::vector<Permutation> elements) : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!contains(Permutation(n))) throw InvariantViolation("subgroup is missing the identity");
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (!contains(a * b)) throw InvariantViolation("subgroup is not closed under products");
}

Subgroup Subgroup::generated_by(std::size_t n, const std::vector<Permutation>& generators) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = x * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return Subgroup(n, {seen.begin(), seen.end()});
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::is_abelian() const {
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (a * b != b * a) return false;
  return true;
}

Subgroup symmetric_group(std::size_t n) {
  require_oracle_degree(n);
  return Subgroup(n, all_permutations(n));
}

Subgroup centralizer(const Permutation& sigma) {
  require_oracle_degree(sigma.degree());
  std::vector<Permutation> out;
  for (auto& g : all_permutations(sigma.degree()))
    if (g * sigma == sigma * g) out.push_back(std::move(g));
  return Subgroup(sigma.degree(), std::move(out));
}

Subgroup centralizer_on_support(const Permutation& sigma) {
  const auto n = sigma.degree();
  std::vector<Point> moved;
  for (Point x = 1; x <= n; ++x)
    if (sigma(x) != x) moved.push_back(x);
  if (moved.size() > 8) throw ResourceError("support too large for a direct centralizer search");
  std::vector<Point> arrangement = moved;
  std::vector<Permutation> out;
  do {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{1});
    for (std::size_t k = 0; k < moved.size(); ++k) images[moved[k] - 1] = arrangement[k];
    auto g = Permutation::from_images(std::move(images));
    if (g * sigma == sigma * g) out.push_back(std::move(g));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return Subgroup(n, std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& h) {
  std::set<Permutation> commutators;
  for (const auto& a : h.elements())
    for (const auto& b : h.elements()) commutators.insert(a * b * inverse(a) * inverse(b));
  return Subgroup::generated_by(h.degree(), {commutators.begin(), commutators.end()});
}

// ------------------------------------------------------------- quotient

const std::vector<std::uint64_t>& FiniteAbelianGroup::coordinates(const Permutation& h) const {
  const auto it = projection_.find(h);
  if (it == projection_.end()) throw DomainError("element " + to_string(h) + " is not in the group");
  return it->second;
}

std::map<std::uint64_t, std::uint64_t> FiniteAbelianGroup::order_histogram() const {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (auto o : quotient_orders_) ++hist[o];
  return hist;
}

FiniteAbelianGroup abelian_quotient(const Subgroup& h) {
  FiniteAbelianGroup a(h, commutator_subgroup(h));
  const auto& derived = a.derived_;

  // coset representative = least element of h H'
  std::map<Permutation, std::size_t> coset_of;
  for (const auto& x : h.elements()) {
    if (coset_of.count(x)) continue;
    const auto index = a.carrier_.size();
    a.carrier_.push_back(x); // elements are visited in increasing order
    for (const auto& k : derived.elements()) coset_of[x * k] = index;
  }
  const auto q = a.carrier_.size();
  std::vector<std::vector<std::size_t>> mul(q, std::vector<std::size_t>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) mul[i][j] = coset_of.at(a.carrier_[i] * a.carrier_[j]);
  const std::size_t e = coset_of.at(Permutation(h.degree()));

  auto power = [&](std::size_t x, std::uint64_t k) {
    std::size_t y = e;
    for (std::uint64_t i = 0; i < k; ++i) y = mul[y][x];
    return y;
  };
  auto order_mod = [&](std::size_t x, const std::vector<bool>& in_span) {
    std::uint64_t d = 1;
    for (std::size_t y = x; !in_span[y]; y = mul[y][x]) ++d;
    return d;
  };

  a.quotient_orders_.resize(q);
  {
    const std::vector<bool> only_e = [&] {
      std::vector<bool> v(q, false);
      v[e] = true;
      return v;
    }();
    for (std::size_t x = 0; x < q; ++x) a.quotient_orders_[x] = order_mod(x, only_e);
  }

  std::vector<bool> in_span(q, false);
  in_span[e] = true;
  std::vector<std::size_t> span_elements{e};
  std::vector<std::size_t> gens;
  while (span_elements.size() < q) {
    std::size_t best = e;
    std::uint64_t best_order = 0;
    for (std::size_t x = 0; x < q; ++x) {
      const auto d = order_mod(x, in_span);
      if (d > best_order) {
        best = x;
        best_order = d;
      }
    }
    // lift: an element of the coset best·S whose order in the quotient is best_order
    std::size_t lift = q;
    for (auto s : span_elements) {
      const auto y = mul[best][s];
      if (a.quotient_orders_[y] == best_order && (lift == q || y < lift)) lift = y;
    }
    if (lift == q) throw InvariantViolation("cyclic decomposition: no lift of maximal order");
    gens.push_back(lift);
    a.generators_.push_back({a.carrier_[lift], best_order});
    std::vector<std::size_t> grown;
    for (auto s : span_elements)
      for (std::uint64_t k = 1; k < best_order; ++k) grown.push_back(mul[s][power(lift, k)]);
    for (auto y : grown) {
      if (in_span[y]) throw InvariantViolation("cyclic decomposition: factors are not independent");
      in_span[y] = true;
    }
    span_elements.insert(span_elements.end(), grown.begin(), grown.end());
    std::sort(span_elements.begin(), span_elements.end());
    span_elements.erase(std::unique(span_elements.begin(), span_elements.end()), span_elements.end());
  }

  // coordinates of every quotient element, then of every element of H
  std::vector<std::vector<std::uint64_t>> coords(q);
  std::vector<bool> assigned(q, false);
  std::uint64_t total = 1;
  for (const auto& g : a.generators_) total *= g.order;
  if (total != q) throw InvariantViolation("cyclic decomposition does not cover the quotient");
  for (std::uint64_t code = 0; code < total; ++code) {
    // mixed radix, last generator least significant
    std::vector<std::uint64_t> tuple(gens.size());
    auto rest = code;
    for (std::size_t g = gens.size(); g-- > 0;) {
      tuple[g] = rest % a.generators_[g].order;
      rest /= a.generators_[g].order;
    }
    std::size_t y = e;
    for (std::size_t g = 0; g < gens.size(); ++g) y = mul[y][power(gens[g], tuple[g])];
    if (assigned[y]) throw InvariantViolation("cyclic decomposition: coordinates are not unique");
    assigned[y] = true;
    coords[y] = std::move(tuple);
  }

  a.exponent_ = 1;
  for (const auto& g : a.generators_) a.exponent_ = std::lcm(a.exponent_, g.order);
  for (const auto& x : h.elements()) a.projection_[x] = coords[coset_of.at(x)];
  return a;
}

// ------------------------------------------------------------- characters

Character::Character(std::uint64_t modulus, std::map<Permutation, std::uint64_t> values)
  : modulus_(modulus), values_(std::move(values)) {
  if (modulus_ == 0) throw DomainError("character modulus must be positive");
  for (const auto& [h, v] : values_)
    if (v >= modulus_) throw DomainError("character value out of range");
}

std::uint64_t Character::operator()(const Permutation& h) const {
  const auto it = values_.find(h);
  if (it == values_.end()) throw DomainError("element " + to_string(h) + " is outside the character's domain");
  return it->second;
}

std::vector<Character> dual_characters(const FiniteAbelianGroup& a) {
  const auto m = a.exponent();
  const auto& gens = a.generators();
  std::vector<Character> out;
  std::vector<std::uint64_t> choice(gens.size(), 0);
  while (true) {
    std::map<Permutation, std::uint64_t> values;
    for (const auto& h : a.group().elements()) {
      const auto& c = a.coordinates(h);
      std::uint64_t v = 0;
      for (std::size_t g = 0; g < gens.size(); ++g) v = (v + c[g] * choice[g] * (m / gens[g].order)) % m;
      values.emplace(h, v);
    }
    for (const auto& k : a.derived().elements())
      if (values.at(k) != 0) throw InvariantViolation("character is not trivial on the derived subgroup");
    out.emplace_back(m, std::move(values));

    // lexicographic successor, first generator most significant
    std::size_t g = gens.size();
    bool advanced = false;
    while (g-- > 0) {
      if (++choice[g] < gens[g].order) {
        advanced = true;
        break;
      }
      choice[g] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

RSCPoint act(const Permutation& g, const Permutation& pi, const RSCPoint& p) {
  if (g.degree() != p.u.degree()) throw DomainError("act: g and u have different degree");
  if (pi.degree() != p.chars.size()) throw DomainError("act: pi must permute the character slots");
  RSCPoint out{conjugate(g, p.u), {}};
  const auto pi_inv = inverse(pi);
  out.chars.reserve(p.chars.size());
  for (Point i = 1; i <= p.chars.size(); ++i) {
    const auto& source = p.chars[pi_inv(i) - 1];
    // new value at g k g⁻¹ is the old value at k
    std::map<Permutation, std::uint64_t> values;
    for (const auto& [k, v] : source.values()) values.emplace(conjugate(g, k), v);
    out.chars.emplace_back(source.modulus(), std::move(values));
  }
  return out;
}

// ------------------------------------------------------------- class spaces

ClassSpace::ClassSpace(const CycleType& type, std::uint64_t r, std::uint64_t budget) : type_(type), r_(r) {
  require_oracle_degree(type.n());
  for (auto& u : all_permutations(type.n()))
    if (cycle_type(u) == type) members_.push_back(std::move(u));
  for (const auto& u : members_) {
    auto chars = dual_characters(abelian_quotient(centralizer(u)));
    std::map<Character, std::size_t> lookup;
    for (std::size_t i = 0; i < chars.size(); ++i) lookup.emplace(chars[i], i);
    chars_.push_back(std::move(chars));
    char_lookup_.push_back(std::move(lookup));
  }
  gamma_ = chars_.front().size();
  for (const auto& c : chars_)
    if (c.size() != gamma_) throw InvariantViolation("conjugate centralizers have different character counts");
  const auto per_member = checked_pow(gamma_, r_, budget);
  if (per_member > budget || per_member * members_.size() > budget)
    throw ResourceError("class space for " + to_string(type) + " with r=" + std::to_string(r) +
                        " exceeds the point budget of " + std::to_string(budget));
  size_ = per_member * members_.size();
}

std::size_t ClassSpace::member_index(const Permutation& u) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), u);
  if (it == members_.end() || *it != u) throw DomainError(to_string(u) + " is not in class " + to_string(type_));
  return static_cast<std::size_t>(it - members_.begin());
}

std::size_t ClassSpace::character_index(std::size_t member, const Character& chi) const {
  const auto it = char_lookup_.at(member).find(chi);
  if (it == char_lookup_[member].end())
    throw InvariantViolation("not a one-dimensional character of the centralizer");
  return it->second;
}

std::uint64_t ClassSpace::index(std::size_t member, std::span<const std::size_t> char_indices) const {
  std::uint64_t idx = member;
  for (auto c : char_indices) idx = idx * gamma_ + c;
  return idx;
}

std::pair<std::size_t, std::vector<std::size_t>> ClassSpace::decode(std::uint64_t index) const {
  std::vector<std::size_t> chars(r_);
  for (std::size_t i = r_; i-- > 0;) {
    chars[i] = index % gamma_;
    index /= gamma_;
  }
  return {static_cast<std::size_t>(index), std::move(chars)};
}

RSCPoint ClassSpace::point(std::uint64_t index) const {
  auto [member, chars] = decode(index);
  RSCPoint p{members_[member], {}};
  for (auto c : chars) p.chars.push_back(chars_[member][c]);
  return p;
}

std::uint64_t ClassSpace::index_of(const RSCPoint& p) const {
  const auto member = member_index(p.u);
  std::vector<std::size_t> chars;
  for (const auto& chi : p.chars) chars.push_back(character_index(member, chi));
  return index(member, chars);
}

// ------------------------------------------------------------- orbits

namespace {

// For each generator of Inn(S_n) and each member u, the induced map on
// character indices of Z_u -> Z_{g u g⁻¹}, derived through act().
struct ConjugationMoves {
  std::vector<std::vector<std::size_t>> target;                 // [gen][member]
  std::vector<std::vector<std::vector<std::size_t>>> transport; // [gen][member][char]
};

ConjugationMoves conjugation_moves(const ClassSpace& space) {
  const auto n = space.type().n();
  const auto gens = adjacent_transpositions(n);
  ConjugationMoves moves;
  const Permutation one_slot(1);
  for (const auto& g : gens) {
    std::vector<std::size_t> targets;
    std::vector<std::vector<std::size_t>> transports;
    for (std::size_t m = 0; m < space.members().size(); ++m) {
      const auto& u = space.members()[m];
      const auto target = space.member_index(conjugate(g, u));
      std::vector<std::size_t> map;
      for (const auto& chi : space.characters(m)) {
        const auto moved = act(g, one_slot, RSCPoint{u, {chi}});
        map.push_back(space.character_index(target, moved.chars.front()));
      }
      targets.push_back(target);
      transports.push_back(std::move(map));
    }
    moves.target.push_back(std::move(targets));
    moves.transport.push_back(std::move(transports));
  }
  return moves;
}

// Applies every generator move of one class space to the point `local`,
// reporting each image through `emit`.
template <typename Emit>
void for_each_move(const ClassSpace& space, const ConjugationMoves& moves, std::uint64_t local, Emit&& emit) {
  const auto [member, chars] = space.decode(local);
  for (std::size_t g = 0; g < moves.target.size(); ++g) {
    const auto target = moves.target[g][member];
    std::vector<std::size_t> image(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) image[i] = moves.transport[g][member][chars[i]];
    emit(space.index(target, image));
  }
  for (std::size_t i = 0; i + 1 < chars.size(); ++i) {
    auto swapped = chars;
    std::swap(swapped[i], swapped[i + 1]);
    emit(space.index(member, swapped));
  }
}

} // namespace

OrbitPartition orbit_partition(const ClassSpace& space) {
  const auto moves = conjugation_moves(space);
  UnionFind uf(space.size());
  for (std::uint64_t x = 0; x < space.size(); ++x)
    for_each_move(space, moves, x, [&](std::uint64_t y) { uf.unite(x, y); });
  return uf.partition();
}

std::uint64_t orbit_count_class(std::size_t n, const CycleType& type, std::uint64_t r, std::uint64_t budget) {
  if (type.n() != n) throw DomainError("cycle type " + to_string(type) + " is not a partition of " + std::to_string(n));
  if (r == 0) return 1;
  return orbit_partition(ClassSpace(type, r, budget)).count;
}

std::uint64_t OrbitCountCache::get(const CycleType& type, std::uint64_t r, std::uint64_t budget) {
  const auto key = std::make_pair(type.multiplicities(), r);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = counts_.find(key); it != counts_.end()) return it->second;
  }
  const auto count = orbit_count_class(type.n(), type, r, budget);
  std::lock_guard lock(mutex_);
  counts_.emplace(key, count);
  return count;
}

Integer oracle_count(const Ramification& r, OrbitCountCache* cache) {
  require_oracle_degree(r.n());
  Integer total = 1;
  for (const auto& [type, rc] : r.support())
    total *= cache ? cache->get(type, rc) : orbit_count_class(r.n(), type, rc);
  return total;
}

std::uint64_t orbit_count_monolithic(const Ramification& r, std::uint64_t budget) {
  require_oracle_degree(r.n());
  std::vector<ClassSpace> spaces;
  std::uint64_t total = 1;
  for (const auto& [type, rc] : r.support()) {
    spaces.emplace_back(type, rc, budget);
    if (total > budget / spaces.back().size())
      throw ResourceError("full RSC space exceeds the point budget of " + std::to_string(budget));
    total *= spaces.back().size();
  }
  std::vector<ConjugationMoves> moves;
  for (const auto& s : spaces) moves.push_back(conjugation_moves(s));

  // mixed radix, last class least significant
  std::vector<std::uint64_t> stride(spaces.size(), 1);
  for (std::size_t c = spaces.size(); c-- > 1;) stride[c - 1] = stride[c] * spaces[c].size();

  UnionFind uf(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    for (std::size_t c = 0; c < spaces.size(); ++c) {
      const auto local = (x / stride[c]) % spaces[c].size();
      const auto base = x - local * stride[c];
      for_each_move(spaces[c], moves[c], local, [&](std::uint64_t y) { uf.unite(x, base + y * stride[c]); });
    }
  }
  return uf.partition().count;
}

std::uint64_t beta(const Permutation& g, const CycleType& type) {
  require_oracle_degree(g.degree());
  if (type.n() != g.degree()) throw DomainError("cycle type and permutation have different degree");
  std::uint64_t count = 0;
  for (const auto& h : all_permutations(g.degree()))
    if (cycle_type(h) == type && g * h == h * g) ++count;
  return count;
}

std::uint64_t fixed_point_count(const Permutation& g, const Permutation& pi, const ClassSpace& space) {
  std::uint64_t fixed = 0;
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    const auto p = space.point(x);
    if (act(g, pi, p) == p) ++fixed;
  }
  return fixed;
}

std::uint64_t fixed_point_count(const Permutation& g, const Permutation& pi, const CycleType& type,
                                std::uint64_t r) {
  return fixed_point_count(g, pi, ClassSpace(type, r));
}

} // namespace rsc::oracle
