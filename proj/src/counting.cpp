#include "rsc/counting.hpp"

#include <limits>
#include <sstream>

#include "rsc/centralizer.hpp"
#include "rsc/error.hpp"

namespace rsc {

void require_supported(std::size_t n) {
  if (n == 6) throw UnsupportedGroupError(n);
}

std::vector<ClassFactor> class_factors(const Ramification& r) {
  require_supported(r.n());
  std::vector<ClassFactor> out;
  for (const auto& [type, rc] : r.support()) {
    auto g = gamma(type);
    auto factor = multiset_coefficient(g, rc);
    out.push_back({type, rc, std::move(g), std::move(factor)});
  }
  return out;
}

Integer count_rsc(const Ramification& r) {
  Integer total = 1;
  for (const auto& f : class_factors(r)) total *= f.factor;
  return total;
}

Integer count_rsc_stirling(const Ramification& r) {
  require_supported(r.n());
  Integer total = 1;
  for (const auto& [type, rc] : r.support()) {
    const auto g = gamma(type);
    // Σ_k s(r, k) γ^k is the rising factorial γ(γ+1)...(γ+r-1)
    Integer sum = 0;
    Integer power = 1;
    for (std::uint64_t k = 1; k <= rc; ++k) {
      power *= g;
      sum += stirling_first(rc, k) * power;
    }
    Integer quotient, remainder;
    boost::multiprecision::divide_qr(sum, factorial(rc), quotient, remainder);
    if (remainder != 0)
      throw InvariantViolation("orbit sum for class " + to_string(type) + " is not divisible by r_C!");
    total *= quotient;
  }
  return total;
}

std::string to_string(const RSCTypeVector& t) {
  std::ostringstream os;
  os << '{';
  for (std::size_t e = 0; e < t.entries.size(); ++e) {
    const auto& entry = t.entries[e];
    os << (e ? ", " : "") << '(';
    for (std::size_t i = 0; i < entry.multiplicities.size(); ++i)
      os << (i ? "," : "") << entry.multiplicities[i];
    os << ")_{" << to_string(entry.type) << '}';
  }
  os << '}';
  return os.str();
}

namespace {

std::size_t gamma_as_size(const CycleType& type) {
  const auto g = gamma(type);
  if (g > std::numeric_limits<std::size_t>::max())
    throw ResourceError("gamma of " + to_string(type) + " is too large to enumerate");
  return g.convert_to<std::size_t>();
}

} // namespace

TypeStream::TypeStream(const Ramification& r) {
  require_supported(r.n());
  for (const auto& [type, rc] : r.support()) {
    totals_.push_back(rc);
    current_.entries.push_back({type, std::vector<std::uint64_t>(gamma_as_size(type), 0)});
  }
}

bool TypeStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    for (std::size_t i = 0; i < totals_.size(); ++i)
      first_weak_composition(current_.entries[i].multiplicities, totals_[i]);
    return true;
  }
  for (std::size_t i = totals_.size(); i-- > 0;) {
    if (!next_weak_composition(current_.entries[i].multiplicities)) continue;
    for (std::size_t j = i + 1; j < totals_.size(); ++j)
      first_weak_composition(current_.entries[j].multiplicities, totals_[j]);
    return true;
  }
  done_ = true;
  return false;
}

std::vector<RSCTypeVector> enumerate_types(const Ramification& r, std::optional<std::size_t> limit) {
  std::vector<RSCTypeVector> out;
  TypeStream stream(r);
  while ((!limit || out.size() < *limit) && stream.next()) out.push_back(stream.current());
  return out;
}

nlohmann::json count_report_json(const Ramification& r) {
  auto classes = nlohmann::json::array();
  Integer total = 1;
  for (const auto& f : class_factors(r)) {
    classes.push_back({{"class", to_string(f.type)},
                       {"r", f.r},
                       {"gamma", f.gamma.convert_to<std::uint64_t>()}});
    total *= f.factor;
  }
  return {{"n", r.n()}, {"ramification", classes}, {"count", to_decimal(total)}};
}

Ramification ramification_from_json(const nlohmann::json& report) {
  const auto n = report.at("n").get<std::size_t>();
  Ramification r(n);
  for (const auto& entry : report.at("ramification")) {
    const auto type = parse_cycle_type(entry.at("class").get<std::string>());
    if (r[type] != 0) throw DomainError("repeated class " + to_string(type));
    r.set(type, entry.at("r").get<std::uint64_t>());
  }
  return r;
}

} // namespace rsc
