#include "rsc/cycle_type.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

#include "rsc/error.hpp"

namespace rsc {

Integer factorial(std::uint64_t n) {
  Integer result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

CycleType CycleType::from_multiplicities(std::vector<std::uint32_t> lambda) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) n += std::uint64_t(i + 1) * lambda[i];
  if (n == 0) throw DomainError("cycle type must describe a partition of a positive integer");
  for (std::size_t i = n; i < lambda.size(); ++i)
    if (lambda[i] != 0) throw DomainError("cycle length exceeds n");
  lambda.resize(n, 0);
  return CycleType(std::move(lambda));
}

CycleType CycleType::from_parts(std::vector<std::uint32_t> parts) {
  std::uint64_t n = 0;
  for (auto p : parts) {
    if (p == 0) throw DomainError("partition parts must be positive");
    n += p;
  }
  if (n == 0) throw DomainError("empty partition");
  std::vector<std::uint32_t> lambda(n, 0);
  for (auto p : parts) ++lambda[p - 1];
  return CycleType(std::move(lambda));
}

std::uint32_t CycleType::multiplicity(std::size_t i) const noexcept {
  return (i >= 1 && i <= lambda_.size()) ? lambda_[i - 1] : 0;
}

std::vector<std::uint32_t> CycleType::parts() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = lambda_.size(); i >= 1; --i)
    out.insert(out.end(), lambda_[i - 1], static_cast<std::uint32_t>(i));
  return out;
}

std::size_t CycleType::cycle_count() const noexcept {
  std::size_t c = 0;
  for (auto m : lambda_) c += m;
  return c;
}

std::strong_ordering canonical_compare(const CycleType& a, const CycleType& b) {
  if (a.n() != b.n()) return a.n() <=> b.n();
  const auto pa = a.parts();
  const auto pb = b.parts();
  // descending: a lexicographically larger part list comes first
  return std::lexicographical_compare_three_way(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::string to_string(const CycleType& type) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 1; i <= type.n(); ++i) {
    if (type.multiplicity(i) == 0) continue;
    if (!first) os << ' ';
    os << i << '^' << type.multiplicity(i);
    first = false;
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  std::uint32_t number() {
    const auto start = pos;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("number out of range", start);
    if (ec != std::errc{}) throw ParseError("expected a non-negative integer", start);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

CycleType parse_bracketed(Cursor& c) {
  ++c.pos; // '['
  std::vector<std::uint32_t> parts;
  c.skip_space();
  if (!c.done() && c.peek() == ']') throw ParseError("empty part list", c.pos);
  while (true) {
    c.skip_space();
    const auto at = c.pos;
    const auto part = c.number();
    if (part == 0) throw ParseError("parts must be positive", at);
    parts.push_back(part);
    c.skip_space();
    if (c.done()) throw ParseError("missing ']'", c.pos);
    if (c.peek() == ']') {
      ++c.pos;
      break;
    }
    if (c.peek() != ',') throw ParseError("expected ',' or ']'", c.pos);
    ++c.pos;
  }
  c.skip_space();
  if (!c.done()) throw ParseError("unexpected trailing text", c.pos);
  return CycleType::from_parts(std::move(parts));
}

} // namespace

CycleType parse_cycle_type(std::string_view text) {
  Cursor c{text};
  c.skip_space();
  if (c.done()) throw ParseError("empty cycle type", c.pos);
  if (c.peek() == '[') return parse_bracketed(c);

  std::vector<std::uint32_t> lambda;
  while (!c.done()) {
    const auto at = c.pos;
    const auto length = c.number();
    if (length == 0) throw ParseError("cycle length must be positive", at);
    if (c.done() || c.peek() != '^') throw ParseError("expected '^'", c.pos);
    ++c.pos;
    const auto mult_at = c.pos;
    const auto mult = c.number();
    if (mult == 0) throw ParseError("multiplicity must be positive", mult_at);
    if (lambda.size() < length) lambda.resize(length, 0);
    if (lambda[length - 1] != 0) throw ParseError("repeated cycle length", at);
    lambda[length - 1] = mult;
    if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek())))
      throw ParseError("expected whitespace between tokens", c.pos);
    c.skip_space();
  }
  return CycleType::from_multiplicities(std::move(lambda));
}

Integer centralizer_order(const CycleType& type) {
  Integer order = 1;
  for (std::size_t i = 1; i <= type.n(); ++i) {
    const auto m = type.multiplicity(i);
    order *= factorial(m) * boost::multiprecision::pow(Integer(i), m);
  }
  return order;
}

Integer class_size(const CycleType& type) { return factorial(type.n()) / centralizer_order(type); }

std::vector<CycleType> enumerate_cycle_types(std::size_t n) {
  if (n == 0) throw DomainError("n must be positive");
  std::vector<CycleType> out;
  std::vector<std::uint32_t> parts;
  // parts are generated non-increasing, larger parts first: descending lex order
  std::function<void(std::size_t, std::uint32_t)> recurse = [&](std::size_t rest, std::uint32_t cap) {
    if (rest == 0) {
      out.push_back(CycleType::from_parts(parts));
      return;
    }
    for (auto p = static_cast<std::uint32_t>(std::min<std::size_t>(rest, cap)); p >= 1; --p) {
      parts.push_back(p);
      recurse(rest - p, p);
      parts.pop_back();
    }
  };
  recurse(n, static_cast<std::uint32_t>(n));
  return out;
}

} // namespace rsc
