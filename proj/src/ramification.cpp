#include "rsc/ramification.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "rsc/error.hpp"

namespace rsc {

Ramification::Ramification(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("n must be positive");
}

Ramification Ramification::uniform(std::size_t n, std::uint64_t k) {
  Ramification r(n);
  for (const auto& type : enumerate_cycle_types(n)) r.set(type, k);
  return r;
}

void Ramification::set(const CycleType& type, std::uint64_t r) {
  if (type.n() != n_)
    throw DomainError("cycle type " + to_string(type) + " is not a partition of " + std::to_string(n_));
  if (r == 0) support_.erase(type);
  else support_[type] = r;
}

std::uint64_t Ramification::operator[](const CycleType& type) const {
  const auto it = support_.find(type);
  return it == support_.end() ? 0 : it->second;
}

namespace {

std::pair<std::size_t, std::size_t> trimmed(std::string_view text, std::size_t begin, std::size_t end) {
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return {begin, end};
}

std::uint64_t parse_count(std::string_view text, std::size_t begin, std::size_t end) {
  std::tie(begin, end) = trimmed(text, begin, end);
  if (begin == end) throw ParseError("missing count", begin);
  if (text[begin] == '-') throw ParseError("counts must be non-negative", begin);
  std::uint64_t value = 0;
  const auto* first = text.data() + begin;
  const auto* last = text.data() + end;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError("count out of range", begin);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("count must be a non-negative integer", static_cast<std::size_t>(ptr - text.data()));
  return value;
}

} // namespace

Ramification parse_ramification(std::string_view text, std::size_t n) {
  Ramification result(n);
  std::set<CycleType, CanonicalOrder> seen;
  bool saw_all = false;
  std::size_t entries = 0;

  std::size_t begin = 0;
  while (true) {
    auto end = text.find(';', begin);
    if (end == std::string_view::npos) end = text.size();
    const auto [eb, ee] = trimmed(text, begin, end);
    if (eb == ee) throw ParseError("empty ramification entry", eb);
    const auto colon = text.substr(eb, ee - eb).rfind(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<cycle-type>:<count>'", eb);
    const auto [kb, ke] = trimmed(text, eb, eb + colon);
    const auto count = parse_count(text, eb + colon + 1, ee);
    const auto key = text.substr(kb, ke - kb);
    ++entries;

    if (key == "all") {
      if (entries != 1 || end != text.size())
        throw ParseError("'all' cannot be combined with other entries", kb);
      saw_all = true;
      result = Ramification::uniform(n, count);
    } else {
      if (saw_all) throw ParseError("'all' cannot be combined with other entries", kb);
      if (key.empty()) throw ParseError("missing cycle type", kb);
      CycleType type = [&] {
        try {
          return parse_cycle_type(key);
        } catch (const ParseError& e) {
          throw ParseError(e.detail(), kb + e.position());
        } catch (const DomainError& e) {
          throw ParseError(e.what(), kb);
        }
      }();
      if (type.n() != n)
        throw ParseError("cycle type " + to_string(type) + " has parts summing to " +
                           std::to_string(type.n()) + ", expected " + std::to_string(n),
                         kb);
      if (!seen.insert(type).second) throw ParseError("repeated cycle type " + to_string(type), kb);
      result.set(type, count);
    }

    if (end == text.size()) break;
    begin = end + 1;
  }
  return result;
}

std::string to_string(const Ramification& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [type, count] : r.support()) {
    os << (first ? "" : ";") << to_string(type) << ':' << count;
    first = false;
  }
  return os.str();
}

} // namespace rsc
