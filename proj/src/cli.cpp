#include "rsc/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsc/centralizer.hpp"
#include "rsc/counting.hpp"
#include "rsc/error.hpp"
#include "rsc/oracle.hpp"
#include "rsc/perm.hpp"

namespace rsc::cli {

namespace {

std::string factors_string(const AbelianInvariants& inv) {
  if (inv.factors.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < inv.factors.size(); ++i)
    s += (i ? "," : "") + std::to_string(inv.factors[i]);
  return s;
}

std::size_t type_column_width(const std::vector<CycleType>& types) {
  std::size_t w = 4;
  for (const auto& t : types) w = std::max(w, to_string(t).size());
  return w + 2;
}

} // namespace

void cmd_classes(std::size_t n, std::ostream& out) {
  const auto types = enumerate_cycle_types(n);
  const auto w = static_cast<int>(type_column_width(types));
  out << std::left << std::setw(w) << "type" << std::setw(14) << "class_size" << std::setw(14)
      << "centralizer" << std::setw(8) << "gamma"
      << "abelian_factors\n";
  for (const auto& t : types) {
    out << std::setw(w) << to_string(t) << std::setw(14) << to_decimal(class_size(t)) << std::setw(14)
        << to_decimal(centralizer_order(t)) << std::setw(8) << to_decimal(gamma(t))
        << factors_string(abelianization_invariants(t)) << '\n';
  }
}

void cmd_count(std::size_t n, std::string_view spec, OutputFormat format, std::ostream& out) {
  require_supported(n);
  const auto r = parse_ramification(spec, n);
  if (format == OutputFormat::json) {
    out << count_report_json(r).dump(2) << '\n';
    return;
  }
  const auto factors = class_factors(r);
  std::vector<CycleType> types;
  for (const auto& f : factors) types.push_back(f.type);
  const auto w = static_cast<int>(type_column_width(types));
  out << std::left << std::setw(w) << "class" << std::setw(8) << "r" << std::setw(8) << "gamma"
      << "factor\n";
  Integer total = 1;
  for (const auto& f : factors) {
    out << std::setw(w) << to_string(f.type) << std::setw(8) << f.r << std::setw(8) << to_decimal(f.gamma)
        << to_decimal(f.factor) << '\n';
    total *= f.factor;
  }
  out << "N(S_" << n << ", r) = " << to_decimal(total) << '\n';
}

void cmd_reps(std::size_t n, std::string_view spec, std::optional<std::size_t> limit, std::ostream& out) {
  require_supported(n);
  const auto r = parse_ramification(spec, n);
  out << "# n=" << n << " ramification=" << (r.support().empty() ? "(empty)" : to_string(r)) << '\n';
  for (const auto& [type, rc] : r.support())
    out << "# " << to_string(type) << " u0=" << to_string(canonical_representative(type))
        << " gamma=" << to_decimal(gamma(type)) << " r=" << rc << '\n';
  TypeStream stream(r);
  for (std::size_t emitted = 0; (!limit || emitted < *limit) && stream.next(); ++emitted)
    out << to_string(stream.current()) << '\n';
}

std::size_t cmd_verify(std::size_t n, std::uint64_t max_r, std::ostream& out) {
  if (n < 2 || n > oracle::kMaxDegree)
    throw DomainError("verify supports 2 <= n <= " + std::to_string(oracle::kMaxDegree));
  const auto types = enumerate_cycle_types(n);
  oracle::OrbitCountCache cache;
  std::vector<std::uint64_t> digits(types.size(), 0);
  std::size_t cases = 0, failures = 0;
  while (true) {
    Ramification r(n);
    for (std::size_t i = 0; i < types.size(); ++i) r.set(types[i], digits[i]);
    const auto expected = oracle::oracle_count(r, &cache);
    const auto formula = count_rsc(r);
    const bool ok = expected == formula;
    ++cases;
    if (!ok) ++failures;
    out << (ok ? "PASS " : "FAIL ") << (r.support().empty() ? "(empty)" : to_string(r))
        << " oracle=" << to_decimal(expected) << " formula=" << to_decimal(formula) << '\n';

    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] == max_r) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  out << "verify n=" << n << " max-r=" << max_r << ": " << cases << " cases, " << cases - failures
      << " passed, " << failures << " failed\n";
  return failures;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and enumerate ramification systems with characters over S_n"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string spec;
  std::string format = "table";
  std::optional<std::size_t> limit;
  std::uint64_t max_r = 1;

  auto* classes = app.add_subcommand("classes", "List the conjugacy classes of S_n");
  classes->add_option("n", n, "Degree")->required()->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Count isomorphism classes for a ramification");
  count->add_option("n", n, "Degree")->required()->check(CLI::PositiveNumber);
  count->add_option("--ramification,-r", spec, "e.g. all:1 or \"1^3:2;3^1:1\"")->required();
  count->add_option("--format,-f", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* reps = app.add_subcommand("reps", "Enumerate representative types");
  reps->add_option("n", n, "Degree")->required()->check(CLI::PositiveNumber);
  reps->add_option("--ramification,-r", spec, "Ramification spec")->required();
  reps->add_option("--limit", limit, "Stop after this many types");

  auto* verify = app.add_subcommand("verify", "Check the closed form against brute-force orbit counts");
  verify->add_option("n", n, "Degree (2..5)")->required();
  verify->add_option("--max-r", max_r, "Largest r_C per class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*classes) cmd_classes(n, out);
    else if (*count) cmd_count(n, spec, format == "json" ? OutputFormat::json : OutputFormat::table, out);
    else if (*reps) cmd_reps(n, spec, limit, out);
    else if (*verify) return cmd_verify(n, max_r, out) == 0 ? 0 : 1;
    return 0;
  } catch (const ParseError& e) {
    err << "error: invalid ramification: " << e.what() << '\n'
        << "  " << spec << '\n'
        << "  " << std::string(std::min(e.position(), spec.size()), ' ') << "^\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace rsc::cli
