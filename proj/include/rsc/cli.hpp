#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace rsc::cli {

enum class OutputFormat { table, json };

// Each command writes its report to `out`. Invalid input raises the
// library's exceptions; run() maps them to exit codes.

/// One row per class of S_n: type, class size, centralizer order, γ, factors.
void cmd_classes(std::size_t n, std::ostream& out);
void cmd_count(std::size_t n, std::string_view ramification, OutputFormat format, std::ostream& out);
void cmd_reps(std::size_t n, std::string_view ramification, std::optional<std::size_t> limit,
              std::ostream& out);
/// Oracle count against the closed form for every ramification with all
/// r_C <= max_r. Returns the number of mismatches.
std::size_t cmd_verify(std::size_t n, std::uint64_t max_r, std::ostream& out);

/// Exit codes: 0 success, 1 failed computation or verification, 2 usage or
/// input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rsc::cli
