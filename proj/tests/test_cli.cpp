#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "rsc/cli.hpp"
#include "rsc/counting.hpp"
#include "rsc/error.hpp"

using namespace rsc;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rsc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

// gamma column of `classes`, keyed by the type column
std::map<std::string, std::string> gamma_column(const std::string& table) {
  std::map<std::string, std::string> out;
  const auto rows = lines(table);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    // columns are separated by runs of 2+ spaces; type strings contain single spaces
    std::vector<std::string> cols;
    std::size_t pos = 0;
    const auto& row = rows[i];
    while (pos < row.size()) {
      auto end = row.find("  ", pos);
      if (end == std::string::npos) end = row.size();
      cols.push_back(row.substr(pos, end - pos));
      pos = row.find_first_not_of(' ', end);
      if (pos == std::string::npos) break;
    }
    out[cols.at(0)] = cols.at(3);
  }
  return out;
}

} // namespace

TEST_CASE("classes") {
  const auto s3 = run({"classes", "3"});
  CHECK(s3.code == 0);
  CHECK(lines(s3.out).size() == 4);
  CHECK(gamma_column(s3.out) == std::map<std::string, std::string>{{"1^3", "2"}, {"1^1 2^1", "2"}, {"3^1", "3"}});

  const auto s4 = gamma_column(run({"classes", "4"}).out);
  CHECK(s4.at("1^4") == "2");
  CHECK(s4.at("1^1 3^1") == "3");
  CHECK(s4.at("1^2 2^1") == "4");
  CHECK(s4.at("2^2") == "4");
  CHECK(s4.at("4^1") == "4");

  const auto s1 = run({"classes", "1"});
  CHECK(lines(s1.out).size() == 2);
  CHECK(gamma_column(s1.out).at("1^1") == "1");

  // canonical row order
  const auto rows = lines(run({"classes", "4"}).out);
  CHECK(rows[1].rfind("4^1", 0) == 0);
  CHECK(rows[5].rfind("1^4", 0) == 0);
}

TEST_CASE("count") {
  const auto s5 = run({"count", "5", "--ramification", "all:1"});
  CHECK(s5.code == 0);
  CHECK(s5.out.find("N(S_5, r) = 23040") != std::string::npos);

  const auto s3 = run({"count", "3", "--ramification", "1^3:2"});
  CHECK(s3.code == 0);
  CHECK(s3.out.find("N(S_3, r) = 3\n") != std::string::npos);

  const auto s6 = run({"count", "6", "--ramification", "all:1"});
  CHECK(s6.code != 0);
  CHECK(s6.err.find("n != 6") != std::string::npos);

  const auto bad = run({"count", "3", "--ramification", "1^3:1;2^1:1"});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("position 6") != std::string::npos);

  // large counts are printed in full
  const auto big = run({"count", "9", "--ramification", "all:30"});
  CHECK(big.code == 0);
  CHECK(big.out.find(to_decimal(count_rsc(Ramification::uniform(9, 30)))) != std::string::npos);
  CHECK(big.out.find('e') == std::string::npos);
}

TEST_CASE("count --format json round-trips") {
  const auto res = run({"count", "4", "--ramification", "all:2", "--format", "json"});
  REQUIRE(res.code == 0);
  const auto report = nlohmann::json::parse(res.out);
  CHECK(report["n"] == 4);
  CHECK(report["count"] == "18000");
  const auto r = ramification_from_json(report);
  CHECK(to_decimal(count_rsc(r)) == report["count"].get<std::string>());

  std::string spec;
  for (const auto& e : report["ramification"])
    spec += (spec.empty() ? "" : ";") + e["class"].get<std::string>() + ":" + std::to_string(e["r"].get<int>());
  const auto again = nlohmann::json::parse(run({"count", "4", "--ramification", spec, "--format", "json"}).out);
  CHECK(again == report);
}

TEST_CASE("reps") {
  const auto all = run({"reps", "3", "--ramification", "all:1"});
  CHECK(all.code == 0);
  std::size_t reps = 0;
  for (const auto& line : lines(all.out)) reps += line.rfind('{', 0) == 0;
  CHECK(reps == 12);
  CHECK(all.out.find("# 3^1 u0=(1 2 3)") != std::string::npos);

  const auto one = run({"reps", "3", "--ramification", "all:1", "--limit", "1"});
  std::size_t limited = 0;
  for (const auto& line : lines(one.out)) limited += line.rfind('{', 0) == 0;
  CHECK(limited == 1);

  CHECK(run({"reps", "6", "--ramification", "all:1"}).code != 0);
}

TEST_CASE("verify") {
  const auto s3 = run({"verify", "3", "--max-r", "2"});
  CHECK(s3.code == 0);
  CHECK(s3.out.find("27 cases, 27 passed, 0 failed") != std::string::npos);

  const auto s4 = run({"verify", "4", "--max-r", "1"});
  CHECK(s4.code == 0);
  CHECK(s4.out.find("oracle=384 formula=384") != std::string::npos);

  CHECK(run({"verify", "6", "--max-r", "1"}).code != 0);
  CHECK(run({"verify", "1"}).code != 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code != 0);
  CHECK(run({"count", "3"}).code != 0);
  CHECK(run({"count", "3", "-r", "all:1", "--format", "xml"}).code != 0);
  CHECK(run({"classes", "0"}).code != 0);
}
