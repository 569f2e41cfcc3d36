#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "shefferkit/bridge.hpp"
#include "shefferkit/cli.hpp"

using namespace shefferkit;
using namespace shefferkit::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_line(std::string const& text, bool system) {
  try {
    if (system) {
      parse_system_file(text);
    } else {
      parse_groupoid_file(text);
    }
  } catch (FormatError const& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("system files round-trip") {
  for (auto const& sys : {fixtures::abcd_system(), fixtures::chain2(), fixtures::bool4()}) {
    std::string text = print_system_file(sys);
    RelationalSystem back = parse_system_file(text);
    CHECK(back == sys);
    CHECK(print_system_file(back) == text);
  }
  RelationalSystem plain(Carrier(2), BinaryRelation::full(2));
  CHECK(parse_system_file(print_system_file(plain)) == plain);
}

TEST_CASE("groupoid and map files round-trip") {
  for (auto const& g : {fixtures::abcd_table(), fixtures::nand(), fixtures::left_projection()}) {
    CHECK(parse_groupoid_file(print_groupoid_file(g)) == g);
  }
  Carrier c = fixtures::abcd_names();
  ElementMap f(4, {1, 1, 3, 2});
  CHECK(parse_map_file(print_map_file(f, c), c, c) == f);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text =
      "# Example\n"
      "groupoid\n"
      "\n"
      "elements a b   # two\n"
      "table\n"
      "a a\n"
      "b b\n";
  CHECK(parse_groupoid_file(text).table() == std::vector<Element>{0, 0, 1, 1});
}

TEST_CASE("format errors report the offending line") {
  CHECK(error_line("system\nelements a b c\nrelation\n1 1 1 1\n1 1 1\n1 1 1\n", true) == 4);
  CHECK(error_line("system\nelements a b\nrelation\n1 1\n", true) == 3);
  CHECK(error_line("system\nelements a b\nrelation\n1 2\n0 1\n", true) == 4);
  CHECK(error_line("system\nelements a a\n", true) == 2);
  CHECK(error_line("groupoid\nelements a b\ntable\na z\nb b\n", false) == 4);
  CHECK(error_line("groupoid\nelements a b\ntable\na a\nb b\nbounds a\n", false) == 6);
  CHECK(error_line("groupoid\nelements a b\nelements a b\n", false) == 3);
  CHECK(error_line("\n\nsystem\n", false) == 3);
  CHECK_THROWS_AS(parse_system_file(""), FormatError);
  CHECK_THROWS_AS(parse_map_file("map\nimage a\n", fixtures::abcd_names(), fixtures::abcd_names()), FormatError);
}

TEST_CASE("file-level round trip: induce, assign, induce") {
  std::string grp = print_groupoid_file(fixtures::abcd_table());
  RelationalSystem sys = induce_system(parse_groupoid_file(grp));
  std::string sys_text = print_system_file(sys);
  Groupoid g = assign(parse_system_file(sys_text));
  CHECK(print_groupoid_file(g) == grp);
  CHECK(print_system_file(induce_system(g)) == sys_text);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == kUsage);
  CHECK(run_cli({"frobnicate"}).code == kUsage);
  Outcome missing = run_cli({"check", "sheffer", "/nonexistent/file.grp"});
  CHECK(missing.code == kUsage);
  CHECK(missing.err.find("/nonexistent/file.grp") != std::string::npos);
  CHECK(run_cli({"enumerate", "-n", "9"}).code == kUsage);
  Outcome help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("enumerate and independence through the command runner") {
  Outcome count = run_cli({"enumerate", "-n", "2", "--require", "AX1,AX2", "--count"});
  CHECK(count.code == kHolds);
  CHECK(count.out == "4\n");
  Outcome iso = run_cli({"enumerate", "-n", "3", "--require", "AX1,AX2", "--iso", "--count"});
  CHECK(iso.out == "11\n");
  Outcome ind = run_cli({"independence"});
  CHECK(ind.code == kHolds);
  CHECK(ind.out.find("AX1 without AX2:") != std::string::npos);
  CHECK(ind.out.find("AX2 without AX1:") != std::string::npos);
}
