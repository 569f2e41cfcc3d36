#pragma once

// Text formats for systems, groupoids and maps, and the command-line driver.
//
// system file             groupoid file           map file
//   system                  groupoid                map
//   elements a b c          elements a b c          image x y y
//   relation                table
//   1 0 1                   a c b
//   0 1 1                   ...
//   1 1 1                   bounds a c
//   involution a b c
//   bounds a c
//
// '#' starts a comment; blank lines are ignored. Printing uses single spaces
// and the section order above, so printed files round-trip byte for byte.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "shefferkit/groupoid.hpp"
#include "shefferkit/relcore.hpp"

namespace shefferkit::cli {

/// Malformed input file; `line` is 1-based, 0 when not tied to a line.
class FormatError : public Error {
 public:
  FormatError(std::string const& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

RelationalSystem parse_system_file(std::string_view text);
Groupoid parse_groupoid_file(std::string_view text);
/// Images are names of `dst`; one per element of `src`, in order.
ElementMap parse_map_file(std::string_view text, Carrier const& src, Carrier const& dst);

std::string print_system_file(RelationalSystem const& sys);
std::string print_groupoid_file(Groupoid const& g);
std::string print_map_file(ElementMap const& f, Carrier const& dst);

enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2 };

/// Runs one command line (without the program name).
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace shefferkit::cli
