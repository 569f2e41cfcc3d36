#pragma once

// Finite model enumeration for one binary operation, enumeration of
// small relational systems, and canonical forms under relabeling.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "shefferkit/execution.hpp"
#include "shefferkit/groupoid.hpp"
#include "shefferkit/relcore.hpp"
#include "shefferkit/terms.hpp"

namespace shefferkit {

inline constexpr std::size_t kMaxGroupoidEnumeration = 5;
inline constexpr std::size_t kMaxSystemEnumeration = 4;

/// Order in which table cells are filled. Diagonal-first pins x|x early;
/// row-major makes the depth-first leaf order lexicographic.
enum class FillOrder { DiagonalFirst, RowMajor };

struct EnumerationSpec {
  std::size_t n = 1;
  std::vector<Law> required;
  std::vector<Law> forbidden;
  bool commutative = false;
  /// Enumerate every (bottom, top) designation alongside the table.
  bool with_bounds = false;
  bool up_to_isomorphism = false;
  std::optional<std::size_t> limit;
  FillOrder order = FillOrder::DiagonalFirst;

  EnumerationSpec& require(std::string_view catalog_key);
  EnumerationSpec& forbid(std::string_view catalog_key);
};

struct EnumerationStats {
  std::uint64_t nodes = 0;   // cell assignments tried
  std::uint64_t models = 0;  // models emitted
};

/// Models of the spec in lexicographic order of (bottom, top, table).
/// Each model satisfies every required law and violates every forbidden
/// one; with up_to_isomorphism only tables equal to their canonical form
/// are kept. Throws Error when n exceeds the cap or a law uses 0/1
/// without with_bounds.
std::vector<Groupoid> enumerate_groupoids(EnumerationSpec const& spec,
                                          EnumerationStats* stats = nullptr,
                                          Execution exec = Execution::Parallel);

std::uint64_t count_models(EnumerationSpec const& spec, Execution exec = Execution::Parallel);

/// Smallest carrier first, then lexicographically least table.
std::optional<Groupoid> find_model(std::vector<Law> const& required,
                                   std::vector<Law> const& forbidden, std::size_t max_n);

/// Reflexive relations with an antitone involution that are directed,
/// ordered by relation bits then involution image. n <= 4.
std::vector<RelationalSystem> enumerate_drsi(std::size_t n);

/// Directed relations on n elements without involution, ordered by
/// relation bits. n <= 4.
std::vector<RelationalSystem> enumerate_directed(std::size_t n);

/// All involutions (period-2 self-maps) of {0..n-1} in lexicographic order.
std::vector<ElementMap> period_two_maps(std::size_t n);

/// Lexicographically least code over all relabelings of the carrier.
struct CanonicalForm {
  std::vector<std::uint32_t> code;
  friend bool operator==(CanonicalForm const&, CanonicalForm const&) = default;
  friend auto operator<=>(CanonicalForm const&, CanonicalForm const&) = default;
};

/// Code = relabeled table, then bottom and top when designated.
CanonicalForm canonical_form(Groupoid const& g);
/// Code = relabeled relation bits, involution image, bottom, top.
CanonicalForm canonical_form(RelationalSystem const& sys);

/// Applies a relabeling: element x becomes perm[x].
Groupoid relabel(Groupoid const& g, std::vector<Element> const& perm);
RelationalSystem relabel(RelationalSystem const& sys, std::vector<Element> const& perm);

}  // namespace shefferkit
