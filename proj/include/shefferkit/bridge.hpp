#pragma once

// The correspondence between Sheffer groupoids and directed relational
// systems with involution: the induced system of a groupoid, the
// operations assigned to a system, and the round trip between them.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shefferkit/groupoid.hpp"
#include "shefferkit/relcore.hpp"

namespace shefferkit {

using BigCount = boost::multiprecision::cpp_int;
using ElementPair = std::pair<Element, Element>;

/// Rule for picking x|y from U(x',y') when (x',y') is not in R.
struct ChoicePolicy {
  struct Min {};
  struct Max {};
  /// Each unforced pair, in row-major order, advances
  ///   state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
  /// and picks candidate number (state >> 32) % |candidates|.
  /// The initial state is the seed.
  struct SeededRandom {
    std::uint64_t seed = 0;
  };
  /// Listed pairs take the given element; unlisted pairs fall back to Min.
  struct Explicit {
    std::map<ElementPair, Element> choices;
  };

  std::variant<Min, Max, SeededRandom, Explicit> rule = Min{};

  static ChoicePolicy min() { return {Min{}}; }
  static ChoicePolicy max() { return {Max{}}; }
  static ChoicePolicy seeded(std::uint64_t seed) { return {SeededRandom{seed}}; }
  static ChoicePolicy explicit_choices(std::map<ElementPair, Element> c) {
    return {Explicit{std::move(c)}};
  }
};

/// Candidate values of x|y for every pair of a DRSI.
struct AssignmentSpace {
  struct Cell {
    ElementPair pair;
    /// True when (x',y') is in R and x|y is forced to y'.
    bool forced = false;
    /// {y'} when forced, U(x',y') otherwise.
    ElementSet candidates;
  };

  std::size_t n = 0;
  std::vector<Cell> cells;  // row-major, n*n entries
  BigCount count = 1;       // product of candidate-set sizes

  /// Pairs with (x',y') not in R, in row-major order.
  std::vector<Cell const*> unforced() const;
  /// Unforced pairs with more than one candidate.
  std::vector<Cell const*> free_pairs() const;
};

/// R(A): x' = x|x and R = {(x,y) | x'|y' = y}. Throws Error unless g is
/// a Sheffer groupoid.
RelationalSystem induce_system(Groupoid const& g);

/// Throws Error unless sys is a DRSI.
AssignmentSpace assignment_space(RelationalSystem const& sys);

/// G(A) under a choice policy. Throws Error unless sys is a DRSI or when
/// an explicit choice lies outside its candidate set.
Groupoid assign(RelationalSystem const& sys, ChoicePolicy const& policy = ChoicePolicy::min());

/// Calls `visit` for every operation assigned to sys, in lexicographic
/// order of the choice vector; stops early when `visit` returns false.
void for_each_assignment(RelationalSystem const& sys,
                         std::function<bool(Groupoid const&)> const& visit);

/// (x,y) in R iff x'|y' = y, and x|y in U(x',y') for every pair.
/// Throws Error on a carrier mismatch or missing involution.
Verdict is_assigned(RelationalSystem const& sys, Groupoid const& g);

/// R(G(A)) equals A literally (relation matrix and involution).
bool verify_roundtrip(RelationalSystem const& sys, ChoicePolicy const& policy = ChoicePolicy::min());

/// Pairs with x|y = y|y, on which every operation assigned to the
/// induced system agrees with g.
std::vector<ElementPair> coincidence_pairs(Groupoid const& g);

enum class LatticeMode { Join, Meet };

/// x|y = x' v y' (Join) or x' ^ y' (Meet) on a lattice order with an
/// antitone involution. Throws Error naming the first pair without a
/// least upper / greatest lower bound, or when the order or involution
/// is unsuitable.
Groupoid lattice_sheffer(RelationalSystem const& order, LatticeMode mode);

}  // namespace shefferkit
