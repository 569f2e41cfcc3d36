#pragma once

#include <string>
#include <vector>

#include "shefferkit/groupoid.hpp"
#include "shefferkit/relcore.hpp"

namespace fixtures {

using namespace shefferkit;

inline Carrier abcd_names() { return Carrier(std::vector<std::string>{"a", "b", "c", "d"}); }

// a=0 b=1 c=2 d=3
inline Groupoid abcd_table() {
  return Groupoid(abcd_names(), {0, 2, 3, 2,  //
                                 2, 1, 3, 2,  //
                                 0, 1, 3, 2,  //
                                 0, 1, 3, 2});
}

/// Everything related except a,b in either order; a,b fixed and c,d swapped.
inline RelationalSystem abcd_system() {
  BinaryRelation r = BinaryRelation::full(4);
  r.set(0, 1, false);
  r.set(1, 0, false);
  return RelationalSystem(abcd_names(), r, ElementMap(4, {0, 1, 3, 2}));
}

/// 0 <= 1 with 0' = 1, bounds designated.
inline RelationalSystem chain2() {
  BinaryRelation r = BinaryRelation::diagonal(2);
  r.set(0, 1);
  return RelationalSystem(Carrier(std::vector<std::string>{"0", "1"}), r, ElementMap(2, {1, 0}), 0, 1);
}

/// Four-element Boolean lattice 0 < p,q < 1 with complement.
inline RelationalSystem bool4() {
  BinaryRelation r = BinaryRelation::diagonal(4);
  for (Element x = 0; x < 4; ++x) {
    r.set(0, x);
    r.set(x, 3);
  }
  return RelationalSystem(Carrier(std::vector<std::string>{"0", "p", "q", "1"}), r,
                          ElementMap(4, {3, 2, 1, 0}), 0, 3);
}

inline Groupoid nand() { return Groupoid(Carrier(std::vector<std::string>{"0", "1"}), {1, 1, 1, 0}, 0, 1); }
inline Groupoid nor() { return Groupoid(Carrier(std::vector<std::string>{"0", "1"}), {1, 0, 0, 0}, 0, 1); }

/// Satisfies the second axiom but not the first.
inline Groupoid ax2_only_witness() {
  return Groupoid(Carrier(std::vector<std::string>{"a", "b", "c"}), {0, 1, 2,  //
                                                                     2, 1, 2,  //
                                                                     0, 0, 2});
}

/// x|y = x on two elements: first axiom only.
inline Groupoid left_projection() {
  return Groupoid(Carrier(std::vector<std::string>{"a", "b"}), {0, 0, 1, 1});
}

}  // namespace fixtures
