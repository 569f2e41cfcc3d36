#include "doctest.h"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "shefferkit/bridge.hpp"
#include "shefferkit/search.hpp"
#include "shefferkit/sheffer.hpp"

using namespace shefferkit;

TEST_CASE("induced systems") {
  RelationalSystem ex = induce_system(fixtures::abcd_table());
  CHECK(ex.same_structure(fixtures::abcd_system()));
  RelationalSystem one = induce_system(Groupoid(1, {0}));
  CHECK(one.relation() == BinaryRelation::full(1));
  CHECK(one.involution() == ElementMap::identity(1));
  RelationalSystem nand = induce_system(fixtures::nand());
  CHECK(nand.relation() == fixtures::chain2().relation());
  CHECK(nand.involution().image() == std::vector<Element>{1, 0});
  CHECK_THROWS_AS(induce_system(fixtures::left_projection()), Error);
}

TEST_CASE("induced systems match the oracle for every Sheffer table of size 3") {
  for (auto const& t : oracle::sheffer_tables(3)) {
    Groupoid g(3, std::vector<Element>(t.begin(), t.end()));
    RelationalSystem sys = induce_system(g);
    oracle::Sys o = oracle::induce(t, 3);
    for (Element x = 0; x < 3; ++x) {
      CHECK(sys.prime(x) == o.inv[x]);
      for (Element y = 0; y < 3; ++y) CHECK(sys.related(x, y) == o.rel(x, y));
    }
    CHECK(validate_drsi(sys).passes());
    CHECK(is_assigned(sys, g));
  }
}

TEST_CASE("assignment spaces") {
  AssignmentSpace ex = assignment_space(fixtures::abcd_system());
  auto free = ex.free_pairs();
  REQUIRE(free.size() == 2);
  CHECK(free[0]->pair == ElementPair{0, 1});
  CHECK(free[1]->pair == ElementPair{1, 0});
  CHECK(free[0]->candidates == ElementSet{2, 3});
  CHECK(free[1]->candidates == ElementSet{2, 3});
  CHECK(ex.count == 4);

  AssignmentSpace ch = assignment_space(fixtures::chain2());
  CHECK(ch.free_pairs().empty());
  CHECK(ch.unforced().size() == 1);
  CHECK(ch.count == 1);

  RelationalSystem one(Carrier(1), BinaryRelation::full(1), ElementMap::identity(1));
  CHECK(assignment_space(one).count == 1);
  CHECK_THROWS_AS(assignment_space(fixtures::chain2().with_involution(ElementMap::identity(2))), Error);
}

TEST_CASE("assign with policies") {
  RelationalSystem ex = fixtures::abcd_system();
  Groupoid min = assign(ex, ChoicePolicy::min());
  CHECK(min.same_structure(fixtures::abcd_table()));
  Groupoid max = assign(ex, ChoicePolicy::max());
  CHECK(max.op(0, 1) == 3);
  CHECK(max.op(1, 0) == 3);
  Groupoid d = assign(ex, ChoicePolicy::explicit_choices({{{0, 1}, 3}}));
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < 16; ++i) diffs += d.table()[i] != min.table()[i];
  CHECK(diffs == 1);
  CHECK(d.op(0, 1) == 3);
  CHECK_THROWS_AS(assign(ex, ChoicePolicy::explicit_choices({{{0, 1}, 0}})), Error);
  CHECK_THROWS_AS(assign(ex, ChoicePolicy::explicit_choices({{{0, 0}, 1}})), Error);

  Groupoid chain = assign(fixtures::chain2(), ChoicePolicy::seeded(7));
  CHECK(chain.table() == std::vector<Element>{1, 1, 1, 0});
  CHECK(chain.bottom() == Element{0});
}

TEST_CASE("seeded policy follows the documented generator") {
  RelationalSystem ex = fixtures::abcd_system();
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 123456789ULL}) {
    std::uint64_t state = seed;
    std::vector<Element> expect = assign(ex).table();
    // Unforced pairs in row-major order: (a,b) then (b,a), each {c,d}.
    for (std::size_t cell : {1u, 4u}) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      expect[cell] = 2 + static_cast<Element>((state >> 32) % 2);
    }
    CHECK(assign(ex, ChoicePolicy::seeded(seed)).table() == expect);
  }
}

TEST_CASE("is_assigned") {
  CHECK(is_assigned(fixtures::abcd_system(), fixtures::abcd_table()));
  RelationalSystem ch = fixtures::chain2();
  CHECK(is_assigned(ch, assign(ch)));
  Verdict v = is_assigned(ch, Groupoid(ch.carrier(), {0, 1, 0, 1}));
  CHECK_FALSE(v);
  CHECK(v.reason == "(x,y) in R iff x'|y' = y");
}

TEST_CASE("round trip") {
  CHECK(verify_roundtrip(fixtures::abcd_system()));
  CHECK(verify_roundtrip(fixtures::chain2()));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& sys : enumerate_drsi(n)) {
      CHECK(verify_roundtrip(sys, ChoicePolicy::min()));
      CHECK(verify_roundtrip(sys, ChoicePolicy::max()));
      for (std::uint64_t seed = 1; seed <= 5; ++seed) CHECK(verify_roundtrip(sys, ChoicePolicy::seeded(seed)));
    }
  }
}

TEST_CASE("every assignment over all DRSIs of size <= 3 reproduces the Sheffer tables") {
  // Assigned operations of all DRSIs of a size are exactly the Sheffer tables of that size.
  for (unsigned n = 1; n <= 3; ++n) {
    std::size_t total = 0;
    for (auto const& sys : enumerate_drsi(n)) {
      for_each_assignment(sys, [&](Groupoid const& g) {
        ++total;
        CHECK(is_sheffer(g));
        return true;
      });
    }
    CHECK(total == oracle::sheffer_tables(n).size());
  }
}

TEST_CASE("coincidence pairs") {
  auto ex = coincidence_pairs(fixtures::abcd_table());
  CHECK(ex.size() == 14);
  CHECK(std::find(ex.begin(), ex.end(), ElementPair{0, 1}) == ex.end());
  CHECK(std::find(ex.begin(), ex.end(), ElementPair{1, 0}) == ex.end());
  CHECK(coincidence_pairs(Groupoid(1, {0})).size() == 1);
  // (1,0) is unforced even though its candidate set is a singleton.
  CHECK(coincidence_pairs(fixtures::nand()).size() == 3);

  for (std::size_t n = 1; n <= 3; ++n) {
    EnumerationSpec spec;
    spec.n = n;
    spec.require("AX1").require("AX2");
    for (auto const& g : enumerate_groupoids(spec)) {
      auto pairs = coincidence_pairs(g);
      for_each_assignment(induce_system(g), [&](Groupoid const& h) {
        for (auto [x, y] : pairs) CHECK(h.op(x, y) == g.op(x, y));
        return true;
      });
    }
  }
}

TEST_CASE("lattice generator") {
  RelationalSystem ch = fixtures::chain2();
  CHECK(lattice_sheffer(ch, LatticeMode::Join).table() == fixtures::nand().table());
  CHECK(lattice_sheffer(ch, LatticeMode::Meet).table() == fixtures::nor().table());
  CHECK(is_sheffer(lattice_sheffer(fixtures::bool4(), LatticeMode::Join)));
  CHECK(is_sheffer(lattice_sheffer(fixtures::bool4(), LatticeMode::Meet)));

  // Chains of length 3..5 with the order-reversing involution, and the 5-element diamond.
  for (std::size_t n = 3; n <= 5; ++n) {
    BinaryRelation r(n);
    std::vector<Element> rev(n);
    for (Element x = 0; x < n; ++x) {
      rev[x] = static_cast<Element>(n - 1 - x);
      for (Element y = x; y < n; ++y) r.set(x, y);
    }
    RelationalSystem chain(Carrier(n), r, ElementMap(n, rev));
    CHECK(is_sheffer(lattice_sheffer(chain, LatticeMode::Join)));
    CHECK(is_sheffer(lattice_sheffer(chain, LatticeMode::Meet)));
  }
  BinaryRelation m3 = BinaryRelation::diagonal(5);
  for (Element x = 0; x < 5; ++x) {
    m3.set(0, x);
    m3.set(x, 4);
  }
  RelationalSystem diamond(Carrier(5), m3, ElementMap(5, {4, 1, 3, 2, 0}));
  CHECK(is_sheffer(lattice_sheffer(diamond, LatticeMode::Join)));
  CHECK(is_sheffer(lattice_sheffer(diamond, LatticeMode::Meet)));

  // Two incomparable elements with no join.
  RelationalSystem anti(Carrier(2), BinaryRelation::diagonal(2), ElementMap::identity(2));
  CHECK_THROWS_AS(lattice_sheffer(anti, LatticeMode::Join), Error);
}
