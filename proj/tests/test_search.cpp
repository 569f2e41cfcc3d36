#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "shefferkit/search.hpp"
#include "shefferkit/sheffer.hpp"

using namespace shefferkit;

namespace {

std::set<oracle::Table> as_tables(std::vector<Groupoid> const& gs) {
  std::set<oracle::Table> out;
  for (auto const& g : gs) out.insert(oracle::Table(g.table().begin(), g.table().end()));
  return out;
}

EnumerationSpec sheffer_spec(std::size_t n) {
  EnumerationSpec spec;
  spec.n = n;
  spec.require("AX1").require("AX2");
  return spec;
}

using SysKey = std::pair<std::vector<std::uint8_t>, std::vector<unsigned>>;

SysKey key_of(RelationalSystem const& s) {
  std::size_t n = s.size();
  SysKey k{std::vector<std::uint8_t>(n * n), std::vector<unsigned>(n)};
  for (Element x = 0; x < n; ++x) {
    k.second[x] = s.prime(x);
    for (Element y = 0; y < n; ++y) k.first[x * n + y] = s.related(x, y);
  }
  return k;
}

}  // namespace

TEST_CASE("Sheffer model counts match the brute-force oracle") {
  for (unsigned n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto expect = oracle::sheffer_tables(n);
    auto got = enumerate_groupoids(sheffer_spec(n));
    CHECK(got.size() == expect.size());
    CHECK(as_tables(got) == std::set<oracle::Table>(expect.begin(), expect.end()));
    CHECK(count_models(sheffer_spec(n)) == expect.size());

    EnumerationSpec comm = sheffer_spec(n);
    comm.commutative = true;
    CHECK(count_models(comm) == oracle::sheffer_tables(n, true).size());

    EnumerationSpec iso = sheffer_spec(n);
    iso.up_to_isomorphism = true;
    CHECK(count_models(iso) == oracle::iso_classes(expect, n));
    comm.up_to_isomorphism = true;
    CHECK(count_models(comm) == oracle::iso_classes(oracle::sheffer_tables(n, true), n));
  }
  // Regression constants.
  CHECK(count_models(sheffer_spec(2)) == 4);
  CHECK(count_models(sheffer_spec(3)) == 52);
}

TEST_CASE("fill orders produce the same sorted result") {
  for (std::size_t n = 1; n <= 4; ++n) {
    EnumerationSpec a = sheffer_spec(n);
    EnumerationSpec b = a;
    b.order = FillOrder::RowMajor;
    if (n == 4) a.commutative = b.commutative = true;
    EnumerationStats sa, sb;
    auto ra = enumerate_groupoids(a, &sa);
    auto rb = enumerate_groupoids(b, &sb);
    CHECK(ra == rb);
    CHECK(sa.models == ra.size());
    CHECK(sa.nodes > 0);
  }
}

TEST_CASE("results are sorted and the limit keeps a prefix") {
  auto all = enumerate_groupoids(sheffer_spec(3));
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].table() < all[i].table());
  for (FillOrder order : {FillOrder::DiagonalFirst, FillOrder::RowMajor}) {
    EnumerationSpec spec = sheffer_spec(3);
    spec.order = order;
    spec.limit = 5;
    auto few = enumerate_groupoids(spec);
    REQUIRE(few.size() == 5);
    CHECK(std::equal(few.begin(), few.end(), all.begin()));
    spec.limit = 0;
    CHECK(enumerate_groupoids(spec).empty());
  }
}

TEST_CASE("required, forbidden and bounded specs") {
  EnumerationSpec spec = sheffer_spec(2);
  spec.forbid("COMM");
  auto non_comm = enumerate_groupoids(spec);
  CHECK(non_comm.size() == 2);
  for (auto const& g : non_comm) CHECK_FALSE(check_named(g, "COMM"));

  EnumerationSpec bounded = sheffer_spec(2);
  bounded.require("BOUND0").require("BOUND1");
  CHECK_THROWS_AS(enumerate_groupoids(bounded), Error);
  bounded.with_bounds = true;
  auto bs = enumerate_groupoids(bounded);
  REQUIRE_FALSE(bs.empty());
  for (auto const& g : bs) {
    REQUIRE(g.bottom());
    REQUIRE(g.top());
    CHECK(check_named(g, "BOUND0"));
    CHECK(check_named(g, "BOUND1"));
  }
  CHECK(std::find_if(bs.begin(), bs.end(), [](Groupoid const& g) {
          return g.same_structure(fixtures::nand());
        }) != bs.end());

  EnumerationSpec none;
  none.n = 0;
  CHECK_THROWS_AS(enumerate_groupoids(none), Error);
  none.n = 6;
  CHECK_THROWS_AS(enumerate_groupoids(none), Error);
}

TEST_CASE("find_model") {
  auto ax1 = catalog_entry("AX1").law;
  auto ax2 = catalog_entry("AX2").law;
  auto left = find_model({ax1}, {ax2}, 2);
  REQUIRE(left);
  CHECK(left->size() == 2);
  CHECK(check_law(*left, ax1));
  CHECK_FALSE(check_law(*left, ax2));
  CHECK_FALSE(find_model({ax2}, {ax1}, 2));
  auto right = find_model({ax2}, {ax1}, 3);
  REQUIRE(right);
  CHECK(right->size() == 3);
  CHECK(check_law(*right, ax2));
  CHECK_FALSE(check_law(*right, ax1));
  auto trivial = find_model({parse_law("x = y")}, {}, 2);
  REQUIRE(trivial);
  CHECK(trivial->size() == 1);
  CHECK_FALSE(find_model({ax1, ax2}, {parse_law("x = x")}, 3));
}

TEST_CASE("DRSI enumeration matches the brute-force oracle") {
  for (unsigned n = 1; n <= 3; ++n) {
    std::set<SysKey> expect;
    for (auto const& s : oracle::all_drsi(n)) expect.insert({s.r, s.inv});
    std::set<SysKey> got;
    for (auto const& s : enumerate_drsi(n)) {
      CHECK(validate_drsi(s).passes());
      got.insert(key_of(s));
    }
    CHECK(got == expect);
    CHECK(enumerate_drsi(n).size() == expect.size());
  }
  CHECK(enumerate_drsi(3).size() == 34);
  CHECK(enumerate_drsi(4).size() == 848);
  CHECK_THROWS_AS(enumerate_drsi(5), Error);
}

TEST_CASE("directed relations") {
  for (unsigned n = 1; n <= 3; ++n) {
    std::size_t expect = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      oracle::Sys s{n, std::vector<std::uint8_t>(n * n), {}};
      for (unsigned c = 0; c < n * n; ++c) s.r[c] = (mask >> c) & 1u;
      expect += oracle::directed(s);
    }
    auto got = enumerate_directed(n);
    CHECK(got.size() == expect);
    for (auto const& s : got) CHECK(is_directed(s));
  }
}

TEST_CASE("period-two maps") {
  CHECK(period_two_maps(1).size() == 1);
  CHECK(period_two_maps(3).size() == 4);
  CHECK(period_two_maps(4).size() == 10);
}

TEST_CASE("canonical forms") {
  Groupoid g = fixtures::abcd_table();
  CanonicalForm c = canonical_form(g);
  std::vector<Element> perm{3, 1, 0, 2};
  CHECK(canonical_form(relabel(g, perm)) == c);
  CHECK(canonical_form(fixtures::nand()) == canonical_form(fixtures::nor().with_bounds(1, 0)));
  RelationalSystem s = fixtures::abcd_system();
  CHECK(canonical_form(relabel(s, perm)) == canonical_form(s));
  CHECK(canonical_form(fixtures::chain2()) != canonical_form(fixtures::chain2().with_bounds(1, 0)));
}

TEST_CASE("serial and parallel enumeration agree") {
  int saved = worker_count();
  for (int workers : {1, 2, 3, 8}) {
    set_worker_count(workers);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (bool iso : {false, true}) {
        EnumerationSpec spec = sheffer_spec(n);
        spec.up_to_isomorphism = iso;
        if (n == 4) spec.commutative = true;
        EnumerationStats ss, ps;
        auto serial = enumerate_groupoids(spec, &ss, Execution::Serial);
        auto parallel = enumerate_groupoids(spec, &ps, Execution::Parallel);
        CHECK(serial == parallel);
        CHECK(ss.models == ps.models);
        CHECK(ss.nodes == ps.nodes);
      }
    }
  }
  set_worker_count(saved);
  set_worker_count(0);
  CHECK(worker_count() >= 1);
}
