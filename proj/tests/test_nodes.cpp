#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "classize/nodes.hpp"

using namespace classize;

TEST_CASE("node validity") {
  CHECK_NOTHROW(Node({0}));
  CHECK_NOTHROW(Node({0, 1, 2}));
  CHECK_THROWS_AS(Node({1}), domain_error);       // first entry must be 0
  CHECK_THROWS_AS(Node({0, 2}), domain_error);    // second entry below 2
  CHECK_THROWS_AS(Node({}), domain_error);
}

TEST_CASE("node sets") {
  CHECK(node_set(Node({0, 1})) == PeriodicSet::congruence_class(2, 1));
  CHECK(node_set(Node({0, 1, 2})) == PeriodicSet::congruence_class(6, 5));
  CHECK(node_set(Node({0})) == PeriodicSet::naturals());
  CHECK(node_set(Node({0, 1, 0})) == PeriodicSet::congruence_class(6, 1));
  CHECK(node_set(Node({0, 0, 2})) == PeriodicSet::congruence_class(6, 4));
}

TEST_CASE("node values") {
  CHECK(node_value(Node({0, 1, 2})) == 5);
  CHECK(node_value(Node({0})) == 0);
  CHECK(node_value(Node({0, 0, 1})) == 2);
}

TEST_CASE("node value is the least member of the node set") {
  for (Nat n = 0; n < 24; ++n) {
    Node p = node_for(n);
    CHECK(node_set(p).least() == node_value(p));
  }
}

TEST_CASE("factorial addressing round trip") {
  CHECK(node_for(5) == Node({0, 1, 2}));
  CHECK(node_for(0) == Node({0}));
  CHECK(node_for(1) == Node({0, 1}));
  for (Nat n = 0; n < 720; ++n) {
    Node p = node_for(n);
    CHECK(node_value(p) == n);
    // shortest: the value does not fit one level up
    if (p.depth() > 1) CHECK(n >= factorial(p.depth() - 1));
    CHECK(n < factorial(p.depth()));
  }
}

TEST_CASE("depth-d nodes biject with values below d factorial") {
  for (Nat d = 1; d <= 5; ++d) {
    SizedUniverse zero(RemainderFn::zero_total());
    auto pieces = depth_partition(zero, d);
    REQUIRE((Nat)pieces.size() == factorial(d));
    std::vector<bool> seen(factorial(d), false);
    for (auto& piece : pieces) {
      Nat value = node_value(piece.node);
      REQUIRE(value < factorial(d));
      CHECK_FALSE(seen[value]);
      seen[value] = true;
    }
  }
}

TEST_CASE("node sets at each depth partition the naturals") {
  SizedUniverse zero(RemainderFn::zero_total());
  for (Nat d = 1; d <= 5; ++d) {
    auto pieces = depth_partition(zero, d);
    PeriodicSet whole;
    for (size_t i = 0; i < pieces.size(); ++i) {
      for (size_t j = i + 1; j < pieces.size(); ++j)
        CHECK(set_intersect(pieces[i].set, pieces[j].set).is_empty());
      whole = set_union(whole, pieces[i].set);
    }
    CHECK(whole == PeriodicSet::naturals());
  }
}

TEST_CASE("each node set is the disjoint union of its children") {
  for (Nat d = 1; d <= 4; ++d) {
    // spot-check every node at this depth
    SizedUniverse zero(RemainderFn::zero_total());
    for (auto& piece : depth_partition(zero, d)) {
      PeriodicSet joined;
      for (Nat m = 0; m <= d; ++m) {
        Node child = piece.node.child(m);
        PeriodicSet cs = node_set(child);
        CHECK(set_intersect(joined, cs).is_empty());
        joined = set_union(joined, cs);
      }
      CHECK(joined == piece.set);
    }
  }
}

TEST_CASE("sizes at each depth sum to the whole and count the charmed") {
  RemainderFn charm =
      RemainderFn::from_entries({{1, 0}, {2, 1}, {6, 3}, {24, 3}, {120, 3}});
  REQUIRE(is_congruous(charm));
  for (const RemainderFn& f : {RemainderFn::zero_total(), charm}) {
    SizedUniverse u(f);
    for (Nat d = 1; d <= 5; ++d) {
      auto pieces = depth_partition(u, d);
      Size total{Rational(0), Rational(0)};
      Nat charmed = 0;
      for (auto& piece : pieces) {
        total = size_add(total, piece.size);
        if (piece.charmed) ++charmed;
      }
      CHECK(total == Size{Rational(1), Rational(0)});
      Nat expected = f.is_zero_total() ? 0 : f.at(factorial(d));
      if (d == 1) expected = 0;
      CHECK(charmed == expected);
    }
  }
}

TEST_CASE("depth partitions demand the remainder function at factorials") {
  SizedUniverse narrow(RemainderFn::from_entries({{2, 1}}));
  CHECK_THROWS_AS(depth_partition(narrow, 3), domain_error);
}

TEST_CASE("splitting examples") {
  SizedUniverse zero(RemainderFn::zero_total());
  auto thirds = nm_partition(zero, PeriodicSet::naturals(), 3);
  REQUIRE(thirds.size() == 3);
  for (Nat r = 0; r < 3; ++r) {
    CHECK(thirds[r] == PeriodicSet::congruence_class(3, r));
    CHECK(zero.theta(thirds[r]) == Size{Rational(1, 3), Rational(0)});
  }

  auto halves = nm_partition(zero, PeriodicSet::congruence_class(2, 0), 2);
  REQUIRE(halves.size() == 2);
  CHECK(halves[0] == PeriodicSet::congruence_class(4, 0));
  CHECK(halves[1] == PeriodicSet::congruence_class(4, 2));

  SizedUniverse charm(RemainderFn::from_entries({{1, 0}, {2, 1}}));
  auto uneven = nm_partition(charm, PeriodicSet::naturals(), 2);
  REQUIRE(uneven.size() == 2);
  CHECK(charm.theta(uneven[0]) == Size{Rational(1, 2), Rational(1, 2)});
  CHECK(charm.theta(uneven[1]) == Size{Rational(1, 2), Rational(-1, 2)});
}

TEST_CASE("split pieces partition the set and split charm by one atom") {
  RemainderFn f =
      RemainderFn::from_entries({{1, 0}, {2, 1}, {6, 3}, {24, 3}});
  SizedUniverse u(f);
  for (Nat m : {2, 3, 4}) {
    for (Nat base_res = 0; base_res < 2; ++base_res) {
      PeriodicSet x = PeriodicSet::congruence_class(2, base_res);
      Nat nm = 2 * m;
      if (!f.defined_at(nm)) continue;
      auto pieces = nm_partition(u, x, m);
      REQUIRE((Nat)pieces.size() == m);
      PeriodicSet joined;
      for (size_t i = 0; i < pieces.size(); ++i) {
        for (size_t j = i + 1; j < pieces.size(); ++j)
          CHECK(set_intersect(pieces[i], pieces[j]).is_empty());
        joined = set_union(joined, pieces[i]);
      }
      CHECK(joined == x);
      // sizes are flat or split once, heavier pieces first
      std::vector<Size> sizes;
      for (auto& piece : pieces) sizes.push_back(u.theta(piece));
      Size small = sizes.back();
      Nat boundary = 0;
      for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == small) continue;
        CHECK(sizes[i] == size_add(small, Size{Rational(0), Rational(1)}));
        CHECK((Nat)i == boundary);
        ++boundary;
      }
      // the charmed-piece count is the remainder gap over the modulus
      Nat k = (f.at(nm) - f.at(2)) / 2;
      Nat charm_total = k + (base_res < f.at(2) ? 1 : 0);
      CHECK(boundary == charm_total % m);
    }
  }
}

TEST_CASE("splitting rejects unusable inputs") {
  SizedUniverse zero(RemainderFn::zero_total());
  CHECK_THROWS_AS(nm_partition(zero, PeriodicSet::finite({1, 2}), 2),
                  domain_error);
  CHECK_THROWS_AS(
      nm_partition(zero,
                   PeriodicSet::normalized(2, {0}, {1}, {}), 2),
      domain_error);
  SizedUniverse narrow(RemainderFn::from_entries({{2, 1}}));
  CHECK_THROWS_AS(nm_partition(narrow, PeriodicSet::congruence_class(2, 0), 3),
                  domain_error);
}
