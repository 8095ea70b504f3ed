#include <catch2/catch_amalgamated.hpp>

#include "schurtp/partition.hpp"

using namespace schurtp;

TEST_CASE("conjugate transposes the diagram") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
  CHECK(Partition{5}.conjugate() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("conjugate is an involution and preserves weight") {
  for (const Partition& p : partitions_in_box(4, 4)) {
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().weight() == p.weight());
  }
}

TEST_CASE("containment of diagrams") {
  CHECK(Partition{3, 1}.contains(Partition{2, 1}));
  CHECK_FALSE(Partition{2, 2}.contains(Partition{3}));
  CHECK(Partition{4, 2, 1}.contains(Partition{}));
  CHECK(Partition{}.contains(Partition{}));
  CHECK_FALSE(Partition{2}.contains(Partition{1, 1}));
}

TEST_CASE("containment commutes with conjugation") {
  auto all = partitions_in_box(3, 3);
  for (const Partition& a : all)
    for (const Partition& b : all)
      CHECK(a.contains(b) == a.conjugate().contains(b.conjugate()));
}

TEST_CASE("box complement") {
  CHECK(box_complement(Partition{2, 1}, 2, 3) == Partition{2, 1});
  CHECK(box_complement(Partition{}, 2, 3) == Partition{3, 3});
  CHECK(box_complement(Partition{3, 3}, 2, 3) == Partition{});
  CHECK_THROWS_MATCHES(box_complement(Partition{4}, 2, 3), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "BoxOverflow"; }));
  CHECK_THROWS_AS(box_complement(Partition{1, 1, 1}, 2, 3), Error);
}

TEST_CASE("box complement is an involution and weights add to the box area") {
  for (unsigned rows = 1; rows <= 4; ++rows) {
    for (unsigned cols = 1; cols <= 4; ++cols) {
      for (const Partition& p : partitions_in_box(rows, cols)) {
        Partition c = box_complement(p, rows, cols);
        CHECK(box_complement(c, rows, cols) == p);
        CHECK(p.weight() + c.weight() == rows * cols);
      }
    }
  }
}

TEST_CASE("staircase partitions") {
  CHECK(staircase(3) == Partition{3, 2, 1});
  CHECK(staircase(0) == Partition{});
  CHECK(staircase(1) == Partition{1});
  CHECK(staircase(5).weight() == 15);
}

TEST_CASE("box enumeration is complete, duplicate-free, and ordered") {
  auto single_row = partitions_in_box(1, 2);
  REQUIRE(single_row.size() == 3);
  CHECK(single_row[0] == Partition{});
  CHECK(single_row[1] == Partition{1});
  CHECK(single_row[2] == Partition{2});

  CHECK(partitions_in_box(2, 2).size() == 6);

  for (unsigned rows = 1; rows <= 6; ++rows) {
    for (unsigned cols = 1; cols <= 6; ++cols) {
      auto all = partitions_in_box(rows, cols);
      // |partitions in an m x n box| = C(m+n, m)
      CHECK(Int(all.size()) == binomial(Int(rows) + cols, rows));
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    }
  }
}

TEST_CASE("enumeration of subdiagrams") {
  auto subs = partitions_contained_in(Partition{1, 1});
  REQUIRE(subs.size() == 3);
  CHECK(subs[0] == Partition{});
  CHECK(subs[1] == Partition{1});
  CHECK(subs[2] == Partition{1, 1});

  auto staircase_subs = partitions_contained_in(staircase(2));
  CHECK(staircase_subs.size() == 5);  // (), (1), (1,1), (2), (2,1)
}

TEST_CASE("partition text round trip") {
  CHECK(parse_partition("(3,1)") == Partition{3, 1});
  CHECK(parse_partition("( 3 , 1 )") == Partition{3, 1});
  CHECK(parse_partition("()") == Partition{});
  CHECK(parse_partition("(2,0)") == Partition{2});
  CHECK(Partition{3, 1}.to_string() == "(3,1)");
  CHECK(Partition{}.to_string() == "()");
  CHECK_THROWS_AS(parse_partition("(1,3)"), Error);
  CHECK_THROWS_AS(parse_partition("(1,"), Error);
  CHECK_THROWS_AS(parse_partition("3,1"), Error);
}

TEST_CASE("canonical order is weight then lexicographic") {
  CHECK(Partition{1, 1} < Partition{2});
  CHECK(Partition{} < Partition{1});
  CHECK(Partition{2, 1} < Partition{3});
  CHECK_FALSE(Partition{3} < Partition{2, 1});
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS_AS(Partition(std::vector<unsigned>{1, 2}), Error);
  CHECK(Partition(std::vector<unsigned>{2, 1, 0, 0}) == Partition{2, 1});
}
