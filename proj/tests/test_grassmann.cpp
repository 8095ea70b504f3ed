#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurtp/grassmann.hpp"
#include "test_support.hpp"

using namespace schurtp;
using testutil::cvar;
using testutil::random_homogeneous;

namespace {

GrassmannClass sigma(const GrassmannRing& ring, const Partition& shape) {
  return schubert_class(ring, {shape});
}

}  // namespace

TEST_CASE("Schubert multiplication in a single box") {
  GrassmannRing line({{1, 2}});  // G_1(C^3)
  CHECK(sigma(line, Partition{1}) * sigma(line, Partition{1}) == sigma(line, Partition{2}));
  CHECK((sigma(line, Partition{2}) * sigma(line, Partition{1})).is_zero());
  GrassmannClass any = sigma(line, Partition{2});
  CHECK(unit_class(line) * any == any);
}

TEST_CASE("ring mismatch is rejected") {
  GrassmannRing a({{1, 2}}), b({{2, 1}});
  CHECK_THROWS_MATCHES(schubert_multiply(unit_class(a), unit_class(b)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "RingMismatch"; }));
}

TEST_CASE("degree map picks out the top class") {
  GrassmannRing ring({{2, 3}});
  Partition shape{2, 1};
  CHECK(integrate(sigma(ring, shape) * sigma(ring, box_complement(shape, 2, 3))) == 1);

  GrassmannRing square({{2, 2}});
  // (2) and (1,1) are each self-complementary in the 2x2 box, so the cross
  // pairing vanishes
  CHECK(integrate(sigma(square, Partition{2}) * sigma(square, Partition{1, 1})) == 0);
  CHECK(integrate(sigma(square, Partition{2}) * sigma(square, Partition{2})) == 1);
  CHECK(integrate(sigma(square, Partition{2, 1})) == 0);  // below top degree
}

TEST_CASE("complementary pairing matrix is a permutation matrix") {
  // boxes up to area 6 here; the acceptance suite covers every area <= 9
  for (unsigned rows = 1; rows <= 3; ++rows) {
    for (unsigned cols = 1; cols <= 3; ++cols) {
      if (rows * cols > 6) continue;
      GrassmannRing ring({{rows, cols}});
      auto all = partitions_in_box(rows, cols);
      for (const Partition& left : all) {
        for (const Partition& right : all) {
          if (left.weight() + right.weight() != rows * cols) continue;
          Int pairing = integrate(sigma(ring, left) * sigma(ring, right));
          CHECK(pairing == (right == box_complement(left, rows, cols) ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("Giambelli determinant reproduces the basis classes") {
  GrassmannRing ring({{2, 3}});
  CHECK(giambelli(ring, 0, Partition{2, 1}) == sigma(ring, Partition{2, 1}));
  CHECK(giambelli(ring, 0, Partition{}) == unit_class(ring));
  CHECK(giambelli(ring, 0, Partition{3}) == sigma(ring, Partition{3}));

  for (unsigned rows = 1; rows <= 3; ++rows) {
    for (unsigned cols = 1; cols <= 3; ++cols) {
      GrassmannRing box({{rows, cols}});
      for (const Partition& shape : partitions_in_box(rows, cols))
        CHECK(giambelli(box, 0, shape) == sigma(box, shape));
    }
  }

  CHECK_THROWS_MATCHES(giambelli(ring, 0, Partition{4}), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "BoxOverflow"; }));
}

TEST_CASE("Giambelli in a product ring leaves the other factor alone") {
  GrassmannRing ring({{2, 2}, {1, 3}});
  GrassmannClass got = giambelli(ring, 1, Partition{2});
  CHECK(got == schubert_class(ring, {Partition{}, Partition{2}}));
}

TEST_CASE("coefficient extraction on frozen classes") {
  BundleRing bundles({{"E", 2}});
  Poly c1 = cvar(bundles, 0, 1), c2 = cvar(bundles, 0, 2);

  CHECK(extract_coefficient(bundles, c1, {Partition{1}}, 3) == 1);
  CHECK(extract_coefficient(bundles, c2, {Partition{1, 1}}, 3) == 1);
  CHECK(extract_coefficient(bundles, c2, {Partition{2}}, 3) == 0);
  CHECK(extract_coefficient(bundles, Poly{}, {Partition{2}}, 3) == 0);
  CHECK(extract_coefficient(bundles, Poly{}, {Partition{}}, 3) == 0);

  CHECK_THROWS_MATCHES(extract_coefficient(bundles, c2 * c2, {Partition{2, 2}}, 3), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "BoxTooSmall"; }));
  // index longer than the slot rank leaves the basis
  CHECK_THROWS_MATCHES(extract_coefficient(bundles, c2, {Partition{1, 1, 1}}, 4), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "BoxOverflow"; }));
}

TEST_CASE("pairing path agrees with the free-ring expansion") {
  // sample here; the acceptance suite runs >= 100 polynomials to degree 6
  std::mt19937 rng(777001);
  for (int trial = 0; trial < 12; ++trial) {
    unsigned ra = 1 + static_cast<unsigned>(rng() % 3), rb = 1 + static_cast<unsigned>(rng() % 3);
    BundleRing bundles({{"E", ra}, {"F", rb}});
    unsigned degree = 1 + static_cast<unsigned>(rng() % 4);
    Poly input = random_homogeneous(bundles, degree, rng);
    auto expansion = expand_product_schur(bundles, input);
    for (unsigned de = 0; de <= degree; ++de) {
      for (const Partition& pe : partitions_of_weight(de, ra, de)) {
        for (const Partition& pf : partitions_of_weight(degree - de, rb, degree - de)) {
          PartitionTuple tuple{pe, pf};
          auto it = expansion.terms.find(tuple);
          Int expected = it == expansion.terms.end() ? Int(0) : it->second;
          CHECK(extract_coefficient(bundles, input, tuple, degree) == expected);
        }
      }
    }
  }
}
