#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurtp/chern.hpp"
#include "test_support.hpp"

using namespace schurtp;
using testutil::cvar;
using testutil::random_homogeneous;

namespace {

const FormalBundle kZero = FormalBundle::zero();

bool has_code(const Error& e, const char* code) { return e.code() == code; }

}  // namespace

TEST_CASE("Chern classes of functor constructions") {
  BundleRing ring({{"E", 2}, {"L", 1}});
  FormalBundle e = FormalBundle::slot(0), line = FormalBundle::slot(1);

  SECTION("dual negates odd classes") {
    CHECK(chern_class(ring, FormalBundle::dual(e), 1) == -cvar(ring, 0, 1));
    CHECK(chern_class(ring, FormalBundle::dual(e), 2) == cvar(ring, 0, 2));
  }

  SECTION("second symmetric power of a rank-2 bundle") {
    FormalBundle sym = FormalBundle::sym_power(e, 2);
    CHECK(sym.rank(ring) == 3);  // roots 2a1, a1+a2, 2a2
    CHECK(chern_class(ring, sym, 1) == Int(3) * cvar(ring, 0, 1));
  }

  SECTION("tensor by a line bundle shifts every root") {
    FormalBundle twisted = FormalBundle::tensor_line(e, line);
    CHECK(twisted.rank(ring) == 2);
    CHECK(chern_class(ring, twisted, 1) == cvar(ring, 0, 1) + Int(2) * cvar(ring, 1, 1));
    CHECK_THROWS_MATCHES(
        FormalBundle::tensor_line(line, e).rank(ring), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e_) { return has_code(e_, "RankMismatch"); }));
  }

  SECTION("jet bundle rank") {
    // (Sym^1 E* + Sym^2 E*) tensor L: (2 + 3) * 1
    CHECK(FormalBundle::jets(e, line, 2).rank(ring) == 5);
    BundleRing wide({{"E", 2}, {"F", 3}});
    CHECK(FormalBundle::jets(FormalBundle::slot(0), FormalBundle::slot(1), 3)
              .rank(wide) == (2 + 3 + 4) * 3);
  }

  SECTION("first-order jets are the twisted dual") {
    FormalBundle jets1 = FormalBundle::jets(e, line, 1);
    FormalBundle twisted_dual = FormalBundle::tensor_line(FormalBundle::dual(e), line);
    for (unsigned i = 0; i <= 2; ++i)
      CHECK(chern_class(ring, jets1, i) == chern_class(ring, twisted_dual, i));
  }

  SECTION("second-order jets of a rank-2 bundle") {
    // roots: {-a_i + l} and {-a_i - a_j + l}, so c1 = -4 c1(E) + 5 c1(L)
    FormalBundle jets2 = FormalBundle::jets(e, line, 2);
    CHECK(chern_class(ring, jets2, 1) ==
          Int(-4) * cvar(ring, 0, 1) + Int(5) * cvar(ring, 1, 1));
  }

  SECTION("degree overflow") {
    CHECK_THROWS_MATCHES(chern_class(ring, e, 3), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e_) { return has_code(e_, "DegreeOverflow"); }));
  }
}

TEST_CASE("splitting-principle soundness: c(A + B) = c(A) c(B)") {
  std::mt19937 rng(911);
  for (int trial = 0; trial < 4; ++trial) {
    unsigned ra = 1 + static_cast<unsigned>(rng() % 3), rb = 1 + static_cast<unsigned>(rng() % 3);
    BundleRing ring({{"A", ra}, {"B", rb}});
    FormalBundle a = FormalBundle::slot(0), b = FormalBundle::slot(1);
    FormalBundle whole = FormalBundle::sum(a, b);
    for (unsigned i = 0; i <= ra + rb; ++i) {
      Poly expected;
      for (unsigned j = 0; j <= i; ++j) {
        if (j > ra || i - j > rb) continue;
        expected += chern_class(ring, a, j) * chern_class(ring, b, i - j);
      }
      CHECK(chern_class(ring, whole, i) == expected);
    }
  }
}

TEST_CASE("Segre series of virtual bundles") {
  BundleRing ring({{"E", 2}, {"L", 1}});
  FormalBundle e = FormalBundle::slot(0), line = FormalBundle::slot(1);

  SECTION("E - E is the unit series") {
    auto series = segre_series(ring, e, e, 5);
    CHECK(series[0] == Poly::one());
    for (unsigned d = 1; d <= 5; ++d) CHECK(series[d].is_zero());
  }

  SECTION("rank-1 bundle minus zero is geometric") {
    auto series = segre_series(ring, line, kZero, 4);
    Poly root = cvar(ring, 1, 1);
    Poly power = Poly::one();
    for (unsigned d = 0; d <= 4; ++d) {
      CHECK(series[d] == power);
      power = power * root;
    }
  }

  SECTION("zero minus a line bundle stops at degree one") {
    auto series = segre_series(ring, kZero, line, 4);
    CHECK(series[0] == Poly::one());
    CHECK(series[1] == -cvar(ring, 1, 1));
    CHECK(series[2].is_zero());
    CHECK(series[3].is_zero());
  }
}

TEST_CASE("super-Schur functions") {
  BundleRing ring({{"E", 2}, {"F", 2}});
  FormalBundle e = FormalBundle::slot(0), f = FormalBundle::slot(1);

  CHECK(super_schur(ring, Partition{1, 1}, e, kZero) == cvar(ring, 0, 2));
  CHECK(super_schur(ring, Partition{1}, e, e).is_zero());
  auto series = segre_series(ring, e, f, 4);
  for (unsigned i = 1; i <= 4; ++i)
    CHECK(super_schur(ring, Partition{i}, e, f) == series[i]);
  CHECK(super_schur(ring, Partition{}, e, f) == Poly::one());
  // length beyond the rank dies in the free ring on two roots
  CHECK(super_schur(ring, Partition{1, 1, 1}, e, kZero).is_zero());
}

TEST_CASE("duality sign law (checked, not assumed)") {
  BundleRing ring({{"E", 2}, {"F", 3}});
  FormalBundle e = FormalBundle::slot(0), f = FormalBundle::slot(1);
  FormalBundle ed = FormalBundle::dual(e), fd = FormalBundle::dual(f);
  for (unsigned w = 0; w <= 5; ++w) {
    for (const Partition& shape : partitions_of_weight(w, w, w)) {
      Poly plain = super_schur(ring, shape, e, f);
      Poly dualized = super_schur(ring, shape, ed, fd);
      if (w % 2 == 0) {
        CHECK(dualized == plain);
      } else {
        CHECK(dualized == -plain);
      }
    }
  }
}

TEST_CASE("basis expansion of frozen classes") {
  BundleRing ring({{"E", 2}, {"F", 2}});

  SECTION("Riemann-Hurwitz class in the mixed-variance basis") {
    Poly input = cvar(ring, 1, 1) - cvar(ring, 0, 1);
    auto expansion = expand_product_schur(ring, input, {true, false});
    REQUIRE(expansion.terms.size() == 2);
    CHECK(expansion.terms.at({Partition{1}, Partition{}}) == 1);
    CHECK(expansion.terms.at({Partition{}, Partition{1}}) == 1);
  }

  SECTION("constants expand to the empty tuple") {
    auto expansion = expand_product_schur(ring, Poly::one());
    REQUIRE(expansion.terms.size() == 1);
    CHECK(expansion.terms.at({Partition{}, Partition{}}) == 1);
  }

  SECTION("c2 is the single-column Schur function") {
    auto expansion = expand_product_schur(ring, cvar(ring, 0, 2));
    REQUIRE(expansion.terms.size() == 1);
    CHECK(expansion.terms.at({Partition{1, 1}, Partition{}}) == 1);
  }

  SECTION("inhomogeneous input expands degree by degree") {
    Poly input = cvar(ring, 0, 2) + Int(2) * cvar(ring, 0, 1) + Poly(Int(5));
    auto expansion = expand_product_schur(ring, input);
    REQUIRE(expansion.terms.size() == 3);
    CHECK(expansion.terms.at({Partition{1, 1}, Partition{}}) == 1);
    CHECK(expansion.terms.at({Partition{1}, Partition{}}) == 2);
    CHECK(expansion.terms.at({Partition{}, Partition{}}) == 5);
    CHECK(evaluate_expansion(expansion) == input);
  }
}

TEST_CASE("basis round trip on random homogeneous classes") {
  std::mt19937 rng(424243);
  for (int trial = 0; trial < 16; ++trial) {
    unsigned ra = 1 + static_cast<unsigned>(rng() % 3), rb = 1 + static_cast<unsigned>(rng() % 3);
    BundleRing ring({{"E", ra}, {"F", rb}});
    unsigned degree = 1 + static_cast<unsigned>(rng() % 6);
    Poly input = random_homogeneous(ring, degree, rng);
    std::vector<bool> dual{static_cast<bool>(rng() % 2), static_cast<bool>(rng() % 2)};
    auto expansion = expand_product_schur(ring, input, dual);
    for (const auto& [tuple, coeff] : expansion.terms) {
      CHECK(tuple_weight(tuple) == degree);
      CHECK(coeff != 0);
    }
    CHECK(evaluate_expansion(expansion) == input);
  }
}

TEST_CASE("basis round trip over three slots") {
  std::mt19937 rng(5150);
  BundleRing ring({{"A", 2}, {"B", 1}, {"C", 2}});
  for (int trial = 0; trial < 4; ++trial) {
    Poly input = random_homogeneous(ring, 3, rng);
    auto expansion = expand_product_schur(ring, input, {false, true, false});
    CHECK(evaluate_expansion(expansion) == input);
  }
}

TEST_CASE("stable expansion") {
  SECTION("Riemann-Hurwitz class is S_(1) of the virtual difference") {
    BundleRing ring({{"E", 2}, {"F", 2}});
    Poly input = cvar(ring, 1, 1) - cvar(ring, 0, 1);
    auto stable = stable_expand(ring, input);
    REQUIRE(stable.terms.size() == 1);
    CHECK(stable.terms.at(Partition{1}) == 1);
  }

  SECTION("degree-2 class from the rank-shift-one setup") {
    BundleRing ring({{"E", 1}, {"F", 2}});
    Poly input = a1_thom(ring);
    auto stable = stable_expand(ring, input);
    REQUIRE(stable.terms.size() == 1);
    CHECK(stable.terms.at(Partition{2}) == 1);
  }

  SECTION("non-supersymmetric classes are rejected") {
    BundleRing ring({{"E", 2}, {"F", 2}});
    Poly input = cvar(ring, 0, 1) + cvar(ring, 1, 1);
    CHECK_THROWS_MATCHES(stable_expand(ring, input), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e_) {
                           return has_code(e_, "NotSupersymmetric");
                         }));
  }
}

TEST_CASE("A1 Thom polynomials") {
  SECTION("equal ranks reproduce the Riemann-Hurwitz class") {
    for (unsigned m = 1; m <= 3; ++m) {
      auto [ring, tp] = a1_thom(m, m);
      CHECK(tp == cvar(ring, 1, 1) - cvar(ring, 0, 1));
    }
  }

  SECTION("rank jump one from a curve source") {
    auto [ring, tp] = a1_thom(1, 2);
    Poly c1e = cvar(ring, 0, 1), c1f = cvar(ring, 1, 1), c2f = cvar(ring, 1, 2);
    CHECK(tp == c2f - c1e * c1f + c1e * c1e);
  }

  SECTION("stable expansion is a single hook-free row") {
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned k = 0; k <= 2; ++k) {
        auto [ring, tp] = a1_thom(m, m + k);
        auto stable = stable_expand(ring, tp);
        REQUIRE(stable.terms.size() == 1);
        CHECK(stable.terms.at(Partition{k + 1}) == 1);
      }
    }
  }

  SECTION("rank order is enforced") {
    BundleRing ring({{"E", 3}, {"F", 2}});
    CHECK_THROWS_MATCHES(a1_thom(ring), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e_) { return has_code(e_, "RankOrder"); }));
  }
}

TEST_CASE("the two published forms of the A1 class agree") {
  CHECK(verify_a1_identity(1, 1));
  CHECK(verify_a1_identity(2, 3));
  CHECK(verify_a1_identity(3, 3));
  CHECK(verify_a1_identity(1, 4));
}
