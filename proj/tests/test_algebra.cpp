#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rinehart/superalgebra.hpp"

using namespace rinehart;

namespace {

FpVec random_vec(const SuperAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(0, a.modulus() - 1);
  FpVec v = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i) v[i] = Fp(coeff(rng), a.modulus());
  return v;
}

}  // namespace

TEST_CASE("row reduction, rank, nullspace, solve") {
  const std::int64_t p = 5;
  // [1 2 3; 2 4 1; 0 0 4] over F_5: rows 1,2 are dependent mod nothing --
  // row2 - 2*row1 = (0,0,-5) = 0 mod 5, so rank 2.
  FpMat m(3, 3, p);
  std::int64_t vals[3][3] = {{1, 2, 3}, {2, 4, 1}, {0, 0, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Fp(vals[i][j], p);
  CHECK(rank(m) == 2);

  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  CHECK(!is_zero(ns[0]));

  // A solvable system and an inconsistent one.
  FpVec b = m * fp_unit_vec(3, 0, p);
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m * *x == b);

  FpMat zero_row(1, 2, p);
  FpVec rhs = {Fp(1, p)};
  CHECK(!solve(zero_row, rhs).has_value());

  // Matrix powers: a nilpotent single Jordan block.
  FpMat n(3, 3, p);
  n.at(0, 1) = Fp(1, p);
  n.at(1, 2) = Fp(1, p);
  CHECK(!n.pow(2).is_zero());
  CHECK(n.pow(3).is_zero());
  CHECK(n.pow(0) == FpMat::identity(3, p));
}

TEST_CASE("coordinates in a span") {
  const std::int64_t p = 3;
  std::vector<FpVec> span = {{Fp(1, p), Fp(0, p), Fp(1, p)},
                             {Fp(0, p), Fp(1, p), Fp(1, p)}};
  FpVec v = {Fp(2, p), Fp(1, p), Fp(0, p)};  // 2*s0 + s1
  auto c = coordinates_in_span(span, v, p);
  REQUIRE(c.has_value());
  CHECK((*c)[0].value() == 2);
  CHECK((*c)[1].value() == 1);
  FpVec outside = {Fp(1, p), Fp(0, p), Fp(0, p)};
  CHECK(!coordinates_in_span(span, outside, p).has_value());
}

TEST_CASE("grassmann algebra basics") {
  auto g2 = build_grassmann(2, 3);
  CHECK(g2.dim() == 4);
  CHECK(g2.dim_even() == 2);
  CHECK(g2.dim_odd() == 2);
  CHECK(g2.name(0) == "1");
  CHECK(g2.has_unit());

  // x1*x2 = -x2*x1 and squares vanish.
  std::size_t x1 = 1, x2 = 2;
  REQUIRE(g2.name(x1) == "x1");
  REQUIRE(g2.name(x2) == "x2");
  FpVec prod = g2.mul(g2.basis_vector(x1), g2.basis_vector(x2));
  FpVec anti = g2.mul(g2.basis_vector(x2), g2.basis_vector(x1));
  CHECK(g2.format(prod) == "x1x2");
  CHECK(prod == Fp(-1, 3) * anti);
  CHECK(is_zero(g2.mul(g2.basis_vector(x1), g2.basis_vector(x1))));
  CHECK(is_zero(g2.mul(g2.basis_vector(x2), g2.basis_vector(x2))));

  // n = 1 has the shape of the worked 1|1 example: unit plus a square-zero
  // odd element.
  auto g1 = build_grassmann(1, 3);
  CHECK(g1.dim() == 2);
  CHECK(g1.parity(1) == Parity::odd);
  CHECK(is_zero(g1.mul(g1.basis_vector(1), g1.basis_vector(1))));

  CHECK_THROWS_AS(build_grassmann(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_grassmann(7, 3), std::invalid_argument);
}

TEST_CASE("grassmann unit acts identically on random elements") {
  auto g3 = build_grassmann(3, 5);
  std::mt19937_64 rng(2024);
  for (int n = 0; n < 100; ++n) {
    FpVec v = random_vec(g3, rng);
    CHECK(g3.mul(g3.unit_element(), v) == v);
    CHECK(g3.mul(v, g3.unit_element()) == v);
  }
}

TEST_CASE("grassmann products respect the shuffle sign") {
  // In Lambda(3): (x2)(x1x3) = -x1x2x3 (one transposition), while
  // (x1)(x2x3) = +x1x2x3.
  auto g3 = build_grassmann(3, 7);
  auto idx = [&](const std::string& nm) {
    for (std::size_t i = 0; i < g3.dim(); ++i)
      if (g3.name(i) == nm) return i;
    FAIL(("missing basis name " + nm));
    return std::size_t{0};
  };
  FpVec a = g3.mul(g3.basis_vector(idx("x2")), g3.basis_vector(idx("x1x3")));
  CHECK(a[idx("x1x2x3")] == Fp(-1, 7));
  FpVec b = g3.mul(g3.basis_vector(idx("x1")), g3.basis_vector(idx("x2x3")));
  CHECK(b[idx("x1x2x3")] == Fp(1, 7));
  // Full anticommutativity spot check at degree 1x2.
  FpVec c = g3.mul(g3.basis_vector(idx("x1x3")), g3.basis_vector(idx("x2")));
  CHECK(c == a);  // even*odd order swap: |x1x3| even, no sign
}

TEST_CASE("construction rejects corrupted tables") {
  const std::int64_t p = 3;
  auto g = build_grassmann(2, p);

  // Break parity additivity: x1*x2 gets an odd component.
  std::vector<std::vector<FpVec>> products;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    products.emplace_back();
    for (std::size_t j = 0; j < g.dim(); ++j)
      products.back().push_back(g.product(i, j));
  }
  auto broken = products;
  broken[1][2][1] = Fp(1, p);  // coefficient of x1 in x1*x2
  SuperAlgebra::Flags flags = g.flags();
  CHECK_THROWS_AS(SuperAlgebra(g.names(), g.parities(), broken, p, flags),
                  FlagViolation);

  // Break the unit.
  auto broken_unit = products;
  broken_unit[0][1] = g.zero();
  CHECK_THROWS_AS(
      SuperAlgebra(g.names(), g.parities(), broken_unit, p, flags),
      FlagViolation);

  // Break supercommutativity (keep parity legal): x1*x2 = +x2*x1 != -x2*x1.
  auto broken_sc = products;
  broken_sc[2][1] = broken_sc[1][2];
  CHECK_THROWS_AS(SuperAlgebra(g.names(), g.parities(), broken_sc, p, flags),
                  FlagViolation);

  // Break associativity: needs a table where (ab)c != a(bc); corrupt
  // x1*x1 = 1 so that (x1 x1) x2 = x2 but x1 (x1 x2) = 0.
  auto broken_assoc = products;
  broken_assoc[1][1][0] = Fp(1, p);
  SuperAlgebra::Flags assoc_only;
  assoc_only.associative = true;
  assoc_only.supercommutative = false;
  CHECK_THROWS_AS(
      SuperAlgebra(g.names(), g.parities(), broken_assoc, p, assoc_only),
      FlagViolation);
}

TEST_CASE("field algebra and End(V)") {
  auto k = field_algebra(3);
  CHECK(k.dim() == 1);
  CHECK(k.mul(k.unit_element(), k.unit_element()) == k.unit_element());

  // End of a 1|1 space: E11, E22 even; E12, E21 odd; E12 E21 = E11.
  auto e = end_superalgebra({Parity::even, Parity::odd}, 3);
  CHECK(e.dim() == 4);
  CHECK(e.dim_even() == 2);
  auto idx = [&](const std::string& nm) {
    for (std::size_t i = 0; i < e.dim(); ++i)
      if (e.name(i) == nm) return i;
    FAIL(("missing basis name " + nm));
    return std::size_t{0};
  };
  CHECK(e.parity(idx("E1_2")) == Parity::odd);
  FpVec prod =
      e.mul(e.basis_vector(idx("E1_2")), e.basis_vector(idx("E2_1")));
  CHECK(prod == e.basis_vector(idx("E1_1")));
  CHECK(is_zero(
      e.mul(e.basis_vector(idx("E1_2")), e.basis_vector(idx("E1_2")))));
}

TEST_CASE("derivation space of Lambda(n) has rank n * 2^n") {
  for (std::int64_t p : {3, 5}) {
    auto g2 = build_grassmann(2, p);
    auto ds2 = derivation_space(g2);
    CHECK(ds2.total() == 8);
    CHECK(ds2.even.size() == 4);
    CHECK(ds2.odd.size() == 4);

    auto g3 = build_grassmann(3, p);
    auto ds3 = derivation_space(g3);
    CHECK(ds3.total() == 24);
    CHECK(ds3.even.size() == 12);
    CHECK(ds3.odd.size() == 12);
  }
}

TEST_CASE("every solved derivation satisfies the graded Leibniz rule") {
  auto g2 = build_grassmann(2, 3);
  auto ds = derivation_space(g2);
  for (const auto& d : ds.even) CHECK(is_derivation(g2, d, Parity::even));
  for (const auto& d : ds.odd) CHECK(is_derivation(g2, d, Parity::odd));
  // and the defining grading
  for (const auto& d : ds.even)
    CHECK(respects_grading(d, Parity::even, g2.parities(), g2.parities()));
  for (const auto& d : ds.odd)
    CHECK(respects_grading(d, Parity::odd, g2.parities(), g2.parities()));
  // a non-derivation is rejected
  FpMat not_d = FpMat::identity(4, 3);
  CHECK(!is_derivation(g2, not_d, Parity::even));
}

TEST_CASE("p-th powers of even derivations are derivations") {
  for (std::int64_t p : {3, 5}) {
    for (int n : {2, 3}) {
      auto g = build_grassmann(n, p);
      auto ds = derivation_space(g);
      for (const auto& d : ds.even)
        CHECK(is_derivation(g, d.pow(static_cast<std::uint64_t>(p)),
                            Parity::even));
    }
  }
}

TEST_CASE("element formatting") {
  auto g = build_grassmann(2, 5);
  CHECK(g.format(g.zero()) == "0");
  FpVec v = g.zero();
  v[0] = Fp(1, 5);
  v[3] = Fp(3, 5);
  CHECK(g.format(v) == "1 + 3*x1x2");
  CHECK(g.parity_of(v) == Parity::even);
  v[1] = Fp(2, 5);
  CHECK(!g.parity_of(v).has_value());
  CHECK(!g.parity_of(g.zero()).has_value());
}
