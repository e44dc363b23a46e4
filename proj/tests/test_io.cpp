#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "rinehart/bundle_io.hpp"

using namespace rinehart;

namespace {

bool same_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus() ||
      a.names() != b.names() || a.parities() != b.parities() ||
      a.has_unit() != b.has_unit())
    return false;
  if (a.has_unit() && a.unit_index() != b.unit_index()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.product(i, j) == b.product(i, j))) return false;
  return true;
}

bool same_lie(const LieSuperalgebra& a, const LieSuperalgebra& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus() ||
      a.names() != b.names() || a.parities() != b.parities() ||
      a.has_pmap() != b.has_pmap())
    return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.bracket_basis(i, j) == b.bracket_basis(i, j))) return false;
  if (a.has_pmap() && !(a.pmap().images == b.pmap().images)) return false;
  return true;
}

}  // namespace

TEST_CASE("algebra documents round-trip bit-exactly") {
  const auto grassmann = build_grassmann(2, 3);
  const std::string text = algebra_to_json(grassmann);
  const auto back = algebra_from_json(text);
  CHECK(same_algebra(grassmann, back));
  CHECK(algebra_to_json(back) == text);
  CHECK(back.flags().supercommutative);
  CHECK(detect_document(text) == DocumentKind::algebra);

  // A non-supercommutative algebra must not regain the flag on reload.
  const auto matrices = end_superalgebra({Parity::even, Parity::odd}, 5);
  const auto matrices_back = algebra_from_json(algebra_to_json(matrices));
  CHECK(same_algebra(matrices, matrices_back));
  CHECK_FALSE(matrices_back.flags().supercommutative);
  CHECK_FALSE(matrices_back.has_unit());
}

TEST_CASE("bracket documents keep the bracket and the p-map") {
  const auto bundle = builtin_bundle("example-2-1", 3);
  const std::string text = lie_to_json(bundle.data.lie());
  const auto back = lie_from_json(text);
  CHECK(same_lie(bundle.data.lie(), back));
  CHECK(lie_to_json(back) == text);
  CHECK(detect_document(text) == DocumentKind::bracket);

  // Without a p-map the document simply has no "pmap" key.
  std::vector<std::vector<FpVec>> br(1, std::vector<FpVec>(1,
                                                           fp_zero_vec(1, 3)));
  const LieSuperalgebra bare({"x"}, {Parity::even}, br, 3);
  const std::string bare_text = lie_to_json(bare);
  CHECK(bare_text.find("pmap") == std::string::npos);
  CHECK(same_lie(bare, lie_from_json(bare_text)));
}

TEST_CASE("bundle documents carry action, anchor, and module") {
  const auto bundle = builtin_bundle("example-2-1", 3, {{"gamma", 2}});
  const std::string text = bundle_to_json(bundle.data, &bundle.rep);
  const auto loaded = bundle_from_json(text);
  CHECK(bundle_to_json(loaded.data, &*loaded.rep) == text);
  CHECK(detect_document(text) == DocumentKind::bundle);

  CHECK(same_algebra(bundle.data.base(), loaded.data.base()));
  CHECK(same_lie(bundle.data.lie(), loaded.data.lie()));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(loaded.data.action_constant(i, j) ==
            bundle.data.action_constant(i, j));
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(loaded.data.anchor_constant(j) == bundle.data.anchor_constant(j));

  REQUIRE(loaded.rep.has_value());
  CHECK(loaded.rep->names == bundle.rep.names);
  CHECK(loaded.rep->a_action == bundle.rep.a_action);
  CHECK(loaded.rep->phi == bundle.rep.phi);
  CHECK(check_lr(loaded.data).all_ok());
  CHECK(check_restricted_lr(loaded.data, 40, 1).all_ok());

  // The module block is optional on both sides of the trip.
  const std::string plain = bundle_to_json(bundle.data);
  CHECK(plain.find("module") == std::string::npos);
  CHECK_FALSE(bundle_from_json(plain).rep.has_value());
  CHECK(bundle_to_json(bundle_from_json(plain).data) == plain);
}

TEST_CASE("a derivation bundle survives the round trip") {
  const auto witt = builtin_bundle("derivations", 3);
  const std::string text = bundle_to_json(witt.data, &witt.rep);
  const auto loaded = bundle_from_json(text);
  CHECK(loaded.data.base().dim() == 4);
  CHECK(loaded.data.lie().dim() == 8);
  CHECK(bundle_to_json(loaded.data, &*loaded.rep) == text);
  CHECK(check_lr(loaded.data).all_ok());
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(algebra_from_json("not json at all"), BadBundle);
  CHECK_THROWS_AS(algebra_from_json("[1, 2, 3]"), BadBundle);
  CHECK_THROWS_AS(detect_document(R"({"p": 3})"), BadBundle);

  // Unknown key.
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"basis": [], "p": 3, "product": [], "flavor": "odd"})"),
      BadBundle);
  // Bad parity spelling.
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"basis": [{"name": "e", "parity": "Even"}], "p": 3, "product": []})"),
      BadBundle);
  // Out-of-range index in a sparse element.
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"basis": [{"name": "e", "parity": "even"}], "p": 3, "product": [[0, 0, [[4, 1]]]]})"),
      BadBundle);
  // Unit that is not a basis name.
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"basis": [{"name": "e", "parity": "even"}], "p": 3, "product": [], "unit": "f"})"),
      BadBundle);
  // Missing modulus.
  CHECK_THROWS_AS(
      algebra_from_json(R"({"basis": [], "product": []})"), BadBundle);
  // p-map entries out of order relative to the even basis.
  CHECK_THROWS_AS(
      lie_from_json(
          R"({"basis": [{"name": "a", "parity": "even"}, {"name": "b", "parity": "even"}], "bracket": [], "p": 3, "pmap": [["b", []], ["a", []]]})"),
      BadBundle);

  // Algebraic validation still runs: a parseable document whose constants
  // break associativity is a FlagViolation, not a BadBundle.
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"basis": [{"name": "e", "parity": "even"}, {"name": "f", "parity": "even"}], "p": 3, "product": [[0, 0, [[1, 1]]], [1, 1, [[0, 1]]]]})"),
      FlagViolation);
}
