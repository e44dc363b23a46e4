#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rinehart/envelope.hpp"

using namespace rinehart;

namespace {

const Claim* find_claim(const Report& r, const std::string& id) {
  for (const auto& c : r.claims)
    if (c.id == id) return &c;
  return nullptr;
}

// One even generator x with x^[p] = 0 and no bracket.
LieSuperalgebra truncated_line(std::int64_t p) {
  std::vector<std::vector<FpVec>> br(1, std::vector<FpVec>(1,
                                                           fp_zero_vec(1, p)));
  LieSuperalgebra l({"x"}, {Parity::even}, br, p);
  l.set_pmap(PMap{{fp_zero_vec(1, p)}});
  return l;
}

// Even h, odd f, [f, f] = h, h central, h^[p] = h.
LieSuperalgebra odd_square_pair(std::int64_t p) {
  std::vector<std::vector<FpVec>> br(2, std::vector<FpVec>(2,
                                                           fp_zero_vec(2, p)));
  br[1][1] = fp_unit_vec(2, 0, p);
  LieSuperalgebra l({"h", "f"}, {Parity::even, Parity::odd}, br, p);
  l.set_pmap(PMap{{fp_unit_vec(2, 0, p)}});
  return l;
}

// Abelian 1|1 with x^[p] = 0.
LieSuperalgebra abelian_pair(std::int64_t p) {
  std::vector<std::vector<FpVec>> br(2, std::vector<FpVec>(2,
                                                           fp_zero_vec(2, p)));
  LieSuperalgebra l({"x", "f"}, {Parity::even, Parity::odd}, br, p);
  l.set_pmap(PMap{{fp_zero_vec(2, p)}});
  return l;
}

PBWElement element_of(const RewriteSystem& sys,
                      const std::vector<std::pair<Word, std::int64_t>>& terms) {
  PBWElement e(sys.modulus());
  for (const auto& [w, c] : terms) e.add(w, Fp(c, sys.modulus()));
  return e;
}

// Coordinates of a reduced element in the spanning-word basis.
FpVec coords_of(const RewriteSystem& sys, const std::vector<Word>& words,
                const PBWElement& e) {
  FpVec out = fp_zero_vec(words.size(), sys.modulus());
  for (const auto& [w, c] : e.terms) {
    const auto it = std::find(words.begin(), words.end(), w);
    REQUIRE(it != words.end());
    out[static_cast<std::size_t>(it - words.begin())] = c;
  }
  return out;
}

}  // namespace

TEST_CASE("powers of a truncated generator vanish") {
  const auto sys = RewriteSystem::for_lie(truncated_line(3));
  CHECK(sys.normal_form(sys.parse("x x x")).is_zero());
  CHECK(sys.normal_form(sys.parse("x^2")) ==
        element_of(sys, {{{lie_letter(0), lie_letter(0)}, 1}}));
  CHECK(sys.dimension() == 3);

  const auto up = u_p_superalgebra(sys);
  CHECK(up.dim() == 3);
  CHECK(up.name(0) == "1");
  CHECK(up.name(2) == "x^2");
  // x^2 . x wraps to the p-th power, which was declared to vanish.
  CHECK(is_zero(up.mul(up.basis_vector(2), up.basis_vector(1))));
}

TEST_CASE("an odd square halves its self-bracket") {
  const auto sys = RewriteSystem::for_lie(odd_square_pair(3));
  // f f = (1/2)[f, f] = 2h at p = 3.
  CHECK(sys.normal_form(sys.parse("f f")) ==
        element_of(sys, {{{lie_letter(0)}, 2}}));
  // f h is out of order but the bracket correction [f, h] is zero.
  CHECK(sys.normal_form(sys.parse("f h")) ==
        element_of(sys, {{{lie_letter(0), lie_letter(1)}, 1}}));
  CHECK(sys.dimension() == 6);
  CHECK(check_pbw_table(sys).all_ok());
  CHECK(check_up_relations(sys).all_ok());

  const auto confluence = confluence_report(sys, 400, 6, 11);
  CHECK(confluence.all_ok());
  CHECK(confluence.seed == 11);
}

TEST_CASE("basis products reorder with the bracket correction") {
  const auto bundle = builtin_bundle("example-2-1", 3);
  const auto sys = RewriteSystem::for_lie(bundle.data.lie());

  // x3 x1 = x1 x3 + [x3, x1] = x1 x3 - x3.
  CHECK(sys.normal_form(sys.parse("x3 x1")) ==
        element_of(sys, {{{lie_letter(0), lie_letter(2)}, 1},
                         {{lie_letter(2)}, -1}}));
  // x1^3 = x1^[3] = x1 + (x1 + x2) under the default family parameter.
  CHECK(sys.normal_form(sys.parse("x1 x1 x1")) ==
        element_of(sys, {{{lie_letter(0)}, 2}, {{lie_letter(1)}, 1}}));

  CHECK(sys.dimension() == 18);
  CHECK(check_up_relations(sys).all_ok());
  CHECK(check_pbw_table(sys).all_ok());

  const auto up = u_p_superalgebra(sys);
  CHECK(up.dim() == 18);
  CHECK(up.parity(up.dim() - 1) == Parity::odd);  // x1^2.x2^2.x3
}

TEST_CASE("base letters are absorbed into the bracket part") {
  const auto bundle = builtin_bundle("example-2-1", 3);
  const auto sys = RewriteSystem::for_lie_rinehart(bundle.data);

  CHECK(sys.dimension() == 19);
  const auto words = sys.pbw_words();
  CHECK(words.size() == 19);
  CHECK(words[1] == Word{base_letter(1)});

  // e2 x1 is the module element e2.x1 = x3; the reverse order picks up the
  // anchor term rho(x1)(e2) = e2 on top of it.
  CHECK(sys.normal_form(sys.parse("e2 x1")) ==
        element_of(sys, {{{lie_letter(2)}, 1}}));
  CHECK(sys.normal_form(sys.parse("x1 e2")) ==
        element_of(sys, {{{base_letter(1)}, 1}, {{lie_letter(2)}, 1}}));
  CHECK(sys.normal_form(sys.parse("e2 e2")).is_zero());
  CHECK(sys.normal_form(sys.parse("e1^4")) == sys.one());

  // The displayed commutation relation between the two embeddings.
  const auto i_a = sys.embed_base(bundle.data.base().basis_vector(1));
  const auto i_l = sys.embed_lie(bundle.data.lie().basis_vector(0));
  CHECK(sys.mul(i_l, i_a) - sys.mul(i_a, i_l) == i_a);

  const auto relations = check_up_relations(sys);
  CHECK(relations.all_ok());
  CHECK(relations.claims.size() == 5);
  CHECK(relations.claims.front().id == "anchor-relation");
  CHECK(check_pbw_table(sys).all_ok());
}

TEST_CASE("a nontrivial action can collapse the mixed envelope") {
  // Associativity of e2 (x2 x1) forces (e2.x2) x1 = (e2.x1) x2 between
  // distinct spanning words, so with e2.x1 = x3 and e2.x2 = 0 the quotient
  // is smaller than the spanning set: the table cannot be associative and
  // rewriting cannot be confluent.  Both detectors must say so.
  const auto collapsing = builtin_bundle("example-2-1", 3);
  const auto sys = RewriteSystem::for_lie_rinehart(collapsing.data);
  CHECK_THROWS_AS(u_p_superalgebra(sys), FlagViolation);
  const auto probe = confluence_report(sys, 400, 6, 3);
  REQUIRE(find_claim(probe, "confluence") != nullptr);
  CHECK_FALSE(find_claim(probe, "confluence")->ok());
  CHECK_FALSE(find_claim(probe, "confluence")->witness.empty());

  // With the action switched off the same family is consistent: the table
  // closes, stays associative, and random orders agree.
  const auto flat = builtin_bundle("example-2-1", 3,
                                   {{"beta", 0}, {"gamma", 0}});
  const auto free_sys = RewriteSystem::for_lie_rinehart(flat.data);
  CHECK(u_p_superalgebra(free_sys).dim() == 19);
  CHECK(check_pbw_table(free_sys).all_ok());
  CHECK(confluence_report(free_sys, 1000, 6, 3).all_ok());
}

TEST_CASE("rewriting is confluent over the prime field") {
  const auto bundle = builtin_bundle("example-2-1", 3);

  const auto plain = confluence_report(
      RewriteSystem::for_lie(bundle.data.lie()), 1000, 6, 17);
  CHECK(plain.all_ok());
  REQUIRE(find_claim(plain, "confluence") != nullptr);
  CHECK(find_claim(plain, "confluence")->witness == "1000 words");
  CHECK(find_claim(plain, "filtration")->ok());
  CHECK(find_claim(plain, "associativity")->witness == "500 triples");

  // A derivation algebra is a larger 4|4-dimensional exercise.
  const auto witt = builtin_bundle("derivations", 3);
  CHECK(confluence_report(RewriteSystem::for_lie(witt.data.lie()), 300, 5, 23)
            .all_ok());

  const auto second = builtin_bundle("example-2-2", 3);
  CHECK(confluence_report(RewriteSystem::for_lie(second.data.lie()), 500, 6,
                          29)
            .all_ok());
}

TEST_CASE("dimension counting over both alphabets") {
  CHECK(RewriteSystem::for_lie(abelian_pair(5)).dimension() == 10);

  LieSuperalgebra none({}, {}, {}, 3);
  none.set_pmap(PMap{{}});
  const auto trivial = RewriteSystem::for_lie(none);
  CHECK(trivial.dimension() == 1);
  CHECK(trivial.pbw_words() == std::vector<Word>{{}});
  CHECK(u_p_superalgebra(trivial).dim() == 1);

  const auto witt = builtin_bundle("derivations", 3);
  CHECK(RewriteSystem::for_lie_rinehart(witt.data).dimension() ==
        4 + 81 * 16 - 1);
}

TEST_CASE("the envelope factors through a matrix representation") {
  const auto bundle = builtin_bundle("example-2-1", 3);
  const auto sys = RewriteSystem::for_lie_rinehart(bundle.data);
  const auto target = end_superalgebra(bundle.rep.parities, 3);

  std::vector<FpVec> a_cols, l_cols;
  for (const auto& m : bundle.rep.a_action) a_cols.push_back(m.flatten());
  for (const auto& m : bundle.rep.phi) l_cols.push_back(m.flatten());
  const auto j_base = FpMat::from_columns(a_cols, 3, target.dim());
  const auto j_lie = FpMat::from_columns(l_cols, 3, target.dim());

  const auto factored = factor_through(sys, target, j_base, j_lie, 200, 5);
  CHECK(factored.report.all_ok());
  CHECK(factored.report.seed == 5);
  CHECK(factored.images.size() == 19);
  // The empty word maps to the identity matrix, x1 to its anchor action.
  CHECK(factored.images[0] == FpVec{Fp(1, 3), Fp(0, 3), Fp(0, 3), Fp(1, 3)});
  const auto words = sys.pbw_words();
  const auto x1 = std::find(words.begin(), words.end(), Word{lie_letter(0)});
  REQUIRE(x1 != words.end());
  CHECK(factored.images[static_cast<std::size_t>(x1 - words.begin())] ==
        j_lie.column(0));
}

TEST_CASE("the envelope factors through itself by the identity") {
  // The action-trivial member of the family, where the spanning words are an
  // honest basis and U_p(A, L) is realizable as a table.
  const auto bundle = builtin_bundle("example-2-1", 3,
                                     {{"beta", 0}, {"gamma", 0}});
  const auto sys = RewriteSystem::for_lie_rinehart(bundle.data);
  const auto up = u_p_superalgebra(sys);
  const auto words = sys.pbw_words();

  std::vector<FpVec> a_cols, l_cols;
  for (std::size_t i = 0; i < bundle.data.base().dim(); ++i)
    a_cols.push_back(coords_of(
        sys, words, sys.embed_base(bundle.data.base().basis_vector(i))));
  for (std::size_t j = 0; j < bundle.data.lie().dim(); ++j)
    l_cols.push_back(coords_of(
        sys, words, sys.embed_lie(bundle.data.lie().basis_vector(j))));
  const auto j_base = FpMat::from_columns(a_cols, 3, up.dim());
  const auto j_lie = FpMat::from_columns(l_cols, 3, up.dim());

  const auto factored = factor_through(sys, up, j_base, j_lie, 150, 7);
  CHECK(factored.report.all_ok());
  for (std::size_t k = 0; k < up.dim(); ++k)
    CHECK(factored.images[k] == up.basis_vector(k));
}

TEST_CASE("broken images are rejected before factoring") {
  const auto bundle = builtin_bundle("example-2-1", 3);
  const auto sys = RewriteSystem::for_lie_rinehart(bundle.data);
  const auto target = end_superalgebra(bundle.rep.parities, 3);

  std::vector<FpVec> a_cols, l_cols;
  for (const auto& m : bundle.rep.a_action) a_cols.push_back(m.flatten());
  for (const auto& m : bundle.rep.phi) l_cols.push_back(m.flatten());
  const auto j_base = FpMat::from_columns(a_cols, 3, target.dim());

  // Shifting the image of x1 by the identity survives the bracket check
  // (central shift) but breaks the p-th power condition.
  auto shifted = l_cols;
  shifted[0] = shifted[0] + FpVec{Fp(1, 3), Fp(0, 3), Fp(0, 3), Fp(1, 3)};
  CHECK_THROWS_AS(
      factor_through(sys, target,
                     j_base, FpMat::from_columns(shifted, 3, target.dim())),
      PreconditionViolated);

  // Swapping the base images loses the unit.
  const auto swapped = FpMat::from_columns({a_cols[1], a_cols[0]}, 3,
                                           target.dim());
  CHECK_THROWS_AS(factor_through(sys, target, swapped,
                                 FpMat::from_columns(l_cols, 3, target.dim())),
                  PreconditionViolated);

  CHECK_THROWS_AS(factor_through(sys, target, j_base, FpMat(2, 3, 3)),
                  std::invalid_argument);
}

TEST_CASE("words parse and format on both alphabets") {
  const auto bundle = builtin_bundle("example-2-1", 3);
  const auto sys = RewriteSystem::for_lie_rinehart(bundle.data);

  CHECK(sys.parse("x1^2 x3") ==
        Word{lie_letter(0), lie_letter(0), lie_letter(2)});
  CHECK(sys.format_word(sys.parse("x1 x1 x3")) == "x1^2.x3");
  CHECK(sys.parse("e2 x1") == Word{base_letter(1), lie_letter(0)});
  CHECK(sys.format(sys.one()) == "1");
  CHECK(sys.format(PBWElement(3)) == "0");
  CHECK(sys.format(sys.normal_form(sys.parse("x3 x1"))) == "x1.x3 + 2*x3");
  CHECK_THROWS_AS(sys.parse("y9"), std::invalid_argument);

  std::vector<std::vector<FpVec>> br(1, std::vector<FpVec>(1,
                                                           fp_zero_vec(1, 3)));
  const LieSuperalgebra bare({"x"}, {Parity::even}, br, 3);
  CHECK_THROWS_AS(RewriteSystem::for_lie(bare), std::invalid_argument);
}
