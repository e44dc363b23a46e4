#pragma once
// Restricted enveloping algebras by term rewriting.  Words over the basis
// letters of A and L are reduced to a normal form: an element of A (as the
// coefficient of the empty word) plus scalar combinations of ordered
// power-bounded words in the basis of L.  The rules present U_p(A, L):
//
//   (i)   x_b x_a -> (-1)^{|a||b|} x_a x_b + [x_b, x_a]   (a < b in basis order)
//   (ii)  x^p     -> x^[p]                                 (even basis letter)
//   (iii) f f     -> (1/2)[f, f]                           (odd basis letter)
//   (iv)  a b     -> the product in A
//   (v)   x a     -> (-1)^{|a||x|} a x + rho(x)(a)
//   (vi)  a x     -> the element a.x of L
//
// plus erasure of the unit letter of A.  Every right-hand side is strictly
// smaller in the (word length, inversion count) lexicographic measure -- the
// sign term of (i) and (v) keeps the length but removes one inversion, every
// other term is shorter -- so exhaustive rewriting terminates under any
// application order.  Confluence is not proved here; it is validated by
// sampling (confluence_report), which is what makes the normal forms usable
// as a basis.  The plain restricted envelope U_p(L) is the same machine over
// the one-dimensional base field.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rinehart/lierinehart.hpp"

namespace rinehart {

// A hypothesis of the universal property fails on a concrete basis pair.
struct PreconditionViolated : std::domain_error {
  using std::domain_error::domain_error;
};

// One generator letter: a basis element of the base algebra or of the Lie
// superalgebra.  Base letters sort before Lie letters.
struct Letter {
  enum class Kind { base, lie };
  Kind kind = Kind::lie;
  std::size_t index = 0;

  auto operator<=>(const Letter&) const = default;
};

inline Letter base_letter(std::size_t i) { return {Letter::Kind::base, i}; }
inline Letter lie_letter(std::size_t i) { return {Letter::Kind::lie, i}; }

using Word = std::vector<Letter>;

// A linear combination of words with mod-p coefficients; canonical form
// stores no zero coefficients, so equality is map equality.
struct PBWElement {
  std::int64_t p = 0;
  std::map<Word, Fp> terms;

  explicit PBWElement(std::int64_t modulus) : p(modulus) {}

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Fp& c);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  bool operator==(const PBWElement& o) const {
    return p == o.p && terms == o.terms;
  }
};

PBWElement operator*(const Fp& c, const PBWElement& e);

class RewriteSystem {
 public:
  // Both constructors require a p-map on L (the power rule needs it).
  static RewriteSystem for_lie(const LieSuperalgebra& l);
  static RewriteSystem for_lie_rinehart(const LRData& data);

  const LRData& bundle() const { return data_; }
  std::int64_t modulus() const { return data_.modulus(); }
  // True when the base is more than the prime field, i.e. base letters can
  // appear in normal forms.
  bool has_base_letters() const { return data_.base().dim() > 1; }

  // Space-separated basis names, e.g. "x3 x1 e2".  Unknown names throw.
  Word parse(const std::string& text) const;
  std::string format_word(const Word& w) const;  // "x1^2.x3", "1" for empty
  std::string format(const PBWElement& e) const;

  // Exhaustive rewriting with the deterministic leftmost strategy.
  PBWElement normal_form(const Word& w) const;
  PBWElement normal_form(const PBWElement& e) const;
  // Same fixed point through seeded random redex choices (confluence probe).
  PBWElement normal_form_random(const Word& w, std::mt19937_64& rng) const;

  PBWElement one() const;
  PBWElement embed_base(const FpVec& a) const;  // i_A
  PBWElement embed_lie(const FpVec& x) const;   // i_L
  PBWElement mul(const PBWElement& u, const PBWElement& v) const;

  // The spanning words: the empty word, the non-unit base letters, then the
  // ordered L-words with even exponents < p and odd exponents <= 1.
  std::vector<Word> pbw_words() const;
  // Number of spanning words, dim A + p^{dim L_even} * 2^{dim L_odd} - 1.
  // Over the prime field this is the classical restricted PBW count and an
  // exact dimension; over a larger base it is an upper bound that is attained
  // exactly when rewriting is confluent.  A nontrivial module action can
  // genuinely collapse the quotient below the spanning words: associativity
  // of a (x y) forces (a.x) y = +-(a.y) x + a.[x, y], an equation between
  // distinct normal words, so confluence_report doubles as the detector.
  std::size_t dimension() const;

 private:
  explicit RewriteSystem(LRData data);

  struct Redex {
    std::size_t pos;
    int rule;
    bool operator<(const Redex& o) const {
      return pos != o.pos ? pos < o.pos : rule < o.rule;
    }
  };
  std::vector<Redex> redexes(const Word& w) const;
  // One rewriting step: the redex is replaced by a linear combination.
  std::vector<std::pair<Word, Fp>> apply(const Word& w, const Redex& r) const;
  template <typename Pick>
  PBWElement reduce(std::vector<std::pair<Word, Fp>> stack, Pick&& pick) const;

  LRData data_;
  std::vector<FpVec> squares_;      // (1/2)[f,f] per odd basis letter
  std::vector<std::size_t> even_pos_;  // basis index -> position in pmap
};

// The defining relations of U_p(A, L) as normal-form identities: the module
// relation i_A(a) i_L(x) = i_L(ax), the anchor commutator relation, the even
// power relation x^p = x^[p], the odd square relation, and unit absorption.
Report check_up_relations(const RewriteSystem& sys);

// Normal forms of the spanning words are the words themselves, and every
// pairwise product reduces to a combination of spanning words.  Together
// with the assumed PBW theorem this realizes dimension() concretely.
Report check_pbw_table(const RewriteSystem& sys);

// Random words (length <= max_len) reduced with the leftmost strategy and
// two independent randomized strategies must agree; term degrees never
// exceed the input length; multiplication of reduced elements associates.
Report confluence_report(const RewriteSystem& sys, int words = 1000,
                         int max_len = 6, std::uint64_t seed = 1);

// The universal property, checked concretely: j_base and j_lie map the bases
// of A and L into the target (columns are images).  Hypotheses -- an even
// algebra morphism, an even restricted Lie morphism, and the two
// compatibility displays -- are verified on bases and throw
// PreconditionViolated when they fail.  The induced map sends a word to the
// product of its letter images; the report checks the triangle identities
// and multiplicativity on sampled pairs.
struct FactorThrough {
  std::vector<FpVec> images;  // one per pbw word, coordinates in the target
  Report report;
};
FactorThrough factor_through(const RewriteSystem& sys,
                             const SuperAlgebra& target, const FpMat& j_base,
                             const FpMat& j_lie, int samples = 200,
                             std::uint64_t seed = 1);

// U_p(A, L) materialized as a SuperAlgebra on the spanning words (throws
// std::logic_error if the multiplication table fails to close).
SuperAlgebra u_p_superalgebra(const RewriteSystem& sys);

}  // namespace rinehart
