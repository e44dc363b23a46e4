#include "rinehart/envelope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <utility>

namespace rinehart {

namespace {

// Rule tags, in priority order at a fixed position.
constexpr int kEraseUnit = 0;
constexpr int kSwap = 1;
constexpr int kEvenPower = 2;
constexpr int kOddSquare = 3;
constexpr int kBaseProduct = 4;
constexpr int kLieBase = 5;
constexpr int kBaseLie = 6;

void sort_claims(Report& r) {
  std::stable_sort(r.claims.begin(), r.claims.end(),
                   [](const Claim& a, const Claim& b) { return a.id < b.id; });
}

}  // namespace

void PBWElement::add(const Word& w, const Fp& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(w, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement out = *this;
  out += o;
  return out;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  PBWElement out = *this;
  for (const auto& [w, c] : o.terms) out.add(w, Fp(0, p) - c);
  return out;
}

PBWElement operator*(const Fp& c, const PBWElement& e) {
  PBWElement out(e.p);
  for (const auto& [w, k] : e.terms) out.add(w, c * k);
  return out;
}

RewriteSystem::RewriteSystem(LRData data) : data_(std::move(data)) {
  const LieSuperalgebra& l = data_.lie();
  if (!l.has_pmap())
    throw std::invalid_argument("rewrite system needs a p-map on the bracket");
  squares_.assign(l.dim(), FpVec{});
  even_pos_.assign(l.dim(), l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j)
    if (l.parity(j) == Parity::odd)
      squares_[j] = l.square(l.basis_vector(j));
  const auto& evens = l.even_indices();
  for (std::size_t pos = 0; pos < evens.size(); ++pos)
    even_pos_[evens[pos]] = pos;
}

RewriteSystem RewriteSystem::for_lie(const LieSuperalgebra& l) {
  const std::int64_t p = l.modulus();
  SuperAlgebra field = field_algebra(p);
  std::vector<std::vector<FpVec>> action(1);
  std::vector<FpMat> anchor;
  for (std::size_t j = 0; j < l.dim(); ++j) {
    action[0].push_back(l.basis_vector(j));
    anchor.emplace_back(1, 1, p);
  }
  return RewriteSystem(LRData(field, l, action, anchor));
}

RewriteSystem RewriteSystem::for_lie_rinehart(const LRData& data) {
  return RewriteSystem(data);
}

std::vector<RewriteSystem::Redex> RewriteSystem::redexes(const Word& w) const {
  std::vector<Redex> out;
  const SuperAlgebra& a = data_.base();
  const LieSuperalgebra& l = data_.lie();
  const auto run = static_cast<std::size_t>(modulus());
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t].kind == Letter::Kind::base && w[t].index == a.unit_index())
      out.push_back({t, kEraseUnit});
    if (t + 1 >= w.size()) continue;
    const Letter& x = w[t];
    const Letter& y = w[t + 1];
    if (x.kind == Letter::Kind::base) {
      out.push_back({t, y.kind == Letter::Kind::base ? kBaseProduct : kBaseLie});
    } else if (y.kind == Letter::Kind::base) {
      out.push_back({t, kLieBase});
    } else if (x.index > y.index) {
      out.push_back({t, kSwap});
    } else if (x.index == y.index) {
      if (l.parity(x.index) == Parity::odd) {
        out.push_back({t, kOddSquare});
      } else if (t + run <= w.size()) {
        bool all = true;
        for (std::size_t s = t + 2; s < t + run && all; ++s)
          all = w[s] == x;
        if (all) out.push_back({t, kEvenPower});
      }
    }
  }
  return out;
}

std::vector<std::pair<Word, Fp>> RewriteSystem::apply(const Word& w,
                                                      const Redex& r) const {
  const SuperAlgebra& a = data_.base();
  const LieSuperalgebra& l = data_.lie();
  const std::int64_t p = modulus();
  std::vector<std::pair<Word, Fp>> out;
  const auto splice = [&](std::size_t count, const Word& repl, const Fp& c) {
    if (c.is_zero()) return;
    Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r.pos));
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(),
                w.begin() + static_cast<std::ptrdiff_t>(r.pos + count),
                w.end());
    out.emplace_back(std::move(next), c);
  };
  const auto expand = [&](std::size_t count, const FpVec& v, Letter::Kind k) {
    for (std::size_t i = 0; i < v.size(); ++i)
      splice(count, {Letter{k, i}}, v[i]);
  };
  const Fp one(1, p);
  switch (r.rule) {
    case kEraseUnit:
      splice(1, {}, one);
      break;
    case kSwap: {
      const bool both_odd = l.parity(w[r.pos].index) == Parity::odd &&
                            l.parity(w[r.pos + 1].index) == Parity::odd;
      splice(2, {w[r.pos + 1], w[r.pos]}, both_odd ? Fp(-1, p) : one);
      expand(2, l.bracket_basis(w[r.pos].index, w[r.pos + 1].index),
             Letter::Kind::lie);
      break;
    }
    case kEvenPower:
      expand(static_cast<std::size_t>(p),
             l.pmap().images[even_pos_[w[r.pos].index]], Letter::Kind::lie);
      break;
    case kOddSquare:
      expand(2, squares_[w[r.pos].index], Letter::Kind::lie);
      break;
    case kBaseProduct:
      expand(2, a.product(w[r.pos].index, w[r.pos + 1].index),
             Letter::Kind::base);
      break;
    case kLieBase: {
      const bool both_odd = l.parity(w[r.pos].index) == Parity::odd &&
                            a.parity(w[r.pos + 1].index) == Parity::odd;
      splice(2, {w[r.pos + 1], w[r.pos]}, both_odd ? Fp(-1, p) : one);
      expand(2, data_.anchor_constant(w[r.pos].index).column(w[r.pos + 1].index),
             Letter::Kind::base);
      break;
    }
    case kBaseLie:
      expand(2, data_.action_constant(w[r.pos].index, w[r.pos + 1].index),
             Letter::Kind::lie);
      break;
    default:
      throw std::logic_error("unknown rewrite rule");
  }
  return out;
}

template <typename Pick>
PBWElement RewriteSystem::reduce(std::vector<std::pair<Word, Fp>> stack,
                                 Pick&& pick) const {
  PBWElement out(modulus());
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    if (c.is_zero()) continue;
    const auto rs = redexes(w);
    if (rs.empty()) {
      out.add(w, c);
      continue;
    }
    const Redex r = pick(rs);
    for (auto& [next, k] : apply(w, r))
      stack.emplace_back(std::move(next), c * k);
  }
  return out;
}

PBWElement RewriteSystem::normal_form(const Word& w) const {
  return reduce({{w, Fp(1, modulus())}},
                [](const std::vector<Redex>& rs) { return rs.front(); });
}

PBWElement RewriteSystem::normal_form(const PBWElement& e) const {
  std::vector<std::pair<Word, Fp>> stack(e.terms.begin(), e.terms.end());
  return reduce(std::move(stack),
                [](const std::vector<Redex>& rs) { return rs.front(); });
}

PBWElement RewriteSystem::normal_form_random(const Word& w,
                                             std::mt19937_64& rng) const {
  return reduce({{w, Fp(1, modulus())}}, [&rng](const std::vector<Redex>& rs) {
    std::uniform_int_distribution<std::size_t> d(0, rs.size() - 1);
    return rs[d(rng)];
  });
}

PBWElement RewriteSystem::one() const {
  PBWElement e(modulus());
  e.add({}, Fp(1, modulus()));
  return e;
}

PBWElement RewriteSystem::embed_base(const FpVec& a) const {
  if (a.size() != data_.base().dim())
    throw std::invalid_argument("base element has the wrong dimension");
  std::vector<std::pair<Word, Fp>> stack;
  for (std::size_t i = 0; i < a.size(); ++i)
    stack.push_back({{base_letter(i)}, a[i]});
  return reduce(std::move(stack),
                [](const std::vector<Redex>& rs) { return rs.front(); });
}

PBWElement RewriteSystem::embed_lie(const FpVec& x) const {
  if (x.size() != data_.lie().dim())
    throw std::invalid_argument("bracket element has the wrong dimension");
  PBWElement e(modulus());
  for (std::size_t k = 0; k < x.size(); ++k) e.add({lie_letter(k)}, x[k]);
  return e;
}

PBWElement RewriteSystem::mul(const PBWElement& u, const PBWElement& v) const {
  std::vector<std::pair<Word, Fp>> stack;
  for (const auto& [wu, cu] : u.terms)
    for (const auto& [wv, cv] : v.terms) {
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      stack.emplace_back(std::move(w), cu * cv);
    }
  return reduce(std::move(stack),
                [](const std::vector<Redex>& rs) { return rs.front(); });
}

Word RewriteSystem::parse(const std::string& text) const {
  const SuperAlgebra& a = data_.base();
  const LieSuperalgebra& l = data_.lie();
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long long count = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      count = std::strtoll(tok.c_str() + caret + 1, nullptr, 10);
      if (count < 0) throw std::invalid_argument("negative power in " + tok);
    }
    std::optional<Letter> letter;
    for (std::size_t j = 0; j < l.dim() && !letter; ++j)
      if (l.name(j) == name) letter = lie_letter(j);
    for (std::size_t i = 0; i < a.dim() && !letter; ++i)
      if (a.name(i) == name) letter = base_letter(i);
    if (!letter) throw std::invalid_argument("unknown letter: " + name);
    w.insert(w.end(), static_cast<std::size_t>(count), *letter);
  }
  return w;
}

std::string RewriteSystem::format_word(const Word& w) const {
  if (w.empty()) return "1";
  const SuperAlgebra& a = data_.base();
  const LieSuperalgebra& l = data_.lie();
  std::string out;
  for (std::size_t t = 0; t < w.size();) {
    std::size_t run = t + 1;
    while (run < w.size() && w[run] == w[t]) ++run;
    if (!out.empty()) out += '.';
    out += w[t].kind == Letter::Kind::base ? a.name(w[t].index)
                                           : l.name(w[t].index);
    if (run - t > 1) out += '^' + std::to_string(run - t);
    t = run;
  }
  return out;
}

std::string RewriteSystem::format(const PBWElement& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms) {
    if (!out.empty()) out += " + ";
    if (c.value() != 1 || w.empty()) out += std::to_string(c.value());
    if (c.value() != 1 && !w.empty()) out += '*';
    if (!w.empty()) out += format_word(w);
  }
  return out;
}

std::vector<Word> RewriteSystem::pbw_words() const {
  const SuperAlgebra& a = data_.base();
  const LieSuperalgebra& l = data_.lie();
  std::vector<Word> out;
  out.push_back({});
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != a.unit_index()) out.push_back({base_letter(i)});
  const std::size_t n = l.dim();
  std::vector<std::int64_t> exp(n, 0);
  for (;;) {
    bool advanced = false;
    for (std::size_t j = n; j-- > 0;) {
      const std::int64_t radix =
          l.parity(j) == Parity::even ? modulus() : 2;
      if (exp[j] + 1 < radix) {
        ++exp[j];
        std::fill(exp.begin() + static_cast<std::ptrdiff_t>(j) + 1, exp.end(),
                  0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    Word w;
    for (std::size_t j = 0; j < n; ++j)
      w.insert(w.end(), static_cast<std::size_t>(exp[j]), lie_letter(j));
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t RewriteSystem::dimension() const {
  const LieSuperalgebra& l = data_.lie();
  std::size_t monomials = 1;
  for (std::size_t j = 0; j < l.dim(); ++j)
    monomials *= l.parity(j) == Parity::even
                     ? static_cast<std::size_t>(modulus())
                     : 2;
  return data_.base().dim() + monomials - 1;
}

Report check_up_relations(const RewriteSystem& sys) {
  const SuperAlgebra& a = sys.bundle().base();
  const LieSuperalgebra& l = sys.bundle().lie();
  const std::int64_t p = sys.modulus();
  Report r;
  r.suite = "u-p-relations";

  {
    bool ok = sys.normal_form(Word{base_letter(a.unit_index())}) == sys.one();
    std::string witness;
    for (std::size_t j = 0; j < l.dim() && ok; ++j) {
      const PBWElement x = sys.embed_lie(l.basis_vector(j));
      if (sys.normal_form(Word{base_letter(a.unit_index()), lie_letter(j)}) !=
              x ||
          sys.normal_form(Word{lie_letter(j), base_letter(a.unit_index())}) !=
              x) {
        ok = false;
        witness = l.name(j);
      }
    }
    r.add("unit-relation", "1 x = x 1 = x", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < a.dim() && ok; ++i)
      for (std::size_t j = 0; j < l.dim() && ok; ++j)
        if (sys.normal_form(Word{base_letter(i), lie_letter(j)}) !=
            sys.embed_lie(sys.bundle().action_constant(i, j))) {
          ok = false;
          witness = a.name(i) + " . " + l.name(j);
        }
    r.add("module-relation", "a x = (a.x)", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < a.dim() && ok; ++i)
      for (std::size_t j = 0; j < l.dim() && ok; ++j) {
        const bool both_odd =
            a.parity(i) == Parity::odd && l.parity(j) == Parity::odd;
        const Fp sign(both_odd ? -1 : 1, p);
        const PBWElement lhs =
            sys.normal_form(Word{lie_letter(j), base_letter(i)}) -
            sign * sys.normal_form(Word{base_letter(i), lie_letter(j)});
        if (lhs !=
            sys.embed_base(sys.bundle().anchor_constant(j).column(i))) {
          ok = false;
          witness = "(" + l.name(j) + ", " + a.name(i) + ")";
        }
      }
    r.add("anchor-relation", "x a - (-1)^{|a||x|} a x = rho(x)(a)", ok,
          witness);
  }
  {
    bool ok = true;
    std::string witness;
    const auto& evens = l.even_indices();
    for (std::size_t pos = 0; pos < evens.size() && ok; ++pos) {
      const Word w(static_cast<std::size_t>(p), lie_letter(evens[pos]));
      if (sys.normal_form(w) != sys.embed_lie(l.pmap().images[pos])) {
        ok = false;
        witness = l.name(evens[pos]);
      }
    }
    r.add("power-relation", "x^p = x^[p] for even basis letters", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t j = 0; j < l.dim() && ok; ++j) {
      if (l.parity(j) != Parity::odd) continue;
      const FpVec sq = l.square(l.basis_vector(j));
      if (sys.normal_form(Word{lie_letter(j), lie_letter(j)}) !=
          sys.embed_lie(sq)) {
        ok = false;
        witness = l.name(j);
      }
    }
    r.add("square-relation", "f f = (1/2)[f, f] for odd basis letters", ok,
          witness);
  }
  sort_claims(r);
  return r;
}

Report check_pbw_table(const RewriteSystem& sys) {
  Report r;
  r.suite = "pbw-table";
  const std::vector<Word> words = sys.pbw_words();
  r.add("basis-count", "spanning words match the dimension formula",
        words.size() == sys.dimension(),
        std::to_string(words.size()) + " words, dimension " +
            std::to_string(sys.dimension()));

  bool irreducible = true;
  std::string witness;
  for (const Word& w : words) {
    const PBWElement nf = sys.normal_form(w);
    if (nf.terms.size() != 1 || nf.terms.begin()->first != w ||
        nf.terms.begin()->second.value() != 1) {
      irreducible = false;
      witness = sys.format_word(w);
      break;
    }
  }
  r.add("basis-irreducible", "every spanning word is its own normal form",
        irreducible, witness);

  const std::set<Word> span(words.begin(), words.end());
  bool closed = true;
  witness.clear();
  for (std::size_t u = 0; u < words.size() && closed; ++u)
    for (std::size_t v = 0; v < words.size() && closed; ++v) {
      Word w = words[u];
      w.insert(w.end(), words[v].begin(), words[v].end());
      for (const auto& [t, c] : sys.normal_form(w).terms)
        if (!span.count(t)) {
          closed = false;
          witness = sys.format_word(words[u]) + " * " +
                    sys.format_word(words[v]) + " -> " + sys.format_word(t);
          break;
        }
    }
  r.add("table-closure", "products stay inside the spanning words", closed,
        witness);
  sort_claims(r);
  return r;
}

Report confluence_report(const RewriteSystem& sys, int words, int max_len,
                         std::uint64_t seed) {
  const SuperAlgebra& a = sys.bundle().base();
  const LieSuperalgebra& l = sys.bundle().lie();
  Report r;
  r.suite = "confluence";
  r.seed = seed;
  std::mt19937_64 rng(seed);

  std::vector<Letter> pool;
  for (std::size_t i = 0; i < a.dim(); ++i) pool.push_back(base_letter(i));
  for (std::size_t j = 0; j < l.dim(); ++j) pool.push_back(lie_letter(j));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const auto random_word = [&](int longest) {
    std::uniform_int_distribution<int> len(1, longest);
    Word w(static_cast<std::size_t>(len(rng)));
    for (Letter& x : w) x = pool[pick(rng)];
    return w;
  };

  int clashes = 0;
  int overflows = 0;
  std::string clash_witness;
  std::string overflow_witness;
  for (int n = 0; n < words; ++n) {
    const Word w = random_word(max_len);
    const PBWElement fixed = sys.normal_form(w);
    const PBWElement first = sys.normal_form_random(w, rng);
    const PBWElement second = sys.normal_form_random(w, rng);
    if (!(fixed == first && fixed == second)) {
      ++clashes;
      if (clash_witness.empty()) clash_witness = sys.format_word(w);
    }
    for (const auto* e : {&fixed, &first, &second})
      for (const auto& [t, c] : e->terms)
        if (t.size() > w.size()) {
          ++overflows;
          if (overflow_witness.empty()) overflow_witness = sys.format_word(w);
        }
  }
  r.add("confluence", "random application orders reach one normal form",
        clashes == 0,
        clashes == 0 ? std::to_string(words) + " words"
                     : clash_witness + " (" + std::to_string(clashes) +
                           " of " + std::to_string(words) + ")");
  r.add("filtration", "normal forms never exceed the input length",
        overflows == 0, overflow_witness);

  const int triples = std::max(1, words / 2);
  int broken = 0;
  std::string assoc_witness;
  for (int n = 0; n < triples; ++n) {
    const Word wu = random_word(3), wv = random_word(3), ww = random_word(3);
    const PBWElement u = sys.normal_form(wu);
    const PBWElement v = sys.normal_form(wv);
    const PBWElement w = sys.normal_form(ww);
    if (!(sys.mul(sys.mul(u, v), w) == sys.mul(u, sys.mul(v, w)))) {
      ++broken;
      if (assoc_witness.empty())
        assoc_witness = sys.format_word(wu) + " , " + sys.format_word(wv) +
                        " , " + sys.format_word(ww);
    }
  }
  r.add("associativity", "(u v) w = u (v w) on reduced elements", broken == 0,
        broken == 0 ? std::to_string(triples) + " triples" : assoc_witness);
  sort_claims(r);
  return r;
}

FactorThrough factor_through(const RewriteSystem& sys,
                             const SuperAlgebra& target, const FpMat& j_base,
                             const FpMat& j_lie, int samples,
                             std::uint64_t seed) {
  const SuperAlgebra& a = sys.bundle().base();
  const LieSuperalgebra& l = sys.bundle().lie();
  const std::int64_t p = sys.modulus();
  if (target.modulus() != p)
    throw std::invalid_argument("target works over a different modulus");
  if (j_base.rows() != target.dim() || j_base.cols() != a.dim() ||
      j_lie.rows() != target.dim() || j_lie.cols() != l.dim())
    throw std::invalid_argument("image matrices have the wrong shape");

  // The unit of the target is reached through j_base; it need not be a basis
  // vector (it is not in an endomorphism algebra), so verify it directly.
  const FpVec unit_b = j_base * a.unit_element();
  for (std::size_t k = 0; k < target.dim(); ++k)
    if (!(target.mul(unit_b, target.basis_vector(k)) ==
              target.basis_vector(k) &&
          target.mul(target.basis_vector(k), unit_b) ==
              target.basis_vector(k)))
      throw PreconditionViolated("the image of 1 is not a unit of the target");

  const auto commutator = [&](const FpVec& u, const FpVec& v, Parity pu,
                              Parity pv) {
    FpVec swapped = target.mul(v, u);
    if (pu == Parity::odd && pv == Parity::odd)
      return target.mul(u, v) + swapped;
    return target.mul(u, v) - swapped;
  };

  if (!respects_grading(j_base, Parity::even, a.parities(), target.parities()))
    throw PreconditionViolated("the base map mixes parities");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!(j_base * a.product(i, k) ==
            target.mul(j_base.column(i), j_base.column(k))))
        throw PreconditionViolated("the base map is not multiplicative at " +
                                   a.name(i) + " " + a.name(k));
  if (!respects_grading(j_lie, Parity::even, l.parities(), target.parities()))
    throw PreconditionViolated("the bracket map mixes parities");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t k = 0; k < l.dim(); ++k)
      if (!(j_lie * l.bracket_basis(i, k) ==
            commutator(j_lie.column(i), j_lie.column(k), l.parity(i),
                       l.parity(k))))
        throw PreconditionViolated(
            "the bracket map does not respect the bracket at [" + l.name(i) +
            ", " + l.name(k) + "]");
  {
    const auto& evens = l.even_indices();
    for (std::size_t pos = 0; pos < evens.size(); ++pos) {
      FpVec pth = unit_b;
      for (std::int64_t e = 0; e < p; ++e)
        pth = target.mul(pth, j_lie.column(evens[pos]));
      if (!(j_lie * l.pmap().images[pos] == pth))
        throw PreconditionViolated("the bracket map drops the p-th power at " +
                                   l.name(evens[pos]));
    }
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (!(j_lie * sys.bundle().action_constant(i, j) ==
            target.mul(j_base.column(i), j_lie.column(j))))
        throw PreconditionViolated("the module display fails at " + a.name(i) +
                                   " " + l.name(j));
      if (!(j_base * sys.bundle().anchor_constant(j).column(i) ==
            commutator(j_lie.column(j), j_base.column(i), l.parity(j),
                       a.parity(i))))
        throw PreconditionViolated("the anchor display fails at (" +
                                   l.name(j) + ", " + a.name(i) + ")");
    }

  const auto image_of_word = [&](const Word& w) {
    FpVec out = unit_b;
    for (const Letter& x : w)
      out = target.mul(out, x.kind == Letter::Kind::base
                                ? j_base.column(x.index)
                                : j_lie.column(x.index));
    return out;
  };
  const auto image_of = [&](const PBWElement& e) {
    FpVec out = target.zero();
    for (const auto& [w, c] : e.terms) out = out + c * image_of_word(w);
    return out;
  };

  FactorThrough result{{}, {}};
  result.report.suite = "universal-property";
  result.report.seed = seed;
  const std::vector<Word> words = sys.pbw_words();
  for (const Word& w : words) result.images.push_back(image_of_word(w));

  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < a.dim() && ok; ++i)
      if (!(image_of(sys.embed_base(a.basis_vector(i))) == j_base.column(i))) {
        ok = false;
        witness = a.name(i);
      }
    result.report.add("triangle-base", "psi . i_A = j_A on the base", ok,
                      witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t j = 0; j < l.dim() && ok; ++j)
      if (!(image_of(sys.embed_lie(l.basis_vector(j))) == j_lie.column(j))) {
        ok = false;
        witness = l.name(j);
      }
    result.report.add("triangle-lie", "psi . i_L = j_L on the bracket part",
                      ok, witness);
  }

  std::mt19937_64 rng(seed);
  std::vector<Letter> pool;
  for (std::size_t i = 0; i < a.dim(); ++i) pool.push_back(base_letter(i));
  for (std::size_t j = 0; j < l.dim(); ++j) pool.push_back(lie_letter(j));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(1, 4);
  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n < samples && ok; ++n) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (Letter& x : w) x = pool[pick(rng)];
      if (!(image_of(sys.normal_form(w)) == image_of_word(w))) {
        ok = false;
        witness = sys.format_word(w);
      }
    }
    result.report.add("well-defined",
                      "rewriting does not move the image of a word", ok,
                      witness);
  }
  {
    bool ok = true;
    std::string witness;
    std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
    for (int n = 0; n < samples && ok; ++n) {
      const std::size_t u = pick_word(rng), v = pick_word(rng);
      Word w = words[u];
      w.insert(w.end(), words[v].begin(), words[v].end());
      if (!(image_of(sys.normal_form(w)) ==
            target.mul(result.images[u], result.images[v]))) {
        ok = false;
        witness =
            sys.format_word(words[u]) + " * " + sys.format_word(words[v]);
      }
    }
    result.report.add("multiplicative", "psi(u v) = psi(u) psi(v)", ok,
                      witness);
  }
  sort_claims(result.report);
  return result;
}

SuperAlgebra u_p_superalgebra(const RewriteSystem& sys) {
  const SuperAlgebra& a = sys.bundle().base();
  const LieSuperalgebra& l = sys.bundle().lie();
  const std::vector<Word> words = sys.pbw_words();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (const Word& w : words) {
    names.push_back(sys.format_word(w));
    Parity parity = Parity::even;
    for (const Letter& x : w)
      parity = parity + (x.kind == Letter::Kind::base ? a.parity(x.index)
                                                      : l.parity(x.index));
    parities.push_back(parity);
  }

  std::vector<std::vector<FpVec>> products(
      words.size(), std::vector<FpVec>(
                        words.size(), fp_zero_vec(words.size(), sys.modulus())));
  for (std::size_t u = 0; u < words.size(); ++u)
    for (std::size_t v = 0; v < words.size(); ++v) {
      Word w = words[u];
      w.insert(w.end(), words[v].begin(), words[v].end());
      for (const auto& [t, c] : sys.normal_form(w).terms) {
        const auto it = index.find(t);
        if (it == index.end())
          throw std::logic_error("product " + sys.format_word(words[u]) +
                                 " * " + sys.format_word(words[v]) +
                                 " leaves the spanning words");
        products[u][v][it->second] = c;
      }
    }

  SuperAlgebra::Flags flags;
  flags.associative = true;
  flags.supercommutative = false;
  flags.unit = 0;
  return SuperAlgebra(std::move(names), std::move(parities),
                      std::move(products), sys.modulus(), flags);
}

}  // namespace rinehart
