#include "rinehart/shapes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rinehart {

Shape::Shape(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 1) throw std::invalid_argument("shape entries must be positive");
  std::sort(entries_.begin(), entries_.end());
}

int Shape::weight() const {
  int t = 0;
  for (int e : entries_) t += e;
  return t;
}

int Shape::entry(int u) const {
  if (u < 1 || u > length()) throw std::out_of_range("shape position");
  return entries_[u - 1];
}

bool Shape::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

bool Shape::monomial_vanishes() const {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] == entries_[i - 1] && entries_[i] % 2 == 1) return true;
  return false;
}

std::string to_string(const Shape& s) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < s.length(); ++i) {
    if (i) out << ',';
    out << s.entries()[static_cast<std::size_t>(i)];
  }
  out << ')';
  return out.str();
}

namespace {

void enumerate_parts(int remaining, int min_part, std::vector<int>& acc,
                     std::vector<Shape>& out) {
  if (remaining == 0) {
    out.push_back(Shape(acc));
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    acc.push_back(part);
    enumerate_parts(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

const std::vector<Shape>& shapes_of_weight(int t) {
  if (t < 0) throw std::invalid_argument("shape weight must be >= 0");
  static std::map<int, std::vector<Shape>> cache;
  auto it = cache.find(t);
  if (it == cache.end()) {
    std::vector<Shape> all;
    std::vector<int> acc;
    enumerate_parts(t, 1, acc, all);
    std::sort(all.begin(), all.end());
    it = cache.emplace(t, std::move(all)).first;
  }
  return it->second;
}

Shape phi(int i, int t, const Shape& mu) {
  if (mu.weight() != t) throw std::invalid_argument("phi: weight mismatch");
  auto entries = mu.entries();
  entries.push_back(i);
  return Shape(entries);
}

Shape psi(int i, int t, const Shape& mu, int u) {
  if (mu.weight() != t) throw std::invalid_argument("psi: weight mismatch");
  auto entries = mu.entries();
  entries.at(static_cast<std::size_t>(u - 1)) += i;  // throws on bad u
  return Shape(entries);
}

int leibniz_sign(const Shape& mu, int u) {
  if (u < 1 || u > mu.length()) throw std::out_of_range("pointer position");
  int odd_before = 0;
  for (int v = 1; v < u; ++v)
    if (mu.entry(v) % 2 == 1) ++odd_before;
  return odd_before % 2 == 0 ? 1 : -1;
}

std::vector<Shape> phi_inverse(int i, int t, const Shape& nu) {
  std::vector<Shape> out;
  for (const Shape& mu : shapes_of_weight(t))
    if (phi(i, t, mu) == nu) out.push_back(mu);
  return out;
}

std::vector<std::pair<Shape, int>> psi_inverse(int i, int t, const Shape& nu) {
  std::vector<std::pair<Shape, int>> out;
  for (const Shape& mu : shapes_of_weight(t))
    for (int u = 1; u <= mu.length(); ++u)
      if (psi(i, t, mu, u) == nu) out.emplace_back(mu, u);
  return out;
}

std::optional<Monomial> shape_monomial(const Shape& mu) {
  std::vector<std::pair<int, int>> factors;
  for (int e : mu.entries()) factors.emplace_back(e, 1);
  auto [sign, mono] = canonicalize(factors, kEvenOdd);
  if (sign == 0) return std::nullopt;
  return mono;  // ascending entries never reorder, so the sign is +1
}

Int extract_coefficient(const SuperPolyZ& f, int a, const Shape& mu) {
  if (a < 0) return 0;
  std::vector<std::pair<int, int>> factors;
  if (a > 0) factors.emplace_back(0, a);
  for (int e : mu.entries()) factors.emplace_back(e, 1);
  auto [sign, mono] = canonicalize(factors, kEvenOdd);
  if (sign == 0) return 0;
  return f.coeff(mono);
}

bool is_packed(const Shape& lambda) {
  return lambda == packed_shape(lambda.weight());
}

Shape packed_shape(int r) {
  if (r < 0) throw std::invalid_argument("packed shape weight must be >= 0");
  std::vector<int> entries;
  if (r % 2 == 1) entries.push_back(1);
  entries.insert(entries.end(), static_cast<std::size_t>(r / 2), 2);
  return Shape(entries);
}

namespace {

PLambda extract_row_poly(GammaTable& gammas, const Shape& lambda, int m_max,
                         bool odd_k) {
  if (!(gammas.parity_case() == kEvenOdd))
    throw std::invalid_argument(
        "row-coefficient extraction expects the even x0 / odd delta grading");
  const int r = lambda.weight();
  if (m_max < r + 2)
    throw InsufficientSamples("need samples up to m = weight + 2");

  PLambda out;
  out.shape = lambda;
  for (int m = 0; m <= m_max; ++m) {
    const int k = odd_k ? 2 * m + 1 : 2 * m;
    out.samples.push_back(
        extract_coefficient(gammas.gamma(k, k - r), k - lambda.length(), lambda));
  }
  std::vector<Int> head(out.samples.begin(), out.samples.begin() + (r + 3));
  out.poly = BinomPoly::fit(head);
  for (int m = r + 3; m <= m_max; ++m)
    if (out.poly.eval(m) != out.samples[static_cast<std::size_t>(m)])
      throw InconsistentSamples("held-out row sample deviates from the fit at m = " +
                                std::to_string(m));
  return out;
}

}  // namespace

PLambda extract_P(GammaTable& gammas, const Shape& lambda, int m_max) {
  return extract_row_poly(gammas, lambda, m_max, /*odd_k=*/false);
}

PLambda extract_Q(GammaTable& gammas, const Shape& lambda, int m_max) {
  return extract_row_poly(gammas, lambda, m_max, /*odd_k=*/true);
}

SuperPolyZ realize(const HomogeneousSum& h) {
  SuperPolyZ f;
  for (const auto& [mu, c] : h.coeffs) {
    if (mu.weight() != h.t)
      throw std::invalid_argument("homogeneous sum mixes shape weights");
    const int a = h.n - mu.length();
    if (a < 0) continue;  // convention: such coefficients are zero
    std::vector<std::pair<int, int>> factors;
    if (a > 0) factors.emplace_back(0, a);
    for (int e : mu.entries()) factors.emplace_back(e, 1);
    auto [sign, mono] = canonicalize(factors, kEvenOdd);
    if (sign == 0) continue;
    f.add_term(mono, sign * c);
  }
  return f;
}

bool check_coeff_extraction(const HomogeneousSum& h, const Shape& nu) {
  if (nu.monomial_vanishes()) return true;  // outside the identities' scope
  auto coeff_of = [&](const Shape& mu) {
    auto it = h.coeffs.find(mu);
    return it == h.coeffs.end() ? Int(0) : it->second;
  };

  if (nu.weight() == h.t + 1) {
    // delta(H): Phi_1 preimages weighted by (n - |mu|) plus signed Psi_1 sums
    Int lhs = extract_coefficient(delta(realize(h), kEvenOdd),
                                  h.n - nu.length(), nu);
    Int rhs = 0;
    for (const Shape& mu : phi_inverse(1, h.t, nu))
      rhs += Int(h.n - mu.length()) * coeff_of(mu);
    for (const auto& [mu, u] : psi_inverse(1, h.t, nu))
      rhs += Int(leibniz_sign(mu, u)) * coeff_of(mu);
    return lhs == rhs;
  }

  if (nu.weight() == h.t + 2) {
    // x0^2 delta^2(H): Phi_2 preimages weighted by (n - |mu|) plus unsigned
    // Psi_2 sums
    auto x0 = SuperPolyZ::variable(0);
    auto lifted = mul(mul(x0, x0, kEvenOdd),
                      delta(delta(realize(h), kEvenOdd), kEvenOdd), kEvenOdd);
    Int lhs = extract_coefficient(lifted, h.n + 2 - nu.length(), nu);
    Int rhs = 0;
    for (const Shape& mu : phi_inverse(2, h.t, nu))
      rhs += Int(h.n - mu.length()) * coeff_of(mu);
    for (const auto& [mu, u] : psi_inverse(2, h.t, nu)) rhs += coeff_of(mu);
    return lhs == rhs;
  }

  throw std::invalid_argument(
      "coefficient extraction targets weight t+1 or t+2");
}

Rat delta_p_rhs(const Shape& lambda,
                const std::function<Rat(const Shape&, const Int&)>& p_lower,
                const Int& m) {
  const int r = lambda.weight();
  if (r < 2) throw std::invalid_argument("the recurrence needs weight >= 2");
  const Int at = m - 1;
  Rat rhs = 0;

  for (const Shape& mu : phi_inverse(2, r - 2, lambda))
    rhs += Rat(2 * m - 2 - mu.length()) * p_lower(mu, at);
  for (const auto& [mu, u] : psi_inverse(2, r - 2, lambda)) {
    (void)u;
    rhs += p_lower(mu, at);
  }

  const Rat last_sign = (r % 2 == 0) ? -1 : 1;  // (-1)^{r+1}
  for (const Shape& nu : phi_inverse(1, r - 1, lambda)) {
    if (nu.contains(1)) continue;
    for (const auto& [mu, u] : psi_inverse(1, r - 2, nu))
      rhs += Rat(leibniz_sign(mu, u)) * p_lower(mu, at);
    rhs += last_sign * p_lower(nu, at);
  }
  return rhs;
}

namespace {

// Gamma_{k,k-r} presented as a homogeneous sum over S^r.
HomogeneousSum row_sum(GammaTable& gammas, int k, int r) {
  HomogeneousSum h;
  h.n = k;
  h.t = r;
  for (const Shape& mu : shapes_of_weight(r)) {
    Int c = extract_coefficient(gammas.gamma(k, k - r), k - mu.length(), mu);
    if (c != 0) h.coeffs[mu] = c;
  }
  return h;
}

std::string shape_witness(const Shape& s) { return "shape " + to_string(s); }

}  // namespace

Report verify_appendix_bundle(GammaTable& gammas, int r_max,
                              const std::vector<std::int64_t>& p_list) {
  if (r_max < 2) throw std::invalid_argument("r_max must be >= 2");
  Report rep;
  rep.suite = "appendix";

  int table_max = r_max;
  for (std::int64_t p : p_list) {
    require_odd_prime(p);
    table_max = std::max(table_max, static_cast<int>(p));
  }

  // row-coefficient polynomials for every shape of weight 0..table_max;
  // extraction itself validates the fit on the held-out samples
  std::map<Shape, PLambda> P, Q;
  bool extracted = true;
  std::string extract_witness;
  for (int r = 0; r <= table_max && extracted; ++r) {
    for (const Shape& lam : shapes_of_weight(r)) {
      try {
        P.emplace(lam, extract_P(gammas, lam, r + 4));
        Q.emplace(lam, extract_Q(gammas, lam, r + 4));
      } catch (const std::domain_error& e) {
        extracted = false;
        extract_witness = shape_witness(lam) + ": " + e.what();
        break;
      }
    }
  }
  rep.add("interpolation",
          "row coefficients interpolate in the binomial basis, held-out "
          "samples at m = r+3, r+4 agree",
          extracted, extract_witness);
  if (!extracted) return rep;  // everything below reads the tables

  auto eval_P = [&P](const Shape& mu, const Int& m) {
    return Rat(P.at(mu).poly.eval(m));
  };

  for (int r = 1; r <= r_max; ++r) {
    bool deg_ok = true, packed_ok = true, lead_ok = true;
    std::string witness;
    for (const Shape& lam : shapes_of_weight(r)) {
      const auto& pp = P.at(lam).poly;
      const auto& qq = Q.at(lam).poly;
      if (pp.degree() > r || qq.degree() > r) {
        deg_ok = false;
        witness = shape_witness(lam);
      }
      if ((pp.degree() == r) != is_packed(lam)) {
        packed_ok = false;
        witness = shape_witness(lam);
      }
      if (is_packed(lam) &&
          pp.leading_monomial_coeff() != Rat(1) / factorial(r / 2)) {
        lead_ok = false;
        witness = shape_witness(lam);
      }
    }
    const std::string suffix = "/r=" + std::to_string(r);
    rep.add("degree-bound" + suffix, "deg P <= r and deg Q <= r", deg_ok,
            deg_ok ? "" : witness);
    rep.add("packed-degree" + suffix, "deg P = r exactly for the packed shape",
            packed_ok, packed_ok ? "" : witness);
    rep.add("leading-coefficient" + suffix,
            "packed leading coefficient = 1/floor(r/2)!", lead_ok,
            lead_ok ? "" : witness);
  }

  // finite-difference recurrence, for shapes whose monomial survives
  for (int r = 2; r <= std::min(r_max, 6); ++r) {
    bool ok = true;
    std::string witness;
    for (const Shape& lam : shapes_of_weight(r)) {
      if (lam.monomial_vanishes()) continue;
      const auto& samples = P.at(lam).samples;
      for (int m = 1; m < static_cast<int>(samples.size()) && ok; ++m) {
        Rat lhs = Rat(samples[static_cast<std::size_t>(m)] -
                      samples[static_cast<std::size_t>(m - 1)]);
        if (lhs != delta_p_rhs(lam, eval_P, m)) {
          ok = false;
          witness = shape_witness(lam) + " at m = " + std::to_string(m);
        }
      }
      if (!ok) break;
    }
    rep.add("difference-recurrence/r=" + std::to_string(r),
            "delta P equals the four preimage sums", ok, witness);
  }

  // row reconstruction: the shape sum rebuilds the table rows exactly
  for (int r = 1; r <= r_max; ++r) {
    bool ok = true;
    std::string witness;
    for (int m = 0; m <= r + 4 && ok; ++m) {
      SuperPolyZ even_row, odd_row;
      for (const Shape& lam : shapes_of_weight(r)) {
        HomogeneousSum he{2 * m, r, {{lam, P.at(lam).samples[static_cast<std::size_t>(m)]}}};
        HomogeneousSum ho{2 * m + 1, r, {{lam, Q.at(lam).samples[static_cast<std::size_t>(m)]}}};
        even_row += realize(he);
        odd_row += realize(ho);
      }
      if (even_row != gammas.gamma(2 * m, 2 * m - r) ||
          odd_row != gammas.gamma(2 * m + 1, 2 * m + 1 - r)) {
        ok = false;
        witness = "m = " + std::to_string(m);
      }
    }
    rep.add("row-reconstruction/r=" + std::to_string(r),
            "shape sums rebuild both rows", ok, witness);
  }

  // packed-shape propagation through the preimage maps
  for (int r = 2; r <= r_max; ++r) {
    bool ok = true;
    std::string witness;
    const Shape lower2 = packed_shape(r - 2);
    const Shape lower1 = packed_shape(r - 1);
    for (const Shape& lam : shapes_of_weight(r)) {
      const auto pre2 = phi_inverse(2, r - 2, lam);
      const bool hits2 =
          std::find(pre2.begin(), pre2.end(), lower2) != pre2.end();
      if (hits2 && !is_packed(lam)) {
        ok = false;
        witness = shape_witness(lam);
      }
      bool hits1 = false;
      for (const Shape& nu : phi_inverse(1, r - 1, lam))
        if (!nu.contains(1) && nu == lower1) hits1 = true;
      if (r % 2 == 0 && hits1) {
        // the packed (r-1)-shape contains 1, so the 1-free restriction
        // excludes it for even r
        ok = false;
        witness = shape_witness(lam);
      }
      if (r % 2 == 1 && hits1 && !is_packed(lam)) {
        ok = false;
        witness = shape_witness(lam);
      }
    }
    rep.add("packed-propagation/r=" + std::to_string(r),
            "packed preimages force packed images", ok, witness);
  }

  // direct-vs-preimage coefficient extraction on genuine table rows
  for (int t = 1; t <= std::min(r_max, 3); ++t) {
    bool ok = true;
    std::string witness;
    HomogeneousSum h = row_sum(gammas, 2 * t + 3, t);
    for (int up = 1; up <= 2 && ok; ++up) {
      for (const Shape& nu : shapes_of_weight(t + up)) {
        if (!check_coeff_extraction(h, nu)) {
          ok = false;
          witness = shape_witness(nu);
          break;
        }
      }
    }
    rep.add("coefficient-extraction/t=" + std::to_string(t),
            "direct extraction equals the preimage sums on a table row", ok,
            witness);
  }

  for (std::int64_t p : p_list) {
    bool cong_ok = true;
    std::string witness;
    for (const Shape& lam : shapes_of_weight(static_cast<int>(p))) {
      Int value = P.at(lam).samples[static_cast<std::size_t>(p)];
      if (int_mod_p(value, p).value() != 0) {
        cong_ok = false;
        witness = shape_witness(lam);
      }
    }
    rep.add("mod-p-values/p=" + std::to_string(p),
            "P(p) = 0 mod p for every shape of weight p", cong_ok, witness);

    SuperPolyZ row;
    for (const Shape& lam : shapes_of_weight(static_cast<int>(p))) {
      HomogeneousSum h{static_cast<int>(2 * p), static_cast<int>(p),
                       {{lam, P.at(lam).samples[static_cast<std::size_t>(p)]}}};
      row += realize(h);
    }
    const auto& middle = gammas.gamma(static_cast<int>(2 * p),
                                      static_cast<int>(p));
    rep.add("middle-reconstruction/p=" + std::to_string(p),
            "the shape sum at m = p rebuilds the middle entry exactly",
            row == middle);
    rep.add("middle-vanishing/p=" + std::to_string(p),
            "every coefficient of the middle entry vanishes mod p",
            divisible_by(middle, p));
  }

  return rep;
}

}  // namespace rinehart
