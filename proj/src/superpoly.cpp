#include "rinehart/superpoly.hpp"

#include <cctype>
#include <sstream>

namespace rinehart {

std::string ParityCase::name() const {
  auto n = [](Parity q) { return q == Parity::even ? "even" : "odd"; };
  return std::string(n(x0)) + "_" + n(delta);
}

ParityCase ParityCase::parse(const std::string& s) {
  std::string t;
  for (char ch : s) t += (ch == '/' || ch == '-') ? '_' : static_cast<char>(std::tolower(ch));
  for (const auto& pc : kAllParityCases)
    if (t == pc.name()) return pc;
  throw std::invalid_argument("unknown parity case: " + s +
                              " (expected e.g. even/odd)");
}

std::pair<int, Monomial> canonicalize(std::vector<std::pair<int, int>> f,
                                      const ParityCase& pc) {
  for (auto& [v, e] : f) {
    if (e < 0) throw std::invalid_argument("canonicalize: negative exponent");
    if (v < 0) throw std::invalid_argument("canonicalize: negative variable");
  }
  std::erase_if(f, [](const std::pair<int, int>& b) { return b.second == 0; });

  int sign = 1;
  for (std::size_t i = 1; i < f.size(); ++i) {
    for (std::size_t j = i; j > 0 && f[j].first < f[j - 1].first; --j) {
      bool odd_a = (f[j].second * static_cast<int>(pc.var(f[j].first))) % 2;
      bool odd_b =
          (f[j - 1].second * static_cast<int>(pc.var(f[j - 1].first))) % 2;
      if (odd_a && odd_b) sign = -sign;
      std::swap(f[j], f[j - 1]);
    }
  }

  Monomial m;
  for (auto& b : f) {
    if (!m.factors.empty() && m.factors.back().first == b.first)
      m.factors.back().second += b.second;
    else
      m.factors.push_back(b);
  }
  for (auto& [v, e] : m.factors)
    if (pc.var(v) == Parity::odd && e >= 2) return {0, Monomial{}};
  return {sign, std::move(m)};
}

std::string to_string(const Monomial& m) {
  if (m.factors.empty()) return "1";
  std::string s;
  for (auto& [v, e] : m.factors) {
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

template <class C>
std::string poly_to_string(const BasicSuperPoly<C>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : f.terms) {
    const bool neg = c < 0;
    C mag = neg ? C(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (m.factors.empty())
      out << mag;
    else if (mag == 1)
      out << to_string(m);
    else
      out << mag << "*" << to_string(m);
  }
  return out.str();
}

struct Scanner {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) throw std::invalid_argument("parse_poly: expected digits at offset " +
                                            std::to_string(b) + " in '" + s + "'");
    return s.substr(b, i - b);
  }
};

}  // namespace

std::string to_string(const SuperPolyZ& f) { return poly_to_string(f); }
std::string to_string(const SuperPolyQ& f) { return poly_to_string(f); }

SuperPolyQ parse_poly(const std::string& text, const ParityCase& pc) {
  SuperPolyQ poly;
  Scanner sc{text};
  if (sc.eof()) throw std::invalid_argument("parse_poly: empty input");

  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (sc.accept('+')) {
      if (first) throw std::invalid_argument("parse_poly: leading '+'");
    } else if (!first) {
      throw std::invalid_argument("parse_poly: expected '+' or '-' at offset " +
                                  std::to_string(sc.i));
    }
    first = false;

    Rat coeff(sign);
    std::vector<std::pair<int, int>> factors;
    bool expect_factor = true;
    bool saw_any = false;
    while (expect_factor) {
      if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        Int num(sc.digits());
        Int den(1);
        if (sc.accept('/')) den = Int(sc.digits());
        coeff *= make_rat(num, den);
      } else if (sc.peek() == 'x') {
        sc.accept('x');
        int v = std::stoi(sc.digits());
        int e = 1;
        if (sc.accept('^')) e = std::stoi(sc.digits());
        factors.emplace_back(v, e);
      } else {
        throw std::invalid_argument("parse_poly: expected a coefficient or xN at offset " +
                                    std::to_string(sc.i));
      }
      saw_any = true;
      expect_factor = sc.accept('*');
    }
    if (!saw_any) throw std::invalid_argument("parse_poly: empty term");

    auto [ksign, m] = canonicalize(std::move(factors), pc);
    if (ksign != 0) poly.add_term(std::move(m), Rat(ksign) * coeff);
  }
  return poly;
}

}  // namespace rinehart
