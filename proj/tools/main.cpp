// Command-line driver.  One subcommand per verification suite or table
// generator.  Everything written to stdout is a pure function of the argument
// vector (seeds included), so repeated runs are byte-identical; nothing
// timing- or environment-dependent is printed.
//
// Exit codes: 0 success, 1 a verification failed (the report is still
// printed) or the input's mathematics is inconsistent, 2 usage error
// (unknown flags or names, unreadable or malformed documents, bounds outside
// the documented safe ranges without --force).

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rinehart/bundle_io.hpp"
#include "rinehart/coeffs.hpp"
#include "rinehart/envelope.hpp"
#include "rinehart/lierinehart.hpp"
#include "rinehart/report.hpp"
#include "rinehart/scalar.hpp"
#include "rinehart/shapes.hpp"
#include "rinehart/smash.hpp"

namespace {

using namespace rinehart;

// User-fixable conditions beyond what CLI11 catches; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_p_list(const std::vector<std::int64_t>& ps) {
  if (ps.empty()) throw UsageError("--p expects at least one odd prime");
  for (auto p : ps)
    if (!is_odd_prime(p))
      throw UsageError("--p expects odd primes, got " + std::to_string(p));
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  q += '"';
  return q;
}

// ------------------------------------------------------------- reports -----

// Several suites may be emitted together: text blocks are separated by a
// blank line, csv rows share the single header, json becomes an array.
void print_reports(const std::vector<Report>& rs, const std::string& fmt) {
  if (fmt == "json") {
    if (rs.size() == 1) {
      std::cout << to_json_string(rs[0]);
      return;
    }
    auto arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(nlohmann::json::parse(to_json_string(r)));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  bool first = true;
  for (const auto& r : rs) {
    if (fmt == "csv") {
      std::string body = to_csv(r);
      if (!first) body.erase(0, body.find('\n') + 1);
      std::cout << body;
    } else {
      if (!first) std::cout << "\n";
      std::cout << to_text(r);
    }
    first = false;
  }
}

int reports_exit(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.all_ok()) return 1;
  return 0;
}

// ------------------------------------------------------ bundle sources -----

// Shared source selection for the verify-* and pbw subcommands: a named
// builtin with integer parameters, or a JSON document from disk.
struct BundleArgs {
  std::string builtin;
  std::vector<std::string> params;  // name=value
  std::string input;
  std::int64_t p = 3;
};

std::map<std::string, std::int64_t> parse_params(
    const std::vector<std::string>& kvs) {
  std::map<std::string, std::int64_t> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects name=value, got '" + kv + "'");
    const std::string val = kv.substr(eq + 1);
    errno = 0;
    char* end = nullptr;
    std::int64_t v = std::strtoll(val.c_str(), &end, 10);
    if (errno != 0 || end == val.c_str() || *end != '\0')
      throw UsageError("--param value must be an integer, got '" + kv + "'");
    out[kv.substr(0, eq)] = v;
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ResolvedBundle {
  LRData data;
  std::optional<Representation> rep;
};

ResolvedBundle resolve_bundle(const BundleArgs& a) {
  if (!a.input.empty()) {
    const std::string text = slurp(a.input);
    if (detect_document(text) != DocumentKind::bundle)
      throw UsageError(a.input +
                       " is not a bundle document (base/lie/action/anchor)");
    LoadedBundle lb = bundle_from_json(text);
    return {std::move(lb.data), std::move(lb.rep)};
  }
  if (!is_odd_prime(a.p))
    throw UsageError("--p expects an odd prime, got " + std::to_string(a.p));
  BuiltinBundle b = builtin_bundle(a.builtin, a.p, parse_params(a.params));
  return {std::move(b.data), std::move(b.rep)};
}

// The pbw commands also accept a bare bracket document, enveloped over the
// ground field; --lie-only does the same restriction for full bundles.
RewriteSystem resolve_system(const BundleArgs& a, bool lie_only) {
  if (!a.input.empty()) {
    const std::string text = slurp(a.input);
    switch (detect_document(text)) {
      case DocumentKind::bracket:
        return RewriteSystem::for_lie(lie_from_json(text));
      case DocumentKind::bundle: {
        LoadedBundle lb = bundle_from_json(text);
        return lie_only ? RewriteSystem::for_lie(lb.data.lie())
                        : RewriteSystem::for_lie_rinehart(lb.data);
      }
      case DocumentKind::algebra:
        break;
    }
    throw UsageError(a.input + " has no Lie block to envelope");
  }
  if (!is_odd_prime(a.p))
    throw UsageError("--p expects an odd prime, got " + std::to_string(a.p));
  BuiltinBundle b = builtin_bundle(a.builtin, a.p, parse_params(a.params));
  return lie_only ? RewriteSystem::for_lie(b.data.lie())
                  : RewriteSystem::for_lie_rinehart(b.data);
}

// ------------------------------------------------------------- tables ------

int run_lambda_table(const std::vector<std::int64_t>& ps, bool force,
                     const std::string& fmt, std::uint64_t seed) {
  require_p_list(ps);
  for (auto p : ps)
    if (p > 100 && !force)
      throw UsageError("p beyond 100 needs --force (quadratic table growth)");

  std::vector<LambdaVector> cols;
  cols.reserve(ps.size());
  for (auto p : ps) cols.push_back(lambda_vector(p));  // both routes must agree
  std::size_t rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.entries.size());

  if (fmt == "json") {
    nlohmann::json j;
    j["p"] = ps;
    j["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rows; ++i) {
      nlohmann::json row;
      row["lambda"] = i;
      row["values"] = nlohmann::json::array();
      for (const auto& c : cols) {
        if (i < c.entries.size())
          row["values"].push_back(c.entries[i].value());
        else
          row["values"].push_back(nullptr);
      }
      j["rows"].push_back(row);
    }
    j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << "lambda";
    for (auto p : ps) std::cout << ",p=" << p;
    std::cout << "\n";
    for (std::size_t i = 0; i < rows; ++i) {
      std::cout << i;
      for (const auto& c : cols) {
        std::cout << ',';
        if (i < c.entries.size()) std::cout << c.entries[i].value();
      }
      std::cout << "\n";
    }
    std::cout << "# seed: " << seed << "\n";
  } else {
    const int labw =
        static_cast<int>(std::string("lambda_").size() +
                         std::to_string(rows == 0 ? 0 : rows - 1).size());
    std::vector<int> width;
    for (auto p : ps)
      width.push_back(static_cast<int>(std::to_string(p).size()) + 4);
    std::cout << std::string(labw, ' ');
    for (std::size_t c = 0; c < ps.size(); ++c)
      std::cout << std::setw(width[c]) << ("p=" + std::to_string(ps[c]));
    std::cout << "\n";
    for (std::size_t i = 0; i < rows; ++i) {
      std::cout << std::left << std::setw(labw)
                << ("lambda_" + std::to_string(i)) << std::right;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::string cell = i < cols[c].entries.size()
                               ? std::to_string(cols[c].entries[i].value())
                               : "-";
        std::cout << std::setw(width[c]) << cell;
      }
      std::cout << "\n";
    }
    std::cout << "seed: " << seed << "\n";
  }
  return 0;
}

int run_mu_table(int kmax, bool simplified, bool force, const std::string& fmt,
                 std::uint64_t seed) {
  if (kmax < 3) throw UsageError("--kmax must be at least 3");
  if (kmax > 64 && !force) throw UsageError("--kmax beyond 64 needs --force");

  MuTable table(kmax);
  for (int k = 4; k <= kmax; ++k)  // silent cross-check of the closed form
    for (int i = 0; i <= k - 2; ++i)
      if (table.mu(k, i) != mu_closed(k, i)) {
        std::cerr << "closed form disagrees at mu(" << k << "," << i << ")\n";
        return 1;
      }

  const std::string kind = simplified ? "simplified" : "mu";
  std::vector<std::vector<Rat>> values;
  for (int k = 3; k <= kmax; ++k) {
    if (simplified) {
      values.push_back(simplified_coefficients(table, k));
    } else {
      std::vector<Rat> row;
      for (int i = 0; i <= k - 2; ++i) row.push_back(table.mu(k, i));
      values.push_back(std::move(row));
    }
  }

  if (fmt == "json") {
    nlohmann::json j;
    j["kind"] = kind;
    j["kmax"] = kmax;
    j["rows"] = nlohmann::json::array();
    for (int k = 3; k <= kmax; ++k) {
      nlohmann::json row;
      row["k"] = k;
      row["values"] = nlohmann::json::array();
      for (const auto& q : values[static_cast<std::size_t>(k - 3)])
        row["values"].push_back(q.get_str());
      j["rows"].push_back(row);
    }
    j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << "k,i,value\n";
    for (int k = 3; k <= kmax; ++k) {
      const auto& row = values[static_cast<std::size_t>(k - 3)];
      for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << k << ',' << i << ',' << row[i].get_str() << "\n";
    }
    std::cout << "# seed: " << seed << "\n";
  } else {
    for (int k = 3; k <= kmax; ++k) {
      std::cout << kind << "[" << k << "] =";
      for (const auto& q : values[static_cast<std::size_t>(k - 3)])
        std::cout << ' ' << q.get_str();
      std::cout << "\n";
    }
    std::cout << "seed: " << seed << "\n";
  }
  return 0;
}

int run_gamma(GammaTable& table, bool single, int k, int j, int kmax,
              const std::string& fmt, std::uint64_t seed) {
  const std::string cs = table.parity_case().name();
  std::vector<std::pair<std::pair<int, int>, std::string>> entries;
  if (single) {
    entries.push_back({{k, j}, to_string(table.gamma(k, j))});
  } else {
    for (int kk = 1; kk <= kmax; ++kk)
      for (int jj = 1; jj <= kk; ++jj)
        entries.push_back({{kk, jj}, to_string(table.gamma(kk, jj))});
  }

  if (fmt == "json") {
    if (single) {
      nlohmann::json j1;
      j1["case"] = cs;
      j1["k"] = entries[0].first.first;
      j1["j"] = entries[0].first.second;
      j1["polynomial"] = entries[0].second;
      j1["seed"] = seed;
      std::cout << j1.dump(2) << "\n";
    } else {
      nlohmann::json jt;
      jt["case"] = cs;
      jt["kmax"] = kmax;
      jt["entries"] = nlohmann::json::array();
      for (const auto& [kj, poly] : entries) {
        nlohmann::json e;
        e["k"] = kj.first;
        e["j"] = kj.second;
        e["polynomial"] = poly;
        jt["entries"].push_back(e);
      }
      jt["seed"] = seed;
      std::cout << jt.dump(2) << "\n";
    }
  } else if (fmt == "csv") {
    std::cout << "k,j,case,polynomial\n";
    for (const auto& [kj, poly] : entries)
      std::cout << kj.first << ',' << kj.second << ',' << cs << ','
                << csv_cell(poly) << "\n";
    std::cout << "# seed: " << seed << "\n";
  } else {
    for (const auto& [kj, poly] : entries)
      std::cout << "Gamma[" << kj.first << "," << kj.second << "] (" << cs
                << ") = " << poly << "\n";
    std::cout << "seed: " << seed << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- suites -----

int run_verify_appendix(std::vector<std::int64_t> ps, int rmax, bool force,
                        const std::string& fmt) {
  require_p_list(ps);
  for (auto p : ps)
    if (p > 5 && !force)
      throw UsageError("p beyond 5 needs --force (the row tables get large)");
  if (rmax < 2) throw UsageError("--rmax must be at least 2");
  if (rmax > 7 && !force) throw UsageError("--rmax beyond 7 needs --force");

  GammaTable gammas(kEvenOdd);
  Report r = verify_appendix_bundle(gammas, rmax, ps);
  print_reports({r}, fmt);
  return reports_exit({r});
}

int run_verify_lr(const BundleArgs& a, int samples, std::uint64_t seed,
                  const std::string& fmt) {
  ResolvedBundle b = resolve_bundle(a);
  std::vector<Report> rs;
  rs.push_back(check_lr(b.data));
  if (b.data.lie().has_pmap()) {
    rs.push_back(check_restricted_lr(b.data, samples, seed));
    if (b.rep) rs.push_back(check_representation(b.data, *b.rep, samples, seed));
  }
  print_reports(rs, fmt);
  return reports_exit(rs);
}

int run_verify_hochschild(const BundleArgs& a, int samples, std::uint64_t seed,
                          const std::string& fmt) {
  ResolvedBundle b = resolve_bundle(a);
  if (!b.rep)
    throw UsageError("the operator identities need a module block");
  Report r = check_hochschild_theorem(b.data, *b.rep, samples, seed);
  print_reports({r}, fmt);
  return reports_exit({r});
}

int run_verify_semidirect(const BundleArgs& a, int samples, std::uint64_t seed,
                          const std::string& fmt) {
  ResolvedBundle b = resolve_bundle(a);
  if (!b.rep)
    throw UsageError("the semi-direct product needs a module block");
  SemidirectResult sr = build_semidirect(b.data, *b.rep, samples, seed);
  print_reports({sr.report}, fmt);
  return reports_exit({sr.report});
}

// ----------------------------------------------------------------- pbw -----

int run_pbw_nf(const RewriteSystem& sys, const std::string& word,
               const std::string& fmt, std::uint64_t seed) {
  const PBWElement nf = sys.normal_form(sys.parse(word));
  const std::string formatted = sys.format(nf);
  if (fmt == "json") {
    nlohmann::json j;
    j["input"] = word;
    j["normal-form"] = formatted;
    j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << "input,normal_form\n"
              << csv_cell(word) << ',' << csv_cell(formatted) << "\n"
              << "# seed: " << seed << "\n";
  } else {
    std::cout << "input: " << word << "\n"
              << "normal form: " << formatted << "\n"
              << "seed: " << seed << "\n";
  }
  return 0;
}

int run_pbw_dimension(const RewriteSystem& sys, const std::string& fmt,
                      std::uint64_t seed) {
  const std::size_t words = sys.pbw_words().size();
  const std::size_t base = sys.bundle().base().dim();
  const std::size_t lie = sys.bundle().lie().dim();
  if (fmt == "json") {
    nlohmann::json j;
    j["base-dim"] = base;
    j["lie-dim"] = lie;
    j["spanning-words"] = words;
    j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << "base_dim,lie_dim,spanning_words\n"
              << base << ',' << lie << ',' << words << "\n"
              << "# seed: " << seed << "\n";
  } else {
    std::cout << "base dim: " << base << "\n"
              << "lie dim: " << lie << "\n"
              << "spanning words: " << words << "\n"
              << "seed: " << seed << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tables and verification suites for graded bracket structures "
      "with p-th power maps"};
  app.require_subcommand(1);

  int rc = 0;
  std::string fmt = "text";
  std::uint64_t seed = 1;
  bool force = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "seed for sampled checks; echoed in output")
        ->capture_default_str();
  };
  auto add_force = [&](CLI::App* sub) {
    sub->add_flag("--force", force, "allow bounds beyond the safe ranges");
  };
  auto add_source = [&](CLI::App* sub, BundleArgs& a) {
    auto* in = sub->add_option("--input", a.input,
                               "JSON document to load instead of a builtin");
    sub->add_option("--builtin", a.builtin,
                    "builtin name: derivations, witt, example-2-1, example-2-2")
        ->capture_default_str()
        ->excludes(in);
    sub->add_option("--p", a.p, "odd prime modulus for the builtin")
        ->capture_default_str()
        ->excludes(in);
    sub->add_option("--param", a.params,
                    "builtin parameter as name=value (repeatable)")
        ->excludes(in);
  };

  // lambda-table ------------------------------------------------------------
  std::vector<std::int64_t> lambda_ps{3, 5, 7};
  auto* c_lambda = app.add_subcommand(
      "lambda-table", "reduced coefficient table, rows lambda_i, columns p");
  c_lambda->add_option("--p", lambda_ps, "comma-separated odd primes")
      ->delimiter(',')
      ->capture_default_str();
  add_format(c_lambda);
  add_seed(c_lambda);
  add_force(c_lambda);
  c_lambda->callback(
      [&] { rc = run_lambda_table(lambda_ps, force, fmt, seed); });

  // mu-table ----------------------------------------------------------------
  int mu_kmax = 10;
  bool mu_simplified = false;
  auto* c_mu = app.add_subcommand(
      "mu-table", "rational coefficient rows mu_{k,0..k-2}, cross-checked "
                  "against the closed form");
  c_mu->add_option("--kmax", mu_kmax, "largest row index k")
      ->capture_default_str();
  c_mu->add_flag("--simplified", mu_simplified,
                 "emit the pair-combined presentation instead");
  add_format(c_mu);
  add_seed(c_mu);
  add_force(c_mu);
  c_mu->callback(
      [&] { rc = run_mu_table(mu_kmax, mu_simplified, force, fmt, seed); });

  // gamma ---------------------------------------------------------------
  int g_k = 0, g_j = 0, g_kmax = 0;
  std::string g_case = "even_odd";
  auto* c_gamma = app.add_subcommand(
      "gamma", "coefficient polynomials of (x0 delta)^k, one entry or the "
               "whole table");
  auto* opt_k = c_gamma->add_option("--k", g_k, "power k");
  auto* opt_j = c_gamma->add_option("--j", g_j,
                                    "delta degree j (zero outside 1..k)");
  auto* opt_kmax =
      c_gamma->add_option("--kmax", g_kmax, "emit the full table up to k");
  opt_k->needs(opt_j);
  opt_j->needs(opt_k);
  opt_kmax->excludes(opt_k)->excludes(opt_j);
  c_gamma->add_option("--case", g_case, "parities of x0 and delta, e.g. even/odd")
      ->capture_default_str();
  add_format(c_gamma);
  add_seed(c_gamma);
  add_force(c_gamma);
  c_gamma->callback([&] {
    const bool single = opt_k->count() > 0;
    if (!single && opt_kmax->count() == 0)
      throw UsageError("pass --k with --j, or --kmax for the whole table");
    const int reach = single ? g_k : g_kmax;
    if (reach < 0) throw UsageError("k must be nonnegative");
    if (!single && g_kmax < 1) throw UsageError("--kmax must be at least 1");
    if (reach > 16 && !force)
      throw UsageError("k beyond 16 needs --force (the polynomials explode)");
    GammaTable table(ParityCase::parse(g_case));
    rc = run_gamma(table, single, g_k, g_j, g_kmax, fmt, seed);
  });

  // verify-appendix -----------------------------------------------------
  std::vector<std::int64_t> ap_ps{3};
  int ap_rmax = 7;
  auto* c_appendix = app.add_subcommand(
      "verify-appendix", "shape-polynomial suite: interpolation, degrees, "
                         "packed leading terms, recurrence, congruences");
  c_appendix->add_option("--p", ap_ps, "comma-separated odd primes")
      ->delimiter(',')
      ->capture_default_str();
  c_appendix->add_option("--rmax", ap_rmax, "largest shape weight")
      ->capture_default_str();
  add_format(c_appendix);
  add_force(c_appendix);
  c_appendix->callback(
      [&] { rc = run_verify_appendix(ap_ps, ap_rmax, force, fmt); });

  // verify-lr -----------------------------------------------------------
  BundleArgs lr_args;
  lr_args.builtin = "example-2-1";
  int lr_samples = 200;
  auto* c_lr = app.add_subcommand(
      "verify-lr", "compatibility and p-th power axioms of a bundle; module "
                   "axioms too when a representation is present");
  add_source(c_lr, lr_args);
  c_lr->add_option("--samples", lr_samples, "random homogeneous samples")
      ->capture_default_str();
  add_format(c_lr);
  add_seed(c_lr);
  c_lr->callback([&] { rc = run_verify_lr(lr_args, lr_samples, seed, fmt); });

  // verify-hochschild ---------------------------------------------------
  BundleArgs ho_args;
  ho_args.builtin = "witt";
  int ho_samples = 200;
  auto* c_ho = app.add_subcommand(
      "verify-hochschild", "operator identities of a module, all four parity "
                           "cases, bases plus seeded samples");
  add_source(c_ho, ho_args);
  c_ho->add_option("--samples", ho_samples, "random homogeneous samples")
      ->capture_default_str();
  add_format(c_ho);
  add_seed(c_ho);
  c_ho->callback(
      [&] { rc = run_verify_hochschild(ho_args, ho_samples, seed, fmt); });

  // verify-semidirect ---------------------------------------------------
  BundleArgs sd_args;
  sd_args.builtin = "example-2-2";
  int sd_samples = 100;
  auto* c_sd = app.add_subcommand(
      "verify-semidirect", "semi-direct product of a bundle with a module: "
                           "p-map assembly, center, extended-bundle axioms");
  add_source(c_sd, sd_args);
  c_sd->add_option("--samples", sd_samples, "random trials per identity")
      ->capture_default_str();
  add_format(c_sd);
  add_seed(c_sd);
  c_sd->callback(
      [&] { rc = run_verify_semidirect(sd_args, sd_samples, seed, fmt); });

  // pbw -----------------------------------------------------------------
  BundleArgs pbw_args;
  pbw_args.builtin = "example-2-1";
  bool lie_only = false;
  auto* c_pbw = app.add_subcommand(
      "pbw", "normal forms and spanning words of the enveloping algebra");
  c_pbw->require_subcommand(1);
  auto add_pbw_source = [&](CLI::App* sub) {
    add_source(sub, pbw_args);
    sub->add_flag("--lie-only", lie_only,
                  "envelope only the Lie part, over the ground field");
  };

  std::string pbw_word;
  auto* c_nf = c_pbw->add_subcommand("nf", "normal form of one word");
  add_pbw_source(c_nf);
  c_nf->add_option("--word", pbw_word, "letters separated by spaces, ^ for "
                                       "powers, e.g. \"x3 x1 e2\"")
      ->required();
  add_format(c_nf);
  add_seed(c_nf);
  c_nf->callback([&] {
    rc = run_pbw_nf(resolve_system(pbw_args, lie_only), pbw_word, fmt, seed);
  });

  int cf_words = 1000, cf_maxlen = 6;
  auto* c_cf = c_pbw->add_subcommand(
      "confluence", "sampled reduction-order independence, filtration, and "
                    "associativity");
  add_pbw_source(c_cf);
  c_cf->add_option("--words", cf_words, "number of sampled words")
      ->capture_default_str();
  c_cf->add_option("--maxlen", cf_maxlen, "largest sampled word length")
      ->capture_default_str();
  add_format(c_cf);
  add_seed(c_cf);
  add_force(c_cf);
  c_cf->callback([&] {
    if (cf_words < 1) throw UsageError("--words must be positive");
    if (cf_maxlen < 1) throw UsageError("--maxlen must be positive");
    if (cf_maxlen > 8 && !force)
      throw UsageError("--maxlen beyond 8 needs --force");
    RewriteSystem sys = resolve_system(pbw_args, lie_only);
    Report r = confluence_report(sys, cf_words, cf_maxlen, seed);
    print_reports({r}, fmt);
    rc = reports_exit({r});
  });

  auto* c_rel = c_pbw->add_subcommand(
      "relations", "defining relations: unit, module, anchor, powers, squares");
  add_pbw_source(c_rel);
  add_format(c_rel);
  add_seed(c_rel);
  c_rel->callback([&] {
    Report r = check_up_relations(resolve_system(pbw_args, lie_only));
    print_reports({r}, fmt);
    rc = reports_exit({r});
  });

  auto* c_tab = c_pbw->add_subcommand(
      "table", "closure of the spanning words under multiplication");
  add_pbw_source(c_tab);
  add_format(c_tab);
  add_seed(c_tab);
  c_tab->callback([&] {
    Report r = check_pbw_table(resolve_system(pbw_args, lie_only));
    print_reports({r}, fmt);
    rc = reports_exit({r});
  });

  auto* c_dim = c_pbw->add_subcommand(
      "dimension", "count of spanning words and alphabet sizes");
  add_pbw_source(c_dim);
  add_format(c_dim);
  add_seed(c_dim);
  c_dim->callback([&] {
    rc = run_pbw_dimension(resolve_system(pbw_args, lie_only), fmt, seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification aborted: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
