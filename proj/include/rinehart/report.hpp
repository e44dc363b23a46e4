#pragma once
// Structured pass/fail reporting shared by the verification suites and the
// command-line driver.  A claim records one checked identity; a report is an
// ordered list of claims under a stable suite name, together with the seed
// that produced any sampled data.  Rendering is deterministic: repeated runs
// with the same inputs serialize byte-identically.

#include <cstdint>
#include <string>
#include <vector>

namespace rinehart {

enum class Verdict { pass, fail, not_applicable };

std::string to_string(Verdict v);

struct Claim {
  std::string id;        // stable slug, unique within its suite
  std::string identity;  // what is being checked, in plain notation
  Verdict verdict = Verdict::fail;
  std::string witness;   // counterexample or context, empty when unneeded

  bool ok() const { return verdict != Verdict::fail; }
  bool operator==(const Claim&) const = default;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Claim> claims;

  Claim& add(std::string id, std::string identity, bool ok,
             std::string witness = "");
  Claim& add_na(std::string id, std::string identity, std::string note);
  bool all_ok() const;
  std::size_t fail_count() const;
};

// Renderers.  JSON uses alphabetically sorted keys throughout.
std::string to_text(const Report& r);
std::string to_csv(const Report& r);
std::string to_json_string(const Report& r);

}  // namespace rinehart
