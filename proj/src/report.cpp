#include "rinehart/report.hpp"

#include <sstream>

#include "json.hpp"

namespace rinehart {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "fail";
}

Claim& Report::add(std::string id, std::string identity, bool ok,
                   std::string witness) {
  claims.push_back(Claim{std::move(id), std::move(identity),
                         ok ? Verdict::pass : Verdict::fail,
                         std::move(witness)});
  return claims.back();
}

Claim& Report::add_na(std::string id, std::string identity, std::string note) {
  claims.push_back(Claim{std::move(id), std::move(identity),
                         Verdict::not_applicable, std::move(note)});
  return claims.back();
}

bool Report::all_ok() const { return fail_count() == 0; }

std::size_t Report::fail_count() const {
  std::size_t n = 0;
  for (const auto& c : claims)
    if (!c.ok()) ++n;
  return n;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "suite: " << r.suite << "  (seed " << r.seed << ")\n";
  for (const auto& c : r.claims) {
    out << "  [" << to_string(c.verdict) << "] " << c.id << ": " << c.identity
        << "\n";
    if (!c.witness.empty()) out << "      " << c.witness << "\n";
  }
  out << r.claims.size() << " claims, " << r.fail_count() << " failed\n";
  return out.str();
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  q += '"';
  return q;
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "suite,seed,id,identity,verdict,witness\n";
  for (const auto& c : r.claims) {
    out << csv_quote(r.suite) << ',' << r.seed << ',' << csv_quote(c.id) << ','
        << csv_quote(c.identity) << ',' << to_string(c.verdict) << ','
        << csv_quote(c.witness) << '\n';
  }
  return out.str();
}

std::string to_json_string(const Report& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["claims"] = nlohmann::json::array();
  for (const auto& c : r.claims) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["identity"] = c.identity;
    jc["verdict"] = to_string(c.verdict);
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["claims"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace rinehart
