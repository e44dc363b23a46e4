#include "rinehart/bundle_io.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"

namespace rinehart {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw BadBundle(msg); }

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) bad("malformed JSON");
  if (!doc.is_object()) bad("document must be a JSON object");
  return doc;
}

// Strict key set: anything unexpected is an error, not a silent pass.
void check_keys(const json& obj, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) bad("unknown key \"" + key + "\"");
  }
}

std::int64_t parse_modulus(const json& doc) {
  if (!doc.contains("p") || !doc["p"].is_number_integer())
    bad("missing integer \"p\"");
  const auto p = doc["p"].get<std::int64_t>();
  if (p < 2) bad("modulus must be at least 2");
  return p;
}

json basis_to_json(const std::vector<std::string>& names,
                   const std::vector<Parity>& parities) {
  json out = json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    out.push_back(json{{"name", names[i]},
                       {"parity", parities[i] == Parity::even ? "even"
                                                              : "odd"}});
  return out;
}

void basis_from_json(const json& arr, std::vector<std::string>& names,
                     std::vector<Parity>& parities) {
  if (!arr.is_array()) bad("\"basis\" must be an array");
  for (const json& entry : arr) {
    if (!entry.is_object()) bad("basis entries must be objects");
    check_keys(entry, {"name", "parity"});
    if (!entry.contains("name") || !entry["name"].is_string() ||
        !entry.contains("parity") || !entry["parity"].is_string())
      bad("basis entries need \"name\" and \"parity\" strings");
    const std::string parity = entry["parity"].get<std::string>();
    if (parity != "even" && parity != "odd")
      bad("parity must be \"even\" or \"odd\", got \"" + parity + "\"");
    names.push_back(entry["name"].get<std::string>());
    parities.push_back(parity == "even" ? Parity::even : Parity::odd);
  }
}

json vec_to_json(const FpVec& v) {
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back(json{k, v[k].value()});
  return out;
}

FpVec vec_from_json(const json& arr, std::size_t dim, std::int64_t p,
                    const std::string& where) {
  if (!arr.is_array()) bad(where + " must be an array of [index, coeff]");
  FpVec out = fp_zero_vec(dim, p);
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      bad(where + " entries must be [index, coeff] pairs");
    const auto k = entry[0].get<std::int64_t>();
    if (k < 0 || static_cast<std::size_t>(k) >= dim)
      bad(where + " index " + std::to_string(k) + " out of range");
    out[static_cast<std::size_t>(k)] += Fp(entry[1].get<std::int64_t>(), p);
  }
  return out;
}

json table_to_json(const std::vector<std::vector<FpVec>>& table) {
  json out = json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table[i].size(); ++j)
      if (!is_zero(table[i][j]))
        out.push_back(json{i, j, vec_to_json(table[i][j])});
  return out;
}

std::vector<std::vector<FpVec>> table_from_json(const json& arr,
                                                std::size_t rows,
                                                std::size_t cols,
                                                std::size_t dim,
                                                std::int64_t p,
                                                const std::string& where) {
  if (!arr.is_array()) bad(where + " must be an array");
  std::vector<std::vector<FpVec>> out(
      rows, std::vector<FpVec>(cols, fp_zero_vec(dim, p)));
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      bad(where + " entries must be [i, j, sparse-element] triples");
    const auto i = entry[0].get<std::int64_t>();
    const auto j = entry[1].get<std::int64_t>();
    if (i < 0 || static_cast<std::size_t>(i) >= rows || j < 0 ||
        static_cast<std::size_t>(j) >= cols)
      bad(where + " position (" + std::to_string(i) + ", " +
          std::to_string(j) + ") out of range");
    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        vec_from_json(entry[2], dim, p, where);
  }
  return out;
}

json matrix_to_json(const FpMat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out.push_back(json{r, c, m.at(r, c).value()});
  return out;
}

FpMat matrix_from_json(const json& arr, std::size_t rows, std::size_t cols,
                       std::int64_t p, const std::string& where) {
  if (!arr.is_array()) bad(where + " must be an array of [row, col, coeff]");
  FpMat out(rows, cols, p);
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_number_integer())
      bad(where + " entries must be [row, col, coeff] triples");
    const auto r = entry[0].get<std::int64_t>();
    const auto c = entry[1].get<std::int64_t>();
    if (r < 0 || static_cast<std::size_t>(r) >= rows || c < 0 ||
        static_cast<std::size_t>(c) >= cols)
      bad(where + " position (" + std::to_string(r) + ", " +
          std::to_string(c) + ") out of range");
    out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) +=
        Fp(entry[2].get<std::int64_t>(), p);
  }
  return out;
}

// Body of an algebra document; "p" is added only at top level.
json algebra_body(const SuperAlgebra& a) {
  json doc;
  doc["basis"] = basis_to_json(a.names(), a.parities());
  std::vector<std::vector<FpVec>> table(a.dim(), std::vector<FpVec>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) table[i][j] = a.product(i, j);
  doc["product"] = table_to_json(table);
  if (a.flags().supercommutative) doc["supercommutative"] = true;
  if (a.has_unit()) doc["unit"] = a.name(a.unit_index());
  return doc;
}

SuperAlgebra algebra_from_body(const json& doc, std::int64_t p) {
  check_keys(doc, {"basis", "p", "product", "supercommutative", "unit"});
  if (!doc.contains("basis") || !doc.contains("product"))
    bad("algebra documents need \"basis\" and \"product\"");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  basis_from_json(doc["basis"], names, parities);
  const std::size_t n = names.size();
  auto products = table_from_json(doc["product"], n, n, n, p, "\"product\"");
  SuperAlgebra::Flags flags;
  flags.associative = true;
  if (doc.contains("supercommutative")) {
    if (!doc["supercommutative"].is_boolean())
      bad("\"supercommutative\" must be a boolean");
    flags.supercommutative = doc["supercommutative"].get<bool>();
  }
  if (doc.contains("unit")) {
    if (!doc["unit"].is_string()) bad("\"unit\" must be a basis name");
    const std::string unit = doc["unit"].get<std::string>();
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == unit) flags.unit = i;
    if (!flags.unit) bad("unit \"" + unit + "\" is not a basis name");
  }
  return SuperAlgebra(std::move(names), std::move(parities),
                      std::move(products), p, flags);
}

json lie_body(const LieSuperalgebra& l) {
  json doc;
  doc["basis"] = basis_to_json(l.names(), l.parities());
  std::vector<std::vector<FpVec>> table(l.dim(), std::vector<FpVec>(l.dim()));
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) table[i][j] = l.bracket_basis(i, j);
  doc["bracket"] = table_to_json(table);
  if (l.has_pmap()) {
    json pmap = json::array();
    const auto& evens = l.even_indices();
    for (std::size_t pos = 0; pos < evens.size(); ++pos)
      pmap.push_back(
          json{l.name(evens[pos]), vec_to_json(l.pmap().images[pos])});
    doc["pmap"] = pmap;
  }
  return doc;
}

LieSuperalgebra lie_from_body(const json& doc, std::int64_t p) {
  check_keys(doc, {"basis", "bracket", "p", "pmap"});
  if (!doc.contains("basis") || !doc.contains("bracket"))
    bad("bracket documents need \"basis\" and \"bracket\"");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  basis_from_json(doc["basis"], names, parities);
  const std::size_t n = names.size();
  auto brackets = table_from_json(doc["bracket"], n, n, n, p, "\"bracket\"");
  LieSuperalgebra l(names, parities, std::move(brackets), p);
  if (doc.contains("pmap")) {
    if (!doc["pmap"].is_array()) bad("\"pmap\" must be an array");
    const auto& evens = l.even_indices();
    if (doc["pmap"].size() != evens.size())
      bad("\"pmap\" needs one entry per even basis element");
    PMap pmap;
    for (std::size_t pos = 0; pos < evens.size(); ++pos) {
      const json& entry = doc["pmap"][pos];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string())
        bad("\"pmap\" entries must be [name, sparse-element] pairs");
      if (entry[0].get<std::string>() != names[evens[pos]])
        bad("\"pmap\" entries must follow the even basis order; expected \"" +
            names[evens[pos]] + "\", got \"" + entry[0].get<std::string>() +
            "\"");
      pmap.images.push_back(vec_from_json(entry[1], n, p, "\"pmap\""));
    }
    l.set_pmap(std::move(pmap));
  }
  return l;
}

}  // namespace

DocumentKind detect_document(const std::string& text) {
  const json doc = parse_text(text);
  if (doc.contains("lie")) return DocumentKind::bundle;
  if (doc.contains("bracket")) return DocumentKind::bracket;
  if (doc.contains("product")) return DocumentKind::algebra;
  bad("document has none of \"lie\", \"bracket\", \"product\"");
}

std::string algebra_to_json(const SuperAlgebra& a) {
  json doc = algebra_body(a);
  doc["p"] = a.modulus();
  return doc.dump(2) + "\n";
}

SuperAlgebra algebra_from_json(const std::string& text) {
  const json doc = parse_text(text);
  return algebra_from_body(doc, parse_modulus(doc));
}

std::string lie_to_json(const LieSuperalgebra& l) {
  json doc = lie_body(l);
  doc["p"] = l.modulus();
  return doc.dump(2) + "\n";
}

LieSuperalgebra lie_from_json(const std::string& text) {
  const json doc = parse_text(text);
  return lie_from_body(doc, parse_modulus(doc));
}

std::string bundle_to_json(const LRData& data, const Representation* rep) {
  json doc;
  doc["p"] = data.modulus();
  doc["base"] = algebra_body(data.base());
  doc["lie"] = lie_body(data.lie());
  std::vector<std::vector<FpVec>> action(
      data.base().dim(), std::vector<FpVec>(data.lie().dim()));
  for (std::size_t i = 0; i < data.base().dim(); ++i)
    for (std::size_t j = 0; j < data.lie().dim(); ++j)
      action[i][j] = data.action_constant(i, j);
  doc["action"] = table_to_json(action);
  json anchor = json::array();
  for (std::size_t j = 0; j < data.lie().dim(); ++j) {
    const json m = matrix_to_json(data.anchor_constant(j));
    if (!m.empty()) anchor.push_back(json{j, m});
  }
  doc["anchor"] = anchor;
  if (rep != nullptr) {
    json module;
    module["basis"] = basis_to_json(rep->names, rep->parities);
    json act = json::array();
    for (std::size_t i = 0; i < rep->a_action.size(); ++i) {
      const json m = matrix_to_json(rep->a_action[i]);
      if (!m.empty()) act.push_back(json{i, m});
    }
    module["action"] = act;
    json ops = json::array();
    for (std::size_t j = 0; j < rep->phi.size(); ++j) {
      const json m = matrix_to_json(rep->phi[j]);
      if (!m.empty()) ops.push_back(json{j, m});
    }
    module["operators"] = ops;
    doc["module"] = module;
  }
  return doc.dump(2) + "\n";
}

LoadedBundle bundle_from_json(const std::string& text) {
  const json doc = parse_text(text);
  check_keys(doc, {"action", "anchor", "base", "lie", "module", "p"});
  for (const char* key : {"base", "lie", "action", "anchor"})
    if (!doc.contains(key))
      bad(std::string("bundle documents need \"") + key + "\"");
  const std::int64_t p = parse_modulus(doc);
  if (doc["base"].contains("p") || doc["lie"].contains("p"))
    bad("nested documents must not repeat \"p\"");
  SuperAlgebra base = algebra_from_body(doc["base"], p);
  LieSuperalgebra lie = lie_from_body(doc["lie"], p);
  const std::size_t na = base.dim();
  const std::size_t nl = lie.dim();
  auto action = table_from_json(doc["action"], na, nl, nl, p, "\"action\"");

  if (!doc["anchor"].is_array()) bad("\"anchor\" must be an array");
  std::vector<FpMat> anchor(nl, FpMat(na, na, p));
  for (const json& entry : doc["anchor"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer())
      bad("\"anchor\" entries must be [index, matrix] pairs");
    const auto j = entry[0].get<std::int64_t>();
    if (j < 0 || static_cast<std::size_t>(j) >= nl)
      bad("\"anchor\" index " + std::to_string(j) + " out of range");
    anchor[static_cast<std::size_t>(j)] =
        matrix_from_json(entry[1], na, na, p, "\"anchor\"");
  }

  LoadedBundle out{LRData(std::move(base), std::move(lie), std::move(action),
                          std::move(anchor)),
                   std::nullopt};

  if (doc.contains("module")) {
    const json& module = doc["module"];
    if (!module.is_object()) bad("\"module\" must be an object");
    check_keys(module, {"action", "basis", "operators"});
    for (const char* key : {"basis", "action", "operators"})
      if (!module.contains(key))
        bad(std::string("module blocks need \"") + key + "\"");
    Representation rep;
    basis_from_json(module["basis"], rep.names, rep.parities);
    const std::size_t nm = rep.names.size();
    rep.a_action.assign(na, FpMat(nm, nm, p));
    for (const json& entry : module["action"]) {
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number_integer())
        bad("module \"action\" entries must be [index, matrix] pairs");
      const auto i = entry[0].get<std::int64_t>();
      if (i < 0 || static_cast<std::size_t>(i) >= na)
        bad("module \"action\" index out of range");
      rep.a_action[static_cast<std::size_t>(i)] =
          matrix_from_json(entry[1], nm, nm, p, "module \"action\"");
    }
    rep.phi.assign(nl, FpMat(nm, nm, p));
    for (const json& entry : module["operators"]) {
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number_integer())
        bad("module \"operators\" entries must be [index, matrix] pairs");
      const auto j = entry[0].get<std::int64_t>();
      if (j < 0 || static_cast<std::size_t>(j) >= nl)
        bad("module \"operators\" index out of range");
      rep.phi[static_cast<std::size_t>(j)] =
          matrix_from_json(entry[1], nm, nm, p, "module \"operators\"");
    }
    out.rep = std::move(rep);
  }
  return out;
}

}  // namespace rinehart
