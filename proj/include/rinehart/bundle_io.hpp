#pragma once
// JSON documents for the structure-constant data: superalgebras, bracket
// algebras with their p-maps, and full bundles with action, anchor, and an
// optional module block.  Serialization is canonical -- alphabetically
// sorted keys, two-space indent, sparse entries in index order, nothing
// zero -- so serializing a parsed canonical document reproduces it byte for
// byte.
//
// Document shapes (coefficients are integers mod p; "sparse" means pairs
// [index, coeff] and matrices are triplets [row, col, coeff]):
//
//   algebra: {"basis": [{"name", "parity"}...], "p", "product":
//             [[i, j, sparse]...], "supercommutative"?, "unit"?: name}
//   bracket: {"basis": [...], "bracket": [[i, j, sparse]...], "p",
//             "pmap"?: [[even-basis name, sparse]...]}
//   bundle:  {"action": [[i, j, sparse]...], "anchor": [[j, triplets]...],
//             "base": algebra without "p", "lie": bracket without "p",
//             "module"?: {"action", "basis", "operators"}, "p"}
//
// Parsing is strict: unknown keys, bad parities, and out-of-range indices
// are BadBundle errors, while the usual algebraic validation (associativity,
// Jacobi, ...) still runs in the constructors and throws FlagViolation.

#include <optional>
#include <stdexcept>
#include <string>

#include "rinehart/lierinehart.hpp"

namespace rinehart {

struct BadBundle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class DocumentKind { algebra, bracket, bundle };

// Looks at the top-level keys ("product" / "bracket" / "lie").
DocumentKind detect_document(const std::string& text);

std::string algebra_to_json(const SuperAlgebra& a);
SuperAlgebra algebra_from_json(const std::string& text);

std::string lie_to_json(const LieSuperalgebra& l);
LieSuperalgebra lie_from_json(const std::string& text);

struct LoadedBundle {
  LRData data;
  std::optional<Representation> rep;
};

std::string bundle_to_json(const LRData& data,
                           const Representation* rep = nullptr);
LoadedBundle bundle_from_json(const std::string& text);

}  // namespace rinehart
