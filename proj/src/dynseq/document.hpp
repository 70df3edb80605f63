#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "dynseq/dynseq.hpp"
#include "dynseq/prover.hpp"

namespace dynseq {

/// JSON form of a system: expressions are strings in the parse_expression
/// grammar.
///
///   {"field": ..., "variables": ["x", "y"], "map": ["x + 1", "x*y"],
///    "point": ["1", "1"], "observable": "y",
///    "relations": [], "prefix": [], "order": "degrevlex"}
///
/// The field is "QQ", {"kind": "algebraic", "generator": "r",
/// "minpoly": [-5, 0, 1]} (ascending, or a string such as "r^2 - 5") or
/// {"kind": "rational_functions", "variable": "t"}.
struct SystemDocument {
  FieldPtr field;
  std::vector<std::string> variables;
  std::vector<std::string> map;
  std::vector<std::string> point;
  std::string observable;
  std::vector<std::string> relations;
  std::vector<std::string> prefix;
  std::optional<MonomialOrder> order;
};

FieldPtr field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const FieldPtr& field);

SystemDocument system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const SystemDocument& doc);
DynSeq build_system(const SystemDocument& doc);
// Inverse of build_system up to canonical form.
SystemDocument system_document(const DynSeq& s);

/// {"lhs": side, "rhs": side, "field": ..., "options": {"order": "lex",
/// "max_steps": 64, "extra_check_terms": 20}} where a side is an inline
/// system object, "catalog:NAME" or a combinator expression such as
/// "partial_products(catalog:factorial)".
struct IdentityDocument {
  DynSeq lhs;
  DynSeq rhs;
  ProveOptions options;
  bool order_pinned = false;
};

IdentityDocument identity_from_json(const nlohmann::json& j);

// Combinator expression; builders that need a field use `field`.
DynSeq parse_sequence_expression(std::string_view text, const FieldPtr& field);

// "catalog:NAME" or a path to a JSON file. Exactly one member is set.
struct LoadedDocument {
  std::optional<DynSeq> system;
  std::optional<IdentityDocument> identity;
};
LoadedDocument load_document(const std::string& spec);
LoadedDocument load_document_json(const nlohmann::json& j);

// Catalog
const std::vector<std::string>& catalog_system_names();
const std::vector<std::string>& catalog_identity_names();
SystemDocument catalog_system(const std::string& name);
nlohmann::json catalog_identity(const std::string& name);

}  // namespace dynseq
