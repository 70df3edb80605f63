#include <map>

#include "dynseq/document.hpp"

namespace dynseq {

using nlohmann::json;

namespace {

const char* const kSqrt5 = R"J({"kind": "algebraic", "generator": "r", "minpoly": [-5, 0, 1]})J";
const char* const kQt = R"J({"kind": "rational_functions", "variable": "t"})J";

struct Entry {
  const char* name;
  const char* doc;
};

// Systems. Names with an OEIS number produce that sequence (or the stated
// shift of it).
const std::vector<Entry>& system_entries() {
  static const std::vector<Entry> entries = {
      // n!
      {"factorial", R"J({"variables": ["x", "y"], "map": ["x + 1", "x*y"], "point": ["1", "1"], "observable": "y"})J"},
      // 0 + 1 + ... + n
      {"triangular-sum", R"J({"variables": ["x", "y"], "map": ["x + 1", "y + x"], "point": ["1", "0"],
                             "observable": "y", "order": "lex"})J"},
      // n(n+1)/2
      {"triangular-closed", R"J({"variables": ["z"], "map": ["z + 1"], "point": ["0"], "observable": "z*(z + 1)/2",
                                "order": "lex"})J"},
      // F(2^(n+1)) through (x, y) -> (xy, y^2 - 2)
      {"A058635", R"J({"field": SQRT5, "variables": ["x", "y"], "map": ["x*y", "y^2 - 2"], "point": ["1", "3"],
                      "observable": "x", "order": "lex"})J"},
      // F(2^(n+1)) = (rho^(2^(n+1)) - rho^(-2^(n+1)))/sqrt(5) with t = 1/z
      {"A058635-binet", R"J({"field": SQRT5, "variables": ["z", "t"], "map": ["z^2", "t^2"],
                            "point": ["(3 + r)/2", "(3 - r)/2"], "observable": "(z - t)/r",
                            "relations": ["z*t - 1"], "order": "lex"})J"},
      // superfactorials, (x, y, z) -> (x + 1, xy, xyz)
      {"A000178", R"J({"variables": ["x", "y", "z"], "map": ["x + 1", "x*y", "x*y*z"], "point": ["1", "1", "1"],
                      "observable": "z"})J"},
      // superfactorials through the Somos-type recurrence, started at b(-1)
      {"A000178-somos", R"J({"variables": ["x", "y", "z"], "map": ["y", "z", "(x*z^3 + y^2*z^2)/y^3"],
                            "point": ["1", "1", "1"], "observable": "y"})J"},
      // EDS for y^2 + y = x^3 - x and the point (0, 0)
      {"A006769", R"J({"variables": ["x", "y", "z", "w"], "map": ["y", "z", "w", "(w*y + z^2)/x"],
                      "point": ["1", "1", "-1", "1"], "observable": "x", "prefix": ["0"]})J"},
      // a(n+1) via the order-4 recurrence
      {"A006769-order4", R"J({"variables": ["x", "y", "z", "w"], "map": ["y", "z", "w", "(w*y + z^2)/x"],
                             "point": ["1", "1", "-1", "1"], "observable": "x"})J"},
      // a(n+1) via the order-5 recurrence
      {"A006769-order5", R"J({"variables": ["x", "y", "z", "w", "t"], "map": ["y", "z", "w", "t", "-(t*y + z*w)/x"],
                             "point": ["1", "1", "-1", "1", "2"], "observable": "x"})J"},
      // (-1)^n a(2n+1)
      {"A006769-odd-signed", R"J({"variables": ["x", "y", "z", "w", "t"],
                                 "map": ["z", "w", "(w*y + z^2)/x", "((z/x)*(w*y + z^2) + w^2)/y", "-t"],
                                 "point": ["1", "1", "-1", "1", "1"], "observable": "x*t"})J"},
      // Somos-4
      {"A006720", R"J({"variables": ["x", "y", "z", "w"], "map": ["y", "z", "w", "(w*y + z^2)/x"],
                      "point": ["1", "1", "1", "1"], "observable": "x"})J"},
      // b(n+2)
      {"A006720-shift2", R"J({"variables": ["x", "y", "z", "w"], "map": ["y", "z", "w", "(w*y + z^2)/x"],
                             "point": ["1", "1", "2", "3"], "observable": "x"})J"},
      // (1 + t)(1 + t^2)...(1 + t^(2^(n-1)))
      {"dyadic-product", R"J({"field": QT, "variables": ["x", "y"], "map": ["x^2", "(x + 1)*y"], "point": ["t", "1"],
                             "observable": "y"})J"},
      // (t^(2^n) - 1)/(t - 1)
      {"dyadic-quotient", R"J({"field": QT, "variables": ["z"], "map": ["z^2"], "point": ["t"],
                              "observable": "(z - 1)/(t - 1)"})J"},
  };
  return entries;
}

const std::vector<Entry>& identity_entries() {
  static const std::vector<Entry> entries = {
      {"fib-power-of-two", R"J({"lhs": "catalog:A058635", "rhs": "catalog:A058635-binet", "options": {"order": "lex"}})J"},
      {"superfactorial", R"J({"lhs": "partial_products(catalog:factorial)", "rhs": "catalog:A000178-somos"})J"},
      {"eds-double-recurrence", R"J({"lhs": "catalog:A006769-order4", "rhs": "catalog:A006769-order5"})J"},
      {"somos4-eds-sign", R"J({"lhs": "catalog:A006720-shift2", "rhs": "catalog:A006769-odd-signed"})J"},
      // Orbit degrees in t double each step, so the audit is kept short.
      {"product-identity", R"J({"lhs": "catalog:dyadic-product", "rhs": "catalog:dyadic-quotient",
                              "options": {"extra_check_terms": 10}})J"},
      {"triangular", R"J({"lhs": "catalog:triangular-sum", "rhs": "catalog:triangular-closed", "options": {"order": "lex"}})J"},
  };
  return entries;
}

std::string expand(std::string s) {
  auto sub = [&](const std::string& key, const char* val) {
    for (std::size_t p; (p = s.find(key)) != std::string::npos;) s.replace(p, key.size(), val);
  };
  sub("SQRT5", kSqrt5);
  sub("QT", kQt);
  return s;
}

std::vector<std::string> names_of(const std::vector<Entry>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.emplace_back(e.name);
  return out;
}

}  // namespace

const std::vector<std::string>& catalog_system_names() {
  static const std::vector<std::string> names = names_of(system_entries());
  return names;
}

const std::vector<std::string>& catalog_identity_names() {
  static const std::vector<std::string> names = names_of(identity_entries());
  return names;
}

SystemDocument catalog_system(const std::string& name) {
  for (const auto& e : system_entries())
    if (name == e.name) return system_from_json(json::parse(expand(e.doc)));
  throw Error(ErrorKind::UnknownName, "no catalog system named \"" + name + "\"");
}

json catalog_identity(const std::string& name) {
  for (const auto& e : identity_entries())
    if (name == e.name) return json::parse(e.doc);
  throw Error(ErrorKind::UnknownName, "no catalog identity named \"" + name + "\"");
}

}  // namespace dynseq
