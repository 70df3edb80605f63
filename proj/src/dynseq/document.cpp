#include "dynseq/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dynseq/parse.hpp"

namespace dynseq {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); }

std::vector<std::string> string_list(const json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) bad(std::string("missing key \"") + key + "\"");
    return {};
  }
  const json& v = j.at(key);
  if (!v.is_array()) bad(std::string("\"") + key + "\" must be a list");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (e.is_string()) out.push_back(e.get<std::string>());
    else if (e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
    else bad(std::string("entries of \"") + key + "\" must be strings");
  }
  return out;
}

Rational json_rational(const json& e) {
  if (e.is_number_integer()) return Rational(Integer(std::to_string(e.get<long long>())));
  if (e.is_string()) {
    Rational q(e.get<std::string>());
    q.canonicalize();
    return q;
  }
  bad("minimal polynomial coefficients must be integers or strings like \"-5/2\"");
}

}  // namespace

// ------------------------------------------------------------------ fields

FieldPtr field_from_json(const json& j) {
  if (j.is_null()) return FieldDescriptor::rationals();
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "QQ" || s == "Q" || s == "rationals") return FieldDescriptor::rationals();
    bad("unknown field \"" + s + "\"");
  }
  if (!j.is_object()) bad("field must be a string or an object");
  std::string kind = j.value("kind", "rationals");
  if (kind == "rationals") return FieldDescriptor::rationals();
  if (kind == "algebraic") {
    std::string gen = j.value("generator", "r");
    if (!j.contains("minpoly")) bad("algebraic field needs \"minpoly\"");
    const json& m = j.at("minpoly");
    std::vector<Rational> coeffs;
    if (m.is_string()) coeffs = parse_upoly(m.get<std::string>(), gen).coeffs();
    else if (m.is_array())
      for (const auto& e : m) coeffs.push_back(json_rational(e));
    else bad("\"minpoly\" must be a list or a string");
    return FieldDescriptor::algebraic(gen, coeffs);
  }
  if (kind == "rational_functions") return FieldDescriptor::rational_functions(j.value("variable", "t"));
  bad("unknown field kind \"" + kind + "\"");
}

json field_to_json(const FieldPtr& field) {
  switch (field->kind()) {
    case FieldDescriptor::Kind::Rationals: return "QQ";
    case FieldDescriptor::Kind::AlgebraicExtension: {
      json coeffs = json::array();
      for (const auto& c : field->minpoly().coeffs()) {
        if (c.get_den() == 1 && c.get_num().fits_slong_p()) coeffs.push_back(c.get_num().get_si());
        else coeffs.push_back(c.get_str());
      }
      return json{{"kind", "algebraic"}, {"generator", field->symbol()}, {"minpoly", coeffs}};
    }
    case FieldDescriptor::Kind::RationalFunctions:
      return json{{"kind", "rational_functions"}, {"variable", field->symbol()}};
  }
  return nullptr;
}

// ---------------------------------------------------------------- systems

SystemDocument system_from_json(const json& j) {
  if (!j.is_object()) bad("system document must be a JSON object");
  SystemDocument d;
  d.field = field_from_json(j.contains("field") ? j.at("field") : json());
  d.variables = string_list(j, "variables", true);
  d.map = string_list(j, "map", true);
  d.point = string_list(j, "point", true);
  if (!j.contains("observable") || !j.at("observable").is_string()) bad("missing string key \"observable\"");
  d.observable = j.at("observable").get<std::string>();
  d.relations = string_list(j, "relations", false);
  d.prefix = string_list(j, "prefix", false);
  if (j.contains("order")) d.order = parse_order(j.at("order").get<std::string>());
  return d;
}

json system_to_json(const SystemDocument& d) {
  json j;
  j["field"] = field_to_json(d.field);
  j["variables"] = d.variables;
  j["map"] = d.map;
  j["point"] = d.point;
  j["observable"] = d.observable;
  if (!d.relations.empty()) j["relations"] = d.relations;
  if (!d.prefix.empty()) j["prefix"] = d.prefix;
  if (d.order) j["order"] = to_string(*d.order);
  return j;
}

DynSeq build_system(const SystemDocument& d) {
  if (d.map.size() != d.variables.size())
    bad("map has " + std::to_string(d.map.size()) + " entries for " + std::to_string(d.variables.size()) + " variables");
  if (d.point.size() != d.variables.size())
    bad("point has " + std::to_string(d.point.size()) + " entries for " + std::to_string(d.variables.size()) + " variables");
  for (const auto& v : d.variables)
    if (!d.field->symbol().empty() && v == d.field->symbol()) bad("variable \"" + v + "\" shadows the field generator");
  RingPtr ring = make_ring(d.field, VarTable(d.variables), d.order.value_or(MonomialOrder::DegRevLex));
  std::vector<RatFunc> map;
  for (const auto& e : d.map) map.push_back(parse_expression(e, ring));
  std::vector<FieldElement> point, prefix;
  for (const auto& e : d.point) point.push_back(parse_constant(e, d.field));
  for (const auto& e : d.prefix) prefix.push_back(parse_constant(e, d.field));
  std::vector<MultiPoly> rels;
  for (const auto& e : d.relations) rels.push_back(parse_polynomial(e, ring));
  return DynSeq(std::move(prefix),
                make_geometric_data(ring, std::move(map), std::move(point), parse_expression(d.observable, ring), std::move(rels)));
}

SystemDocument system_document(const DynSeq& s) {
  const GeometricData& g = s.geo();
  SystemDocument d;
  d.field = g.field();
  d.variables = g.ring->vars().names();
  for (const auto& c : g.map.components()) d.map.push_back(c.to_string());
  for (const auto& p : g.point) d.point.push_back(p.to_string());
  d.observable = g.observable.to_string();
  for (const auto& r : g.relations) d.relations.push_back(r.to_string());
  for (const auto& p : s.prefix()) d.prefix.push_back(p.to_string());
  d.order = g.ring->order();
  return d;
}

// ------------------------------------------------------------ combinators

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits on commas outside brackets and parentheses.
std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
    if (depth < 0) bad("unbalanced brackets in \"" + std::string(s) + "\"");
  }
  if (depth != 0) bad("unbalanced brackets in \"" + std::string(s) + "\"");
  std::string last = trim(s.substr(start));
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

std::size_t as_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    bad("expected a nonnegative integer, got \"" + s + "\"");
  return std::stoul(s);
}

std::vector<FieldElement> as_list(const std::string& s, const FieldPtr& field) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') bad("expected a list [..], got \"" + s + "\"");
  std::vector<FieldElement> out;
  for (const auto& e : split_args(std::string_view(s).substr(1, s.size() - 2))) out.push_back(parse_constant(e, field));
  return out;
}

void arity(const std::string& name, const std::vector<std::string>& args, std::size_t lo, std::size_t hi) {
  if (args.size() < lo || args.size() > hi)
    bad(name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
        " arguments, got " + std::to_string(args.size()));
}

}  // namespace

DynSeq parse_sequence_expression(std::string_view text, const FieldPtr& field) {
  std::string s = trim(text);
  if (s.rfind("catalog:", 0) == 0) return build_system(catalog_system(s.substr(8)));
  std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')') bad("expected a combinator call or catalog:NAME, got \"" + s + "\"");
  std::string name = trim(std::string_view(s).substr(0, open));
  auto args = split_args(std::string_view(s).substr(open + 1, s.size() - open - 2));
  auto seq = [&](std::size_t i) { return parse_sequence_expression(args[i], field); };
  auto fold = [&](auto op) {
    if (args.empty()) bad(name + " needs at least one argument");
    DynSeq acc = seq(0);
    for (std::size_t i = 1; i < args.size(); ++i) acc = op(acc, seq(i));
    return acc;
  };

  if (name == "sum") return fold(seq_sum);
  if (name == "product") return fold(seq_product);
  if (name == "partial_sums") return arity(name, args, 1, 1), seq_partial_sums(seq(0));
  if (name == "partial_products") return arity(name, args, 1, 1), seq_partial_products(seq(0));
  if (name == "shift") return arity(name, args, 2, 2), seq_shift(seq(0), as_count(args[1]));
  if (name == "with_prefix") {
    arity(name, args, 3, 3);
    DynSeq a = seq(0);
    return seq_with_prefix(a, as_list(args[1], a.field()), as_count(args[2]));
  }
  if (name == "progression") {
    arity(name, args, 2, 3);
    return seq_arith_progression(seq(0), as_count(args[1]), args.size() == 3 ? as_count(args[2]) : 0);
  }
  if (name == "floor") return arity(name, args, 2, 2), seq_floor(seq(0), as_count(args[1]));
  if (name == "interlace") {
    if (args.empty()) bad("interlace needs at least one argument");
    std::vector<DynSeq> xs;
    for (std::size_t i = 0; i < args.size(); ++i) xs.push_back(seq(i));
    return seq_interlace(xs);
  }
  if (name == "scale") {
    arity(name, args, 2, 2);
    DynSeq a = seq(0);
    return seq_scale(a, parse_constant(args[1], a.field()));
  }
  if (name == "constant") return arity(name, args, 1, 1), seq_constant(field, parse_constant(args[0], field));
  if (name == "linrec") return arity(name, args, 2, 2), seq_from_linear_recurrence(as_list(args[0], field), as_list(args[1], field));
  if (name == "somos") {
    arity(name, args, 2, 2);
    return seq_somos(as_count(args[0]), as_list(args[1], field));
  }
  if (name == "eds") {
    arity(name, args, 4, 4);
    return seq_eds(parse_constant(args[0], field), parse_constant(args[1], field), parse_constant(args[2], field),
                   parse_constant(args[3], field));
  }
  if (name == "power_tower") {
    arity(name, args, 2, 2);
    return seq_lambda_power_tower(parse_constant(args[0], field), static_cast<unsigned>(as_count(args[1])));
  }
  if (name == "poly_exponent") {
    arity(name, args, 2, 2);
    return seq_lambda_poly_exponent(parse_constant(args[0], field), parse_upoly(args[1], "x"));
  }
  if (name == "recurrence") {
    // recurrence(R, [init], c_1, ..., c_s) with R in y1..ys, x1..xd.
    if (args.size() < 2) bad("recurrence needs a function and initial values");
    auto init = as_list(args[1], field);
    std::vector<DynSeq> cs;
    for (std::size_t i = 2; i < args.size(); ++i) cs.push_back(seq(i));
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= cs.size(); ++i) names.push_back("y" + std::to_string(i));
    for (std::size_t i = 1; i <= init.size(); ++i) names.push_back("x" + std::to_string(i));
    RingPtr ring = make_ring(field, VarTable(std::move(names)));
    return seq_from_recurrence_with_coeffs(parse_expression(args[0], ring), cs, init);
  }
  throw Error(ErrorKind::UnknownName, "unknown combinator \"" + name + "\"");
}

// ------------------------------------------------------------- identities

namespace {

DynSeq resolve_side(const json& side, const FieldPtr& field, std::optional<MonomialOrder>& pinned) {
  if (side.is_object()) {
    SystemDocument d = system_from_json(side);
    if (d.order && !pinned) pinned = d.order;
    return build_system(d);
  }
  if (!side.is_string()) bad("identity side must be a system object or a string");
  std::string s = side.get<std::string>();
  if (s.rfind("catalog:", 0) == 0) {
    SystemDocument d = catalog_system(s.substr(8));
    if (d.order && !pinned) pinned = d.order;
    return build_system(d);
  }
  return parse_sequence_expression(s, field);
}

}  // namespace

IdentityDocument identity_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lhs") || !j.contains("rhs")) bad("identity document needs \"lhs\" and \"rhs\"");
  FieldPtr field = field_from_json(j.contains("field") ? j.at("field") : json());
  std::optional<MonomialOrder> pinned;
  ProveOptions opts;
  if (j.contains("options")) {
    const json& o = j.at("options");
    if (o.contains("order")) pinned = parse_order(o.at("order").get<std::string>());
    if (o.contains("max_steps")) opts.max_steps = o.at("max_steps").get<std::size_t>();
    if (o.contains("extra_check_terms")) opts.extra_check_terms = o.at("extra_check_terms").get<std::size_t>();
    if (o.contains("compare_bases")) opts.compare_bases = o.at("compare_bases").get<bool>();
  }
  DynSeq lhs = resolve_side(j.at("lhs"), field, pinned);
  DynSeq rhs = resolve_side(j.at("rhs"), field, pinned);
  if (!same_field(lhs.field(), rhs.field()))
    throw Error(ErrorKind::DescriptorMismatch,
                "identity sides live over " + lhs.field()->describe() + " and " + rhs.field()->describe());
  if (pinned) opts.order = *pinned;
  return IdentityDocument{std::move(lhs), std::move(rhs), opts, pinned.has_value()};
}

LoadedDocument load_document_json(const json& j) {
  LoadedDocument out;
  if (j.is_object() && j.contains("lhs")) out.identity = identity_from_json(j);
  else out.system = build_system(system_from_json(j));
  return out;
}

LoadedDocument load_document(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) {
    std::string name = spec.substr(8);
    for (const auto& n : catalog_identity_names())
      if (n == name) return load_document_json(catalog_identity(name));
    return load_document_json(system_to_json(catalog_system(name)));
  }
  std::ifstream in(spec);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open \"" + spec + "\"");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, spec + ": " + e.what(), static_cast<std::int64_t>(e.byte));
  }
  return load_document_json(j);
}

}  // namespace dynseq
