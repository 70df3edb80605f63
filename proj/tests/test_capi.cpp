#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dynseq/dynseq.h>

#include <string>

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  dynseq_string_free(s);
  return out;
}

std::string eval(const dynseq_seq* s, size_t n) {
  char* out = nullptr;
  REQUIRE(dynseq_seq_eval(s, n, &out) == DYNSEQ_OK);
  return take(out);
}

dynseq_seq* load_seq(const char* spec) {
  dynseq_seq* s = nullptr;
  dynseq_identity* id = nullptr;
  REQUIRE(dynseq_load(spec, &s, &id) == DYNSEQ_OK);
  REQUIRE(s);
  REQUIRE_FALSE(id);
  return s;
}

dynseq_identity* load_identity(const char* spec) {
  dynseq_identity* id = nullptr;
  REQUIRE(dynseq_load(spec, nullptr, &id) == DYNSEQ_OK);
  REQUIRE(id);
  return id;
}

}  // namespace

TEST_CASE("catalog listing") {
  char* out = nullptr;
  REQUIRE(dynseq_catalog_systems(&out) == DYNSEQ_OK);
  auto systems = take(out);
  CHECK(systems.find("factorial\n") == 0);
  CHECK(systems.find("A006720\n") != std::string::npos);
  REQUIRE(dynseq_catalog_identities(&out) == DYNSEQ_OK);
  auto ids = take(out);
  for (const char* name : {"fib-power-of-two", "superfactorial", "eds-double-recurrence", "somos4-eds-sign", "product-identity",
                           "triangular"})
    CHECK(ids.find(name) != std::string::npos);
}

TEST_CASE("evaluation") {
  auto* s = load_seq("catalog:A000178");
  CHECK(eval(s, 5) == "1\n1\n2\n12\n288\n34560\n");
  char* out = nullptr;
  REQUIRE(dynseq_seq_term(s, 4, &out) == DYNSEQ_OK);
  CHECK(take(out) == "288");
  REQUIRE(dynseq_seq_describe(s, &out) == DYNSEQ_OK);
  auto doc = take(out);
  CHECK(doc.find("\"variables\"") != std::string::npos);
  // the description loads back as the same sequence
  dynseq_seq* back = nullptr;
  REQUIRE(dynseq_load_json(doc.c_str(), &back, nullptr) == DYNSEQ_OK);
  CHECK(eval(back, 8) == eval(s, 8));
  dynseq_seq_free(back);
  dynseq_seq_free(s);

  s = load_seq("catalog:A006769");
  CHECK(eval(s, 15) == "0\n1\n1\n-1\n1\n2\n-1\n-3\n-5\n7\n-4\n-23\n29\n59\n129\n-314\n");
  dynseq_seq_free(s);
}

TEST_CASE("combinators") {
  auto* f = load_seq("catalog:factorial");
  dynseq_seq* out = nullptr;
  REQUIRE(dynseq_seq_product(f, f, &out) == DYNSEQ_OK);
  CHECK(eval(out, 4) == "1\n1\n4\n36\n576\n");
  dynseq_seq_free(out);
  REQUIRE(dynseq_seq_partial_products(f, &out) == DYNSEQ_OK);
  CHECK(eval(out, 5) == "1\n1\n2\n12\n288\n34560\n");
  dynseq_seq_free(out);
  REQUIRE(dynseq_seq_shift(f, 2, &out) == DYNSEQ_OK);
  CHECK(eval(out, 3) == "2\n6\n24\n120\n");
  dynseq_seq_free(out);
  const char* five[] = {"5"};
  REQUIRE(dynseq_seq_with_prefix(f, five, 1, 1, &out) == DYNSEQ_OK);
  CHECK(eval(out, 4) == "5\n1\n1\n2\n6\n");
  dynseq_seq_free(out);
  REQUIRE(dynseq_seq_progression(f, 2, 0, &out) == DYNSEQ_OK);
  CHECK(eval(out, 3) == "1\n2\n24\n720\n");
  dynseq_seq_free(out);
  REQUIRE(dynseq_seq_floor(f, 3, &out) == DYNSEQ_OK);
  CHECK(eval(out, 6) == "1\n1\n1\n1\n1\n1\n2\n");
  dynseq_seq_free(out);
  REQUIRE(dynseq_seq_scale(f, "1/2", &out) == DYNSEQ_OK);
  CHECK(eval(out, 3) == "1/2\n1/2\n1\n3\n");
  dynseq_seq_free(out);

  auto* tri = load_seq("catalog:triangular-closed");
  const dynseq_seq* both[] = {f, tri};
  REQUIRE(dynseq_seq_interlace(both, 2, &out) == DYNSEQ_OK);
  CHECK(eval(out, 7) == "1\n0\n1\n1\n2\n3\n6\n6\n");
  dynseq_seq_free(out);
  REQUIRE(dynseq_seq_sum(f, tri, &out) == DYNSEQ_OK);
  CHECK(eval(out, 3) == "1\n2\n5\n12\n");
  auto* copy = dynseq_seq_clone(out);
  dynseq_seq_free(out);
  CHECK(eval(copy, 3) == "1\n2\n5\n12\n");
  dynseq_seq_free(copy);
  REQUIRE(dynseq_seq_partial_sums(tri, &out) == DYNSEQ_OK);
  CHECK(eval(out, 4) == "0\n1\n4\n10\n20\n");
  dynseq_seq_free(out);
  dynseq_seq_free(tri);
  dynseq_seq_free(f);

  REQUIRE(dynseq_seq_parse("power_tower(t, 2)", R"({"kind": "rational_functions", "variable": "t"})", &out) == DYNSEQ_OK);
  CHECK(eval(out, 3) == "t\nt^2\nt^4\nt^8\n");
  dynseq_seq_free(out);
}

TEST_CASE("proving") {
  auto* id = load_identity("catalog:superfactorial");
  dynseq_certificate* c = nullptr;
  REQUIRE(dynseq_prove(id, nullptr, &c) == DYNSEQ_OK);
  CHECK(dynseq_certificate_verdict(c) == DYNSEQ_PROVED_EQUAL);
  int64_t n0 = -7;
  CHECK(dynseq_certificate_n0(c, &n0) == 1);
  CHECK(n0 == 2);
  CHECK(dynseq_certificate_checked_terms(c) == 23);
  int64_t w = -7;
  CHECK(dynseq_certificate_witness_index(c, &w) == 0);
  CHECK(w == -7);
  CHECK(dynseq_certificate_elapsed(c) >= 0.0);
  char* out = nullptr;
  REQUIRE(dynseq_certificate_render(c, DYNSEQ_FORMAT_JSON, &out) == DYNSEQ_OK);
  auto json = take(out);
  CHECK(json.find("\"verdict\": \"proved\"") != std::string::npos);
  CHECK(json.find("\"n0\": 2") != std::string::npos);
  REQUIRE(dynseq_certificate_render(c, DYNSEQ_FORMAT_HUMAN, &out) == DYNSEQ_OK);
  CHECK(take(out).find("equal for all n") == 0);
  dynseq_certificate_free(c);

  dynseq_prove_options opts;
  dynseq_prove_options_init(&opts);
  opts.compare_bases = 1;
  opts.extra_check_terms = 3;
  REQUIRE(dynseq_prove(id, &opts, &c) == DYNSEQ_OK);
  CHECK(dynseq_certificate_n0(c, &n0) == 1);
  CHECK(n0 == 2);
  CHECK(dynseq_certificate_checked_terms(c) == 6);
  dynseq_certificate_free(c);

  opts.max_steps = 1;
  REQUIRE(dynseq_prove(id, &opts, &c) == DYNSEQ_OK);
  CHECK(dynseq_certificate_verdict(c) == DYNSEQ_ABORTED);
  CHECK(dynseq_certificate_n0(c, &n0) == 0);
  dynseq_certificate_free(c);

  REQUIRE(dynseq_gb_chain(id, nullptr, 3, DYNSEQ_FORMAT_HUMAN, &out) == DYNSEQ_OK);
  auto chain = take(out);
  CHECK(chain.find("step 2: new") != std::string::npos);
  CHECK(chain.find("step 3") == std::string::npos);
  dynseq_identity_free(id);

  // refutation through identity_new
  auto* f = load_seq("catalog:factorial");
  dynseq_seq* g = nullptr;
  const char* pre[] = {"1", "1", "3"};
  REQUIRE(dynseq_seq_with_prefix(f, pre, 3, 0, &g) == DYNSEQ_OK);
  dynseq_identity* bad = nullptr;
  REQUIRE(dynseq_identity_new(f, g, &bad) == DYNSEQ_OK);
  REQUIRE(dynseq_prove(bad, nullptr, &c) == DYNSEQ_OK);
  CHECK(dynseq_certificate_verdict(c) == DYNSEQ_REFUTED);
  CHECK(dynseq_certificate_witness_index(c, &w) == 1);
  CHECK(w == 2);
  dynseq_certificate_free(c);
  dynseq_identity_free(bad);
  dynseq_seq_free(g);
  dynseq_seq_free(f);
}

TEST_CASE("errors") {
  dynseq_seq* s = nullptr;
  CHECK(dynseq_load("catalog:nosuch", &s, nullptr) == DYNSEQ_ERR_UNKNOWN_NAME);
  CHECK(s == nullptr);
  CHECK(std::string(dynseq_last_error()).find("nosuch") != std::string::npos);

  CHECK(dynseq_load_json("{\"variables\": [\"x\"], \"map\": [\"x +\"], \"point\": [\"1\"], \"observable\": \"x\"}", &s,
                         nullptr) == DYNSEQ_ERR_PARSE);
  CHECK(dynseq_last_error_index() == 3);
  CHECK(dynseq_load_json("{not json", &s, nullptr) == DYNSEQ_ERR_PARSE);

  // a system whose observable hits 1/0 at n = 3
  REQUIRE(dynseq_load_json(R"({"variables": ["x"], "map": ["x - 1"], "point": ["3"], "observable": "1/x"})", &s, nullptr) ==
          DYNSEQ_OK);
  char* out = nullptr;
  CHECK(dynseq_seq_eval(s, 10, &out) == DYNSEQ_ERR_INDETERMINACY);
  CHECK(out == nullptr);
  CHECK(dynseq_last_error_index() == 3);

  auto* t = load_seq("catalog:A058635");
  dynseq_seq* sum = nullptr;
  CHECK(dynseq_seq_sum(s, t, &sum) == DYNSEQ_ERR_MISMATCH);
  dynseq_seq_free(t);
  dynseq_seq_free(s);

  dynseq_identity* id = nullptr;
  CHECK(dynseq_load("catalog:factorial", nullptr, &id) == DYNSEQ_ERR_INVALID_ARGUMENT);
  CHECK(dynseq_seq_eval(nullptr, 3, &out) == DYNSEQ_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dynseq_status_string(DYNSEQ_ERR_SIZE_LIMIT)).size() > 0);
  CHECK(dynseq_load_json(R"({"field": {"kind": "algebraic", "generator": "s", "minpoly": [0, 0, 1]},
                             "variables": ["x"], "map": ["x"], "point": ["1"], "observable": "x"})",
                         &s, nullptr) == DYNSEQ_ERR_FIELD);
}
