#include "dynseq/dynseq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "dynseq/document.hpp"
#include "dynseq/parse.hpp"

struct dynseq_seq {
  dynseq::DynSeq seq;
};

struct dynseq_identity {
  dynseq::IdentityDocument doc;
};

struct dynseq_certificate {
  dynseq::ProofCertificate cert;
};

namespace {

using nlohmann::json;

struct LastError {
  std::string message;
  std::int64_t index = -1;
};

thread_local LastError last_error;

dynseq_status status_of(dynseq::ErrorKind kind) {
  using dynseq::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse: return DYNSEQ_ERR_PARSE;
    case ErrorKind::UnknownName: return DYNSEQ_ERR_UNKNOWN_NAME;
    case ErrorKind::DivisionByZero:
    case ErrorKind::ZeroBaseNegativeExponent:
    case ErrorKind::ZeroDenominatorSymbolic: return DYNSEQ_ERR_DIVISION_BY_ZERO;
    case ErrorKind::Indeterminacy: return DYNSEQ_ERR_INDETERMINACY;
    case ErrorKind::DescriptorMismatch:
    case ErrorKind::VarTableMismatch:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::OrderMismatch: return DYNSEQ_ERR_MISMATCH;
    case ErrorKind::InvalidField:
    case ErrorKind::ReducibleMinimalPolynomial: return DYNSEQ_ERR_FIELD;
    case ErrorKind::SizeLimitExceeded: return DYNSEQ_ERR_SIZE_LIMIT;
    case ErrorKind::NonIntegerValuedPolynomial:
    case ErrorKind::InvalidArgument: return DYNSEQ_ERR_INVALID_ARGUMENT;
  }
  return DYNSEQ_ERR_INTERNAL;
}

dynseq_status fail(dynseq_status s, std::string message, std::int64_t index = -1) {
  last_error.message = std::move(message);
  last_error.index = index;
  return s;
}

// Runs `body` and converts exceptions into status codes.
template <typename F>
dynseq_status guarded(F&& body) {
  try {
    body();
    return DYNSEQ_OK;
  } catch (const dynseq::Error& e) {
    return fail(status_of(e.kind()), e.what(), e.index().value_or(-1));
  } catch (const json::parse_error& e) {
    return fail(DYNSEQ_ERR_PARSE, e.what(), static_cast<std::int64_t>(e.byte));
  } catch (const json::exception& e) {
    return fail(DYNSEQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DYNSEQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DYNSEQ_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string join_lines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + "\n";
  return out;
}

dynseq_seq* wrap(dynseq::DynSeq s) { return new dynseq_seq{std::move(s)}; }

bool check_out(const void* p, const char* what, dynseq_status& st) {
  if (p) return true;
  st = fail(DYNSEQ_ERR_INVALID_ARGUMENT, std::string(what) + " is NULL");
  return false;
}

dynseq_status deliver(dynseq::LoadedDocument doc, dynseq_seq** seq_out, dynseq_identity** id_out) {
  if (seq_out) *seq_out = nullptr;
  if (id_out) *id_out = nullptr;
  if (doc.system) {
    if (!seq_out) return fail(DYNSEQ_ERR_INVALID_ARGUMENT, "document is a system, expected an identity");
    *seq_out = wrap(std::move(*doc.system));
  } else {
    if (!id_out) return fail(DYNSEQ_ERR_INVALID_ARGUMENT, "document is an identity, expected a system");
    *id_out = new dynseq_identity{std::move(*doc.identity)};
  }
  return DYNSEQ_OK;
}

dynseq::ProveOptions merged(const dynseq_identity* id, const dynseq_prove_options* o) {
  dynseq::ProveOptions opts = id->doc.options;
  if (!o) return opts;
  if (o->order == DYNSEQ_ORDER_LEX) opts.order = dynseq::MonomialOrder::Lex;
  if (o->order == DYNSEQ_ORDER_DEGREVLEX) opts.order = dynseq::MonomialOrder::DegRevLex;
  if (o->max_steps >= 0) opts.max_steps = static_cast<std::size_t>(o->max_steps);
  if (o->extra_check_terms >= 0) opts.extra_check_terms = static_cast<std::size_t>(o->extra_check_terms);
  if (o->compare_bases >= 0) opts.compare_bases = o->compare_bases != 0;
  return opts;
}

template <typename F>
dynseq_status unary(const dynseq_seq* a, dynseq_seq** out, F&& f) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(a, "sequence", st) || !check_out(out, "output", st)) return st;
  return guarded([&] { *out = wrap(f(a->seq)); });
}

}  // namespace

extern "C" {

void dynseq_prove_options_init(dynseq_prove_options* opts) {
  if (!opts) return;
  opts->order = DYNSEQ_ORDER_DEFAULT;
  opts->max_steps = -1;
  opts->extra_check_terms = -1;
  opts->compare_bases = -1;
}

const char* dynseq_status_string(dynseq_status status) {
  switch (status) {
    case DYNSEQ_OK: return "ok";
    case DYNSEQ_ERR_PARSE: return "parse error";
    case DYNSEQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DYNSEQ_ERR_UNKNOWN_NAME: return "unknown name";
    case DYNSEQ_ERR_DIVISION_BY_ZERO: return "division by zero";
    case DYNSEQ_ERR_INDETERMINACY: return "indeterminacy";
    case DYNSEQ_ERR_MISMATCH: return "mismatch";
    case DYNSEQ_ERR_FIELD: return "field error";
    case DYNSEQ_ERR_SIZE_LIMIT: return "size limit exceeded";
    case DYNSEQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dynseq_last_error(void) { return last_error.message.c_str(); }
int64_t dynseq_last_error_index(void) { return last_error.index; }

void dynseq_string_free(char* s) { std::free(s); }

dynseq_status dynseq_catalog_systems(char** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(out, "output", st)) return st;
  return guarded([&] { *out = dup(join_lines(dynseq::catalog_system_names())); });
}

dynseq_status dynseq_catalog_identities(char** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(out, "output", st)) return st;
  return guarded([&] { *out = dup(join_lines(dynseq::catalog_identity_names())); });
}

dynseq_status dynseq_load(const char* spec, dynseq_seq** seq_out, dynseq_identity** identity_out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(spec, "spec", st)) return st;
  dynseq_status inner = DYNSEQ_OK;
  st = guarded([&] { inner = deliver(dynseq::load_document(spec), seq_out, identity_out); });
  return st != DYNSEQ_OK ? st : inner;
}

dynseq_status dynseq_load_json(const char* json_text, dynseq_seq** seq_out, dynseq_identity** identity_out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(json_text, "json", st)) return st;
  dynseq_status inner = DYNSEQ_OK;
  st = guarded([&] { inner = deliver(dynseq::load_document_json(json::parse(json_text)), seq_out, identity_out); });
  return st != DYNSEQ_OK ? st : inner;
}

dynseq_status dynseq_seq_parse(const char* expression, const char* field_json, dynseq_seq** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(expression, "expression", st) || !check_out(out, "output", st)) return st;
  return guarded([&] {
    dynseq::FieldPtr field = field_json ? dynseq::field_from_json(json::parse(field_json)) : dynseq::FieldDescriptor::rationals();
    *out = wrap(dynseq::parse_sequence_expression(expression, field));
  });
}

dynseq_seq* dynseq_seq_clone(const dynseq_seq* s) {
  if (!s) return nullptr;
  try {
    return new dynseq_seq{s->seq};
  } catch (...) {
    fail(DYNSEQ_ERR_INTERNAL, "out of memory");
    return nullptr;
  }
}

void dynseq_seq_free(dynseq_seq* s) { delete s; }

dynseq_status dynseq_seq_eval(const dynseq_seq* s, size_t n_max, char** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(s, "sequence", st) || !check_out(out, "output", st)) return st;
  return guarded([&] {
    std::string text;
    for (const auto& v : dynseq::seq_eval(s->seq, n_max)) text += v.to_string() + "\n";
    *out = dup(text);
  });
}

dynseq_status dynseq_seq_term(const dynseq_seq* s, size_t n, char** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(s, "sequence", st) || !check_out(out, "output", st)) return st;
  return guarded([&] { *out = dup(dynseq::seq_eval(s->seq, n).back().to_string()); });
}

dynseq_status dynseq_seq_describe(const dynseq_seq* s, char** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(s, "sequence", st) || !check_out(out, "output", st)) return st;
  return guarded([&] { *out = dup(dynseq::system_to_json(dynseq::system_document(s->seq)).dump(2)); });
}

dynseq_status dynseq_seq_sum(const dynseq_seq* a, const dynseq_seq* b, dynseq_seq** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(b, "sequence", st)) return st;
  return unary(a, out, [&](const dynseq::DynSeq& x) { return dynseq::seq_sum(x, b->seq); });
}

dynseq_status dynseq_seq_product(const dynseq_seq* a, const dynseq_seq* b, dynseq_seq** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(b, "sequence", st)) return st;
  return unary(a, out, [&](const dynseq::DynSeq& x) { return dynseq::seq_product(x, b->seq); });
}

dynseq_status dynseq_seq_partial_sums(const dynseq_seq* a, dynseq_seq** out) {
  return unary(a, out, [](const dynseq::DynSeq& x) { return dynseq::seq_partial_sums(x); });
}

dynseq_status dynseq_seq_partial_products(const dynseq_seq* a, dynseq_seq** out) {
  return unary(a, out, [](const dynseq::DynSeq& x) { return dynseq::seq_partial_products(x); });
}

dynseq_status dynseq_seq_shift(const dynseq_seq* a, size_t i, dynseq_seq** out) {
  return unary(a, out, [&](const dynseq::DynSeq& x) { return dynseq::seq_shift(x, i); });
}

dynseq_status dynseq_seq_with_prefix(const dynseq_seq* a, const char* const* terms, size_t count, size_t j,
                                     dynseq_seq** out) {
  dynseq_status st = DYNSEQ_OK;
  if (count > 0 && !check_out(terms, "terms", st)) return st;
  return unary(a, out, [&](const dynseq::DynSeq& x) {
    std::vector<dynseq::FieldElement> prefix;
    for (size_t k = 0; k < count; ++k) prefix.push_back(dynseq::parse_constant(terms[k], x.field()));
    return dynseq::seq_with_prefix(x, std::move(prefix), j);
  });
}

dynseq_status dynseq_seq_progression(const dynseq_seq* a, size_t d, size_t i, dynseq_seq** out) {
  return unary(a, out, [&](const dynseq::DynSeq& x) { return dynseq::seq_arith_progression(x, d, i); });
}

dynseq_status dynseq_seq_floor(const dynseq_seq* a, size_t d, dynseq_seq** out) {
  return unary(a, out, [&](const dynseq::DynSeq& x) { return dynseq::seq_floor(x, d); });
}

dynseq_status dynseq_seq_interlace(const dynseq_seq* const* seqs, size_t count, dynseq_seq** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(seqs, "sequences", st) || !check_out(out, "output", st)) return st;
  for (size_t k = 0; k < count; ++k)
    if (!check_out(seqs[k], "sequence", st)) return st;
  return guarded([&] {
    std::vector<dynseq::DynSeq> v;
    for (size_t k = 0; k < count; ++k) v.push_back(seqs[k]->seq);
    *out = wrap(dynseq::seq_interlace(v));
  });
}

dynseq_status dynseq_seq_scale(const dynseq_seq* a, const char* constant, dynseq_seq** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(constant, "constant", st)) return st;
  return unary(a, out, [&](const dynseq::DynSeq& x) {
    return dynseq::seq_scale(x, dynseq::parse_constant(constant, x.field()));
  });
}

dynseq_status dynseq_identity_new(const dynseq_seq* lhs, const dynseq_seq* rhs, dynseq_identity** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(lhs, "lhs", st) || !check_out(rhs, "rhs", st) || !check_out(out, "output", st)) return st;
  return guarded([&] { *out = new dynseq_identity{dynseq::IdentityDocument{lhs->seq, rhs->seq, {}, false}}; });
}

void dynseq_identity_free(dynseq_identity* id) { delete id; }

dynseq_status dynseq_prove(const dynseq_identity* id, const dynseq_prove_options* opts, dynseq_certificate** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(id, "identity", st) || !check_out(out, "output", st)) return st;
  return guarded([&] {
    *out = new dynseq_certificate{dynseq::prove_equal(id->doc.lhs, id->doc.rhs, merged(id, opts))};
  });
}

void dynseq_certificate_free(dynseq_certificate* c) { delete c; }

dynseq_verdict dynseq_certificate_verdict(const dynseq_certificate* c) {
  if (!c) return DYNSEQ_ABORTED;
  switch (c->cert.verdict) {
    case dynseq::Verdict::ProvedEqual: return DYNSEQ_PROVED_EQUAL;
    case dynseq::Verdict::Refuted: return DYNSEQ_REFUTED;
    case dynseq::Verdict::Aborted: return DYNSEQ_ABORTED;
  }
  return DYNSEQ_ABORTED;
}

int dynseq_certificate_n0(const dynseq_certificate* c, int64_t* n0) {
  if (!c || !c->cert.n0) return 0;
  if (n0) *n0 = *c->cert.n0;
  return 1;
}

size_t dynseq_certificate_checked_terms(const dynseq_certificate* c) { return c ? c->cert.checked_terms : 0; }

int dynseq_certificate_witness_index(const dynseq_certificate* c, int64_t* index) {
  if (!c || !c->cert.witness) return 0;
  if (index) *index = c->cert.witness->index;
  return 1;
}

double dynseq_certificate_elapsed(const dynseq_certificate* c) { return c ? c->cert.elapsed_seconds : 0.0; }

dynseq_status dynseq_certificate_render(const dynseq_certificate* c, dynseq_format format, char** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(c, "certificate", st) || !check_out(out, "output", st)) return st;
  return guarded([&] {
    auto f = format == DYNSEQ_FORMAT_JSON ? dynseq::RenderFormat::Json : dynseq::RenderFormat::Human;
    *out = dup(dynseq::certificate_render(c->cert, f));
  });
}

dynseq_status dynseq_gb_chain(const dynseq_identity* id, const dynseq_prove_options* opts, size_t steps,
                              dynseq_format format, char** out) {
  dynseq_status st = DYNSEQ_OK;
  if (!check_out(id, "identity", st) || !check_out(out, "output", st)) return st;
  return guarded([&] {
    auto sys = dynseq::build_difference_system(id->doc.lhs, id->doc.rhs);
    auto chain = dynseq::ideal_chain(sys, merged(id, opts), steps, false);
    auto f = format == DYNSEQ_FORMAT_JSON ? dynseq::RenderFormat::Json : dynseq::RenderFormat::Human;
    *out = dup(dynseq::chain_render(chain, f));
  });
}

}  // extern "C"
