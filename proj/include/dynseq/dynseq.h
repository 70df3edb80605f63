#ifndef DYNSEQ_DYNSEQ_H
#define DYNSEQ_DYNSEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DYNSEQ_API __declspec(dllexport)
#else
#define DYNSEQ_API __attribute__((visibility("default")))
#endif

/* Every fallible call returns a status. On failure the message and the
   associated index (parse position, orbit index) of the calling thread's
   last error are available until the next failing call on that thread. */
typedef enum dynseq_status {
  DYNSEQ_OK = 0,
  DYNSEQ_ERR_PARSE,
  DYNSEQ_ERR_INVALID_ARGUMENT,
  DYNSEQ_ERR_UNKNOWN_NAME,
  DYNSEQ_ERR_DIVISION_BY_ZERO,
  DYNSEQ_ERR_INDETERMINACY,
  DYNSEQ_ERR_MISMATCH,
  DYNSEQ_ERR_FIELD,
  DYNSEQ_ERR_SIZE_LIMIT,
  DYNSEQ_ERR_INTERNAL
} dynseq_status;

typedef enum dynseq_verdict {
  DYNSEQ_PROVED_EQUAL = 0,
  DYNSEQ_REFUTED = 1,
  DYNSEQ_ABORTED = 2
} dynseq_verdict;

typedef enum dynseq_order {
  DYNSEQ_ORDER_DEFAULT = 0, /* keep the document's order */
  DYNSEQ_ORDER_LEX,
  DYNSEQ_ORDER_DEGREVLEX
} dynseq_order;

typedef enum dynseq_format {
  DYNSEQ_FORMAT_HUMAN = 0,
  DYNSEQ_FORMAT_JSON = 1
} dynseq_format;

typedef struct dynseq_seq dynseq_seq;
typedef struct dynseq_identity dynseq_identity;
typedef struct dynseq_certificate dynseq_certificate;

/* Negative values (and DYNSEQ_ORDER_DEFAULT) leave the identity's own
   options in place. */
typedef struct dynseq_prove_options {
  dynseq_order order;
  int64_t max_steps;
  int64_t extra_check_terms;
  int compare_bases;
} dynseq_prove_options;

DYNSEQ_API void dynseq_prove_options_init(dynseq_prove_options* opts);

DYNSEQ_API const char* dynseq_status_string(dynseq_status status);
DYNSEQ_API const char* dynseq_last_error(void);
/* -1 when the last error has no index. */
DYNSEQ_API int64_t dynseq_last_error_index(void);

/* Strings handed out by the library. */
DYNSEQ_API void dynseq_string_free(char* s);

/* Newline-separated catalog names. */
DYNSEQ_API dynseq_status dynseq_catalog_systems(char** out);
DYNSEQ_API dynseq_status dynseq_catalog_identities(char** out);

/* `spec` is "catalog:NAME" or a path to a JSON document. Exactly one of
   *seq_out and *identity_out is set; the other becomes NULL. Either output
   pointer may be NULL when the caller only accepts one kind, in which case
   the other kind is an InvalidArgument error. */
DYNSEQ_API dynseq_status dynseq_load(const char* spec, dynseq_seq** seq_out, dynseq_identity** identity_out);
DYNSEQ_API dynseq_status dynseq_load_json(const char* json_text, dynseq_seq** seq_out,
                                          dynseq_identity** identity_out);

/* Combinator expression such as "partial_products(catalog:factorial)".
   `field_json` selects the field for builders; NULL means QQ. */
DYNSEQ_API dynseq_status dynseq_seq_parse(const char* expression, const char* field_json, dynseq_seq** out);

DYNSEQ_API dynseq_seq* dynseq_seq_clone(const dynseq_seq* s);
DYNSEQ_API void dynseq_seq_free(dynseq_seq* s);

/* Terms a(0..n_max), one per line. */
DYNSEQ_API dynseq_status dynseq_seq_eval(const dynseq_seq* s, size_t n_max, char** out);
DYNSEQ_API dynseq_status dynseq_seq_term(const dynseq_seq* s, size_t n, char** out);
/* JSON system document (prefix included). */
DYNSEQ_API dynseq_status dynseq_seq_describe(const dynseq_seq* s, char** out);

DYNSEQ_API dynseq_status dynseq_seq_sum(const dynseq_seq* a, const dynseq_seq* b, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_product(const dynseq_seq* a, const dynseq_seq* b, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_partial_sums(const dynseq_seq* a, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_partial_products(const dynseq_seq* a, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_shift(const dynseq_seq* a, size_t i, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_with_prefix(const dynseq_seq* a, const char* const* terms, size_t count,
                                                size_t j, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_progression(const dynseq_seq* a, size_t d, size_t i, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_floor(const dynseq_seq* a, size_t d, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_interlace(const dynseq_seq* const* seqs, size_t count, dynseq_seq** out);
DYNSEQ_API dynseq_status dynseq_seq_scale(const dynseq_seq* a, const char* constant, dynseq_seq** out);

DYNSEQ_API dynseq_status dynseq_identity_new(const dynseq_seq* lhs, const dynseq_seq* rhs, dynseq_identity** out);
DYNSEQ_API void dynseq_identity_free(dynseq_identity* id);

/* `opts` may be NULL. */
DYNSEQ_API dynseq_status dynseq_prove(const dynseq_identity* id, const dynseq_prove_options* opts,
                                      dynseq_certificate** out);
DYNSEQ_API void dynseq_certificate_free(dynseq_certificate* c);
DYNSEQ_API dynseq_verdict dynseq_certificate_verdict(const dynseq_certificate* c);
/* Returns 0 and leaves *n0 untouched when the chain did not stabilize. */
DYNSEQ_API int dynseq_certificate_n0(const dynseq_certificate* c, int64_t* n0);
DYNSEQ_API size_t dynseq_certificate_checked_terms(const dynseq_certificate* c);
/* Returns 0 when there is no witness. */
DYNSEQ_API int dynseq_certificate_witness_index(const dynseq_certificate* c, int64_t* index);
DYNSEQ_API double dynseq_certificate_elapsed(const dynseq_certificate* c);
DYNSEQ_API dynseq_status dynseq_certificate_render(const dynseq_certificate* c, dynseq_format format, char** out);

/* Runs `steps` steps of the ideal chain without stopping at the first
   member and renders one line (or JSON object) per step. */
DYNSEQ_API dynseq_status dynseq_gb_chain(const dynseq_identity* id, const dynseq_prove_options* opts,
                                         size_t steps, dynseq_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
