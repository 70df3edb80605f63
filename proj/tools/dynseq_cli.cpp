// dynseq command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "dynseq/dynseq.h"

namespace {

constexpr int kExitProved = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitAborted = 2;
constexpr int kExitInputError = 3;

struct StringDeleter {
  void operator()(char* s) const { dynseq_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SeqDeleter {
  void operator()(dynseq_seq* s) const { dynseq_seq_free(s); }
};
struct IdentityDeleter {
  void operator()(dynseq_identity* s) const { dynseq_identity_free(s); }
};
struct CertDeleter {
  void operator()(dynseq_certificate* s) const { dynseq_certificate_free(s); }
};

int report(dynseq_status st) {
  std::cerr << "error (" << dynseq_status_string(st) << "): " << dynseq_last_error();
  if (dynseq_last_error_index() >= 0) std::cerr << " [index " << dynseq_last_error_index() << "]";
  std::cerr << "\n";
  return kExitInputError;
}

class Timer {
 public:
  explicit Timer(std::string label) : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::fprintf(stderr, "%s: %.3f s\n", label_.c_str(), s);
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

struct ProveArgs {
  std::string document;
  std::string order;
  long max_steps = -1;
  long extra_check_terms = -1;
  bool compare_bases = false;
  bool json = false;
};

dynseq_prove_options to_options(const ProveArgs& a) {
  dynseq_prove_options o;
  dynseq_prove_options_init(&o);
  if (a.order == "lex") o.order = DYNSEQ_ORDER_LEX;
  if (a.order == "degrevlex") o.order = DYNSEQ_ORDER_DEGREVLEX;
  o.max_steps = a.max_steps;
  o.extra_check_terms = a.extra_check_terms;
  if (a.compare_bases) o.compare_bases = 1;
  return o;
}

// Loads an identity document; a plain system is rejected.
int load_identity(const std::string& spec, std::unique_ptr<dynseq_identity, IdentityDeleter>& out) {
  dynseq_seq* seq = nullptr;
  dynseq_identity* id = nullptr;
  dynseq_status st = dynseq_load(spec.c_str(), &seq, &id);
  if (st != DYNSEQ_OK) return report(st);
  if (seq) {
    dynseq_seq_free(seq);
    std::cerr << "error: " << spec << " is a system, not an identity\n";
    return kExitInputError;
  }
  out.reset(id);
  return 0;
}

int cmd_eval(const std::string& spec, std::size_t n) {
  Timer timer("eval");
  dynseq_seq* raw = nullptr;
  dynseq_identity* id = nullptr;
  dynseq_status st = dynseq_load(spec.c_str(), &raw, &id);
  if (st != DYNSEQ_OK) return report(st);
  if (id) {
    dynseq_identity_free(id);
    std::cerr << "error: " << spec << " is an identity, not a system\n";
    return kExitInputError;
  }
  std::unique_ptr<dynseq_seq, SeqDeleter> seq(raw);
  char* text = nullptr;
  st = dynseq_seq_eval(seq.get(), n, &text);
  if (st != DYNSEQ_OK) return report(st);
  OwnedString owned(text);
  std::cout << text;
  return 0;
}

int cmd_prove(const ProveArgs& args) {
  Timer timer("prove");
  std::unique_ptr<dynseq_identity, IdentityDeleter> id;
  if (int rc = load_identity(args.document, id)) return rc;
  dynseq_prove_options opts = to_options(args);
  dynseq_certificate* raw = nullptr;
  dynseq_status st = dynseq_prove(id.get(), &opts, &raw);
  if (st != DYNSEQ_OK) return report(st);
  std::unique_ptr<dynseq_certificate, CertDeleter> cert(raw);
  char* text = nullptr;
  st = dynseq_certificate_render(cert.get(), args.json ? DYNSEQ_FORMAT_JSON : DYNSEQ_FORMAT_HUMAN, &text);
  if (st != DYNSEQ_OK) return report(st);
  OwnedString owned(text);
  std::cout << text;
  switch (dynseq_certificate_verdict(cert.get())) {
    case DYNSEQ_PROVED_EQUAL: return kExitProved;
    case DYNSEQ_REFUTED: return kExitRefuted;
    case DYNSEQ_ABORTED: return kExitAborted;
  }
  return kExitAborted;
}

int cmd_gb(const ProveArgs& args, std::size_t steps) {
  Timer timer("gb");
  std::unique_ptr<dynseq_identity, IdentityDeleter> id;
  if (int rc = load_identity(args.document, id)) return rc;
  dynseq_prove_options opts = to_options(args);
  char* text = nullptr;
  dynseq_status st = dynseq_gb_chain(id.get(), &opts, steps, args.json ? DYNSEQ_FORMAT_JSON : DYNSEQ_FORMAT_HUMAN, &text);
  if (st != DYNSEQ_OK) return report(st);
  OwnedString owned(text);
  std::cout << text;
  return 0;
}

int cmd_catalog() {
  char* systems = nullptr;
  char* identities = nullptr;
  dynseq_status st = dynseq_catalog_systems(&systems);
  if (st != DYNSEQ_OK) return report(st);
  OwnedString s(systems);
  st = dynseq_catalog_identities(&identities);
  if (st != DYNSEQ_OK) return report(st);
  OwnedString i(identities);
  std::cout << "systems:\n" << systems << "identities:\n" << identities;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation and identity proofs for sequences given by rational dynamical systems"};
  app.require_subcommand(1);

  std::string eval_doc;
  std::size_t eval_n = 10;
  auto* eval = app.add_subcommand("eval", "print a(0), ..., a(n), one term per line");
  eval->add_option("document", eval_doc, "JSON system file or catalog:NAME")->required();
  eval->add_option("--n", eval_n, "last index")->required();

  ProveArgs prove_args;
  auto* prove = app.add_subcommand("prove", "decide whether the two sides of an identity agree for all n");
  prove->add_option("document", prove_args.document, "JSON identity file or catalog:NAME")->required();
  prove->add_option("--order", prove_args.order, "monomial order")->check(CLI::IsMember({"lex", "degrevlex"}));
  prove->add_option("--max-steps", prove_args.max_steps, "ideal chain step cap")->check(CLI::NonNegativeNumber);
  prove->add_option("--extra-check-terms", prove_args.extra_check_terms, "audit terms after stabilization")
      ->check(CLI::NonNegativeNumber);
  prove->add_flag("--compare-bases", prove_args.compare_bases, "detect stabilization by comparing reduced bases");
  prove->add_flag("--json", prove_args.json, "print the certificate as JSON");

  ProveArgs gb_args;
  std::size_t gb_steps = 4;
  auto* gb = app.add_subcommand("gb", "report the ideal chain step by step");
  gb->add_option("document", gb_args.document, "JSON identity file or catalog:NAME")->required();
  gb->add_option("--steps", gb_steps, "number of steps")->required();
  gb->add_option("--order", gb_args.order, "monomial order")->check(CLI::IsMember({"lex", "degrevlex"}));
  gb->add_flag("--json", gb_args.json, "print the report as JSON");

  auto* catalog = app.add_subcommand("catalog", "list catalog systems and identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (*eval) return cmd_eval(eval_doc, eval_n);
  if (*prove) return cmd_prove(prove_args);
  if (*gb) return cmd_gb(gb_args, gb_steps);
  if (*catalog) return cmd_catalog();
  return kExitInputError;
}
