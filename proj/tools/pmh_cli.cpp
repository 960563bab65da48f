// Command-line front end for the packed-matrix Hopf algebra library.
// Talks to the shared library exclusively through the C interface.

#include <pmh.h>

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct StringOut {
  char* value = nullptr;
  ~StringOut() { pmh_string_free(value); }
};

int fail_status(pmh_status status) {
  std::fprintf(stderr, "error: %s (%s)\n", pmh_last_error_message(), pmh_status_name(status));
  return status == PMH_ERR_VERIFY ? kExitViolations : kExitUsage;
}

// Feasibility guards for enumeration-backed commands; --unsafe-large lifts
// them.
bool within_cap(int k, const std::string& grading, int degree, bool is_asm) {
  if (is_asm) return degree <= 6;
  if (grading == "size") return degree <= (k == 1 ? 4 : 3);
  return degree <= (k == 1 ? 6 : 5);
}

int refuse_cap(const std::string& what) {
  std::fprintf(stderr,
               "error: %s exceeds the default feasibility cap; pass --unsafe-large to force\n",
               what.c_str());
  return kExitUsage;
}

int run_enumerate(int k, const std::string& grading, int degree, bool as_asm, bool records,
                  bool unsafe_large) {
  if (!unsafe_large && !within_cap(k, grading, degree, as_asm))
    return refuse_cap("degree " + std::to_string(degree));

  pmh_iter* it = nullptr;
  pmh_status s = as_asm ? pmh_enum_asm(degree, &it)
                        : pmh_enum_packed(k, grading.c_str(), degree, &it);
  if (s != PMH_OK) return fail_status(s);
  std::unique_ptr<pmh_iter, decltype(&pmh_iter_free)> guard(it, pmh_iter_free);

  bool first = true;
  while (true) {
    pmh_matrix* m = nullptr;
    int r = pmh_iter_next(it, &m);
    if (r < 0) return fail_status(static_cast<pmh_status>(r));
    if (r == 0) break;
    std::unique_ptr<pmh_matrix, decltype(&pmh_matrix_free)> mg(m, pmh_matrix_free);
    StringOut text;
    if (as_asm) {
      if ((s = pmh_asm_sign(m, &text.value)) != PMH_OK) return fail_status(s);
    } else {
      if ((s = pmh_matrix_format(m, &text.value)) != PMH_OK) return fail_status(s);
    }
    if (records) {
      nlohmann::json record{{"matrix", text.value}};
      std::printf("%s\n", record.dump().c_str());
    } else {
      if (!first) std::printf("\n");
      std::printf("%s\n", text.value);
    }
    first = false;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packed-matrix Hopf algebra toolkit"};
  app.require_subcommand(1);

  // enumerate ----------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "list packed matrices or ASMs");
  int en_k = 1, en_size = -1, en_weight = -1, en_asm_size = -1;
  bool en_records = false, en_unsafe = false, en_asm = false;
  enumerate->add_option("--k", en_k, "alphabet bound")->check(CLI::Range(1, 9));
  auto* en_size_opt = enumerate->add_option("--size", en_size, "matrix size");
  auto* en_weight_opt = enumerate->add_option("--weight", en_weight, "nonzero entry count");
  enumerate->add_flag("--asm", en_asm, "alternating sign matrices (with --size)");
  enumerate->add_flag("--records", en_records, "line-delimited JSON records");
  enumerate->add_flag("--unsafe-large", en_unsafe, "lift the feasibility cap");
  enumerate->callback([&]() {
    if (en_asm) {
      if (en_size < 0) throw CLI::ValidationError("--asm requires --size");
      std::exit(run_enumerate(1, "size", en_size, true, en_records, en_unsafe));
    }
    if (en_size_opt->count() && en_weight_opt->count())
      throw CLI::ValidationError("--size and --weight are mutually exclusive");
    if (en_size >= 0)
      std::exit(run_enumerate(en_k, "size", en_size, false, en_records, en_unsafe));
    if (en_weight >= 0)
      std::exit(run_enumerate(en_k, "weight", en_weight, false, en_records, en_unsafe));
    throw CLI::ValidationError("one of --size or --weight is required");
  });

  // dims ---------------------------------------------------------------
  auto* dims = app.add_subcommand("dims", "dimension tables as CSV");
  int d_k = 1, d_n = 4;
  bool d_size = false, d_weight = false, d_asm = false, d_unsafe = false;
  std::string d_what = "all", d_congruence, d_quotient;
  dims->add_option("--k", d_k, "alphabet bound")->check(CLI::Range(1, 9));
  dims->add_flag("--size", d_size, "grade by size (default)");
  dims->add_flag("--weight", d_weight, "grade by nonzero entry count");
  dims->add_option("--n", d_n, "maximum degree");
  dims->add_option("--what", d_what, "all | generators | primitives");
  dims->add_option("--congruence", d_congruence,
                   "sylvester | plactic | hypoplactic | total");
  dims->add_flag("--asm", d_asm, "alternating-sign-matrix dimensions");
  dims->add_option("--quotient", d_quotient, "statistic list, e.g. io,nw");
  dims->add_flag("--unsafe-large", d_unsafe, "lift the feasibility cap");
  dims->callback([&]() {
    if (d_size && d_weight)
      throw CLI::ValidationError("--size and --weight are mutually exclusive");
    std::string grading = d_weight ? "weight" : "size";
    std::string selector = d_what;
    bool enumerates = false;
    if (!d_congruence.empty()) {
      selector = "congruence:" + d_congruence;
      enumerates = true;
    } else if (d_asm) {
      selector = "asm";
      enumerates = true;
    } else if (!d_quotient.empty()) {
      selector = "quotient:" + d_quotient;
      enumerates = true;
    }
    if (enumerates && !d_unsafe && !within_cap(d_k, grading, d_n, d_asm || !d_quotient.empty()))
      std::exit(refuse_cap("degree " + std::to_string(d_n)));
    StringOut csv;
    pmh_status s = pmh_dims_csv(selector.c_str(), d_k, grading.c_str(), d_n, &csv.value);
    if (s != PMH_OK) std::exit(fail_status(s));
    std::fputs(csv.value, stdout);
    std::exit(0);
  });

  // stats --------------------------------------------------------------
  auto* stats = app.add_subcommand("stats", "six-vertex statistic histograms as CSV");
  int st_n = 3;
  bool st_unsafe = false;
  stats->add_option("--n", st_n, "ASM size")->required();
  stats->add_flag("--unsafe-large", st_unsafe, "lift the feasibility cap");
  stats->callback([&]() {
    if (!st_unsafe && st_n > 6) std::exit(refuse_cap("size " + std::to_string(st_n)));
    StringOut csv;
    pmh_status s = pmh_asm_stats_csv(st_n, &csv.value);
    if (s != PMH_OK) std::exit(fail_status(s));
    std::fputs(csv.value, stdout);
    std::exit(0);
  });

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite, v_fault;
  int v_k = 1, v_max_size = 3;
  unsigned v_seed = 1;
  verify->add_option("suite", v_suite,
                     "hopf | congruences | asm-closure | asm-morphisms | embeddings | all")
      ->required();
  verify->add_option("--k", v_k, "alphabet bound")->check(CLI::Range(1, 9));
  verify->add_option("--max-size", v_max_size, "size budget");
  verify->add_option("--seed", v_seed, "sampling seed");
  verify->add_option("--inject-fault", v_fault,
                     "drop-shuffle-term | broken-congruence | non-closed-image");
  verify->callback([&]() {
    StringOut report;
    pmh_status s = pmh_verify(v_suite.c_str(), v_k, v_max_size, v_seed,
                              v_fault.empty() ? nullptr : v_fault.c_str(), &report.value);
    if (report.value) std::fputs(report.value, stdout);
    if (s == PMH_OK) std::exit(0);
    if (s == PMH_ERR_VERIFY) std::exit(kExitViolations);
    std::exit(fail_status(s));
  });

  // oeis-check -----------------------------------------------------------
  auto* oeis = app.add_subcommand("oeis-check", "compare against vendored sequence prefixes");
  oeis->callback([&]() {
    StringOut report;
    pmh_status s = pmh_oeis_check(&report.value);
    if (report.value) std::fputs(report.value, stdout);
    std::exit(s == PMH_OK ? 0 : (s == PMH_ERR_VERIFY ? kExitViolations : fail_status(s)));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
