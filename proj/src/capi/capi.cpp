#include "pmh.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "asm_algebra.hpp"
#include "hopf.hpp"
#include "matrix.hpp"
#include "oeis.hpp"
#include "order.hpp"
#include "tables.hpp"
#include "verify.hpp"

using namespace pmh;

struct pmh_matrix {
  PackedMatrix value;
};

struct pmh_element {
  std::variant<Element, Tensor> value;
};

struct pmh_iter {
  PackedEnumerator packed;
  std::vector<Asm> asms;
  std::size_t asm_pos = 0;
  bool is_asm = false;
  int alphabet = 1;
};

namespace {

thread_local std::string g_last_error = "no error";

pmh_status fail(pmh_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename F>
pmh_status guarded(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(PMH_ERR_DOMAIN, e.what());
  } catch (const std::domain_error& e) {
    return fail(PMH_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PMH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PMH_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pmh_status write_string(const std::string& s, char** out) {
  if (!out) return fail(PMH_ERR_ARGUMENT, "null output pointer");
  *out = copy_string(s);
  return *out ? PMH_OK : fail(PMH_ERR_INTERNAL, "out of memory");
}

Grading parse_grading(const char* grading) {
  std::string g = grading ? grading : "";
  if (g == "size") return Grading::Size;
  if (g == "weight") return Grading::Weight;
  throw std::invalid_argument("grading must be \"size\" or \"weight\"");
}

template <typename F>
pmh_status make_element(pmh_element** out, F&& compute) {
  if (!out) return fail(PMH_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new pmh_element{compute()};
    return PMH_OK;
  });
}

}  // namespace

extern "C" {

const char* pmh_version(void) { return "1.0.0"; }

const char* pmh_status_name(pmh_status status) {
  switch (status) {
    case PMH_OK: return "ok";
    case PMH_ERR_PARSE: return "parse error";
    case PMH_ERR_DOMAIN: return "domain error";
    case PMH_ERR_ARGUMENT: return "argument error";
    case PMH_ERR_VERIFY: return "verification failed";
    case PMH_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* pmh_last_error_message(void) { return g_last_error.c_str(); }

void pmh_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

pmh_status pmh_matrix_parse(const char* text, int alphabet, pmh_matrix** out) {
  if (!text || !out) return fail(PMH_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    try {
      *out = new pmh_matrix{parse_matrix(text, alphabet)};
    } catch (const std::invalid_argument& e) {
      return fail(PMH_ERR_PARSE, e.what());
    }
    return PMH_OK;
  });
}

pmh_status pmh_matrix_format(const pmh_matrix* m, char** out) {
  if (!m) return fail(PMH_ERR_ARGUMENT, "null matrix");
  return write_string(format_matrix(m->value), out);
}

void pmh_matrix_free(pmh_matrix* m) { delete m; }

int pmh_matrix_size(const pmh_matrix* m) { return m ? m->value.size() : -1; }
int pmh_matrix_weight(const pmh_matrix* m) { return m ? m->value.weight() : -1; }
int pmh_matrix_alphabet(const pmh_matrix* m) { return m ? m->value.alphabet() : -1; }

pmh_status pmh_matrix_transpose(const pmh_matrix* m, pmh_matrix** out) {
  if (!m || !out) return fail(PMH_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pmh_matrix{m->value.transpose()};
    return PMH_OK;
  });
}

pmh_status pmh_matrix_over(const pmh_matrix* a, const pmh_matrix* b, pmh_matrix** out) {
  if (!a || !b || !out) return fail(PMH_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pmh_matrix{over(a->value, b->value)};
    return PMH_OK;
  });
}

pmh_status pmh_matrix_under(const pmh_matrix* a, const pmh_matrix* b, pmh_matrix** out) {
  if (!a || !b || !out) return fail(PMH_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pmh_matrix{under(a->value, b->value)};
    return PMH_OK;
  });
}

int pmh_matrix_is_connected(const pmh_matrix* m) {
  if (!m) return fail(PMH_ERR_ARGUMENT, "null matrix");
  int result = 0;
  pmh_status s = guarded([&] {
    result = m->value.is_connected() ? 1 : 0;
    return PMH_OK;
  });
  return s == PMH_OK ? result : s;
}

int pmh_matrix_is_anti_connected(const pmh_matrix* m) {
  if (!m) return fail(PMH_ERR_ARGUMENT, "null matrix");
  int result = 0;
  pmh_status s = guarded([&] {
    result = m->value.is_anti_connected() ? 1 : 0;
    return PMH_OK;
  });
  return s == PMH_OK ? result : s;
}

pmh_status pmh_matrix_leq(const pmh_matrix* lo, const pmh_matrix* hi, int* out) {
  if (!lo || !hi || !out) return fail(PMH_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = leq_M(lo->value, hi->value) ? 1 : 0;
    return PMH_OK;
  });
}

/* ------------------------------------------------------------------ */

pmh_status pmh_count(int k, int n, int l, char** out) {
  return guarded([&] { return write_string(count_packed(k, n, l).str(), out); });
}

pmh_status pmh_count_by_size(int k, int n, char** out) {
  return guarded([&] { return write_string(count_packed_by_size(k, n).str(), out); });
}

pmh_status pmh_count_by_weight(int k, int l, char** out) {
  return guarded([&] { return write_string(count_packed_by_weight(k, l).str(), out); });
}

pmh_status pmh_enum_packed(int k, const char* grading, int degree, pmh_iter** out) {
  if (!out) return fail(PMH_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    Grading g = parse_grading(grading);
    if (k < 1 || degree < 0) throw std::invalid_argument("k >= 1 and degree >= 0 required");
    auto it = new pmh_iter{g == Grading::Size ? PackedEnumerator::by_size(k, degree)
                                              : PackedEnumerator::by_weight(k, degree),
                           {}, 0, false, k};
    *out = it;
    return PMH_OK;
  });
}

pmh_status pmh_enum_asm(int n, pmh_iter** out) {
  if (!out) return fail(PMH_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    if (n < 0) throw std::invalid_argument("n >= 0 required");
    auto it = new pmh_iter{PackedEnumerator::by_size(1, 0), enumerate_asm(n), 0, true, 1};
    *out = it;
    return PMH_OK;
  });
}

int pmh_iter_next(pmh_iter* it, pmh_matrix** out) {
  if (!it || !out) return fail(PMH_ERR_ARGUMENT, "null argument");
  int produced = 0;
  pmh_status s = guarded([&] {
    if (it->is_asm) {
      if (it->asm_pos < it->asms.size()) {
        *out = new pmh_matrix{it->asms[it->asm_pos++].support()};
        produced = 1;
      }
      return PMH_OK;
    }
    if (auto m = it->packed.next()) {
      *out = new pmh_matrix{std::move(*m)};
      produced = 1;
    }
    return PMH_OK;
  });
  return s == PMH_OK ? produced : s;
}

void pmh_iter_free(pmh_iter* it) { delete it; }

/* ------------------------------------------------------------------ */

pmh_status pmh_product(const pmh_matrix* a, const pmh_matrix* b, pmh_element** out) {
  if (!a || !b) return fail(PMH_ERR_ARGUMENT, "null matrix");
  return make_element(out, [&] { return product_F(a->value, b->value); });
}

pmh_status pmh_dual_product(const pmh_matrix* a, const pmh_matrix* b, pmh_element** out) {
  if (!a || !b) return fail(PMH_ERR_ARGUMENT, "null matrix");
  return make_element(out, [&] { return dual_product_F(a->value, b->value); });
}

pmh_status pmh_coproduct(const pmh_matrix* m, pmh_element** out) {
  if (!m) return fail(PMH_ERR_ARGUMENT, "null matrix");
  if (!out) return fail(PMH_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new pmh_element{coproduct_F(m->value)};
    return PMH_OK;
  });
}

pmh_status pmh_dual_coproduct(const pmh_matrix* m, pmh_element** out) {
  if (!m) return fail(PMH_ERR_ARGUMENT, "null matrix");
  if (!out) return fail(PMH_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new pmh_element{dual_coproduct_F(m->value)};
    return PMH_OK;
  });
}

pmh_status pmh_antipode(const pmh_matrix* m, pmh_element** out) {
  if (!m) return fail(PMH_ERR_ARGUMENT, "null matrix");
  return make_element(out, [&] { return antipode_F(m->value); });
}

size_t pmh_element_term_count(const pmh_element* e) {
  if (!e) return 0;
  return std::visit([](const auto& v) { return v.term_count(); }, e->value);
}

pmh_status pmh_element_format(const pmh_element* e, char** out) {
  if (!e) return fail(PMH_ERR_ARGUMENT, "null element");
  return guarded([&] {
    std::string text = std::visit([](const auto& v) { return serialize(v); }, e->value);
    return write_string(text, out);
  });
}

void pmh_element_free(pmh_element* e) { delete e; }

/* ------------------------------------------------------------------ */

pmh_status pmh_asm_sign(const pmh_matrix* support, char** out_text) {
  if (!support) return fail(PMH_ERR_ARGUMENT, "null matrix");
  return guarded([&] {
    auto a = asm_from_packed(support->value);
    if (!a) return fail(PMH_ERR_DOMAIN, "support carries no alternating sign matrix");
    return write_string(format_asm(*a), out_text);
  });
}

int pmh_is_asm_support(const pmh_matrix* m) {
  if (!m) return fail(PMH_ERR_ARGUMENT, "null matrix");
  return is_asm_support(m->value) ? 1 : 0;
}

pmh_status pmh_asm_stats(const pmh_matrix* support, long out_stats[6]) {
  if (!support || !out_stats) return fail(PMH_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto a = asm_from_packed(support->value);
    if (!a) return fail(PMH_ERR_DOMAIN, "support carries no alternating sign matrix");
    VertexStats st = six_vertex_stats(*a);
    out_stats[0] = st.ne;
    out_stats[1] = st.sw;
    out_stats[2] = st.se;
    out_stats[3] = st.nw;
    out_stats[4] = st.oi;
    out_stats[5] = st.io;
    return PMH_OK;
  });
}

/* ------------------------------------------------------------------ */

pmh_status pmh_dims_csv(const char* what, int k, const char* grading, int max_degree,
                        char** out) {
  if (!what) return fail(PMH_ERR_ARGUMENT, "null selector");
  return guarded([&] {
    try {
      return write_string(dims_csv(what, k, parse_grading(grading), max_degree), out);
    } catch (const std::invalid_argument& e) {
      return fail(PMH_ERR_ARGUMENT, e.what());
    }
  });
}

pmh_status pmh_asm_stats_csv(int n, char** out) {
  return guarded([&] { return write_string(asm_stats_csv(n), out); });
}

pmh_status pmh_verify(const char* suite, int k, int max_size, unsigned seed, const char* fault,
                      char** out_report) {
  if (!suite) return fail(PMH_ERR_ARGUMENT, "null suite");
  return guarded([&] {
    SuiteOptions options;
    options.k = k;
    options.max_size = max_size;
    options.seed = seed;
    options.inject_fault = fault ? fault : "";
    VerifyReport report;
    try {
      report = run_suite(suite, options);
    } catch (const std::invalid_argument& e) {
      return fail(PMH_ERR_ARGUMENT, e.what());
    }
    if (out_report) {
      pmh_status ws = write_string(report.to_text(), out_report);
      if (ws != PMH_OK) return ws;
    }
    return report.all_ok() ? PMH_OK : fail(PMH_ERR_VERIFY, "violations found");
  });
}

pmh_status pmh_oeis_check(char** out_report) {
  return guarded([&] {
    OeisReport report = oeis_check();
    if (out_report) {
      pmh_status ws = write_string(report.to_text(), out_report);
      if (ws != PMH_OK) return ws;
    }
    return report.all_ok() ? PMH_OK : fail(PMH_ERR_VERIFY, "sequence mismatches found");
  });
}

}  // extern "C"
