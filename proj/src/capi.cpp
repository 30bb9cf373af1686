#include "qq/qq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qq/error.hpp"
#include "qq/io.hpp"
#include "qq/lpa.hpp"
#include "qq/report.hpp"

struct qq_quiver {
  qq::QuantumQuiver value;
};

struct qq_graph {
  qq::DirectedGraph value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

qq_status map_code(qq::ErrorCode code) {
  switch (code) {
    case qq::ErrorCode::InvalidArgument: return QQ_ERR_INVALID_ARGUMENT;
    case qq::ErrorCode::UnknownId: return QQ_ERR_UNKNOWN_ID;
    case qq::ErrorCode::Validation: return QQ_ERR_VALIDATION;
    case qq::ErrorCode::NonCommutative: return QQ_ERR_NON_COMMUTATIVE;
    case qq::ErrorCode::Parse: return QQ_ERR_PARSE;
    case qq::ErrorCode::Resource: return QQ_ERR_RESOURCE;
  }
  return QQ_ERR_INTERNAL;
}

template <typename F>
qq_status guarded(F&& f) {
  last_error.clear();
  last_line = 0;
  last_column = 0;
  try {
    f();
    return QQ_OK;
  } catch (const qq::ParseError& e) {
    last_error = e.what();
    last_line = e.line();
    last_column = e.column();
    return QQ_ERR_PARSE;
  } catch (const qq::Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QQ_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QQ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QQ_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw qq::InvalidArgument(std::string(what) + " must not be NULL");
}

qq_verdict to_c(qq::report::Verdict v) {
  switch (v) {
    case qq::report::Verdict::Affirmative: return QQ_AFFIRMATIVE;
    case qq::report::Verdict::Negative: return QQ_NEGATIVE;
    case qq::report::Verdict::Inconclusive: return QQ_INCONCLUSIVE;
  }
  return QQ_INCONCLUSIVE;
}

template <typename F>
qq_status with_outcome(qq_verdict* verdict, char** out, F&& f) {
  return guarded([&] {
    require(verdict, "verdict");
    require(out, "out");
    const qq::report::Outcome o = f();
    *out = copy_out(o.text);
    *verdict = to_c(o.verdict);
  });
}

}  // namespace

extern "C" {

const char* qq_last_error(void) { return last_error.c_str(); }
size_t qq_last_error_line(void) { return last_line; }
size_t qq_last_error_column(void) { return last_column; }

const char* qq_status_name(qq_status status) {
  switch (status) {
    case QQ_OK: return "ok";
    case QQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QQ_ERR_UNKNOWN_ID: return "unknown id";
    case QQ_ERR_VALIDATION: return "validation error";
    case QQ_ERR_NON_COMMUTATIVE: return "not commutative";
    case QQ_ERR_PARSE: return "parse error";
    case QQ_ERR_RESOURCE: return "resource limit";
    case QQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void qq_string_free(char* s) { std::free(s); }

qq_status qq_quiver_parse(const char* text, qq_quiver** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qq_quiver{qq::parse_qq(text)};
  });
}

qq_status qq_quiver_emit(const qq_quiver* q, char** out) {
  return guarded([&] {
    require(q, "quiver");
    require(out, "out");
    *out = copy_out(qq::emit_qq(q->value));
  });
}

qq_status qq_quiver_equal(const qq_quiver* a, const qq_quiver* b, int* equal) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(equal, "equal");
    *equal = a->value == b->value ? 1 : 0;
  });
}

void qq_quiver_free(qq_quiver* q) { delete q; }

qq_status qq_graph_parse(const char* text, qq_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qq_graph{qq::parse_graph(text)};
  });
}

qq_status qq_graph_emit(const qq_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(qq::emit_graph(g->value));
  });
}

void qq_graph_free(qq_graph* g) { delete g; }

qq_status qq_quiver_from_graph(const qq_graph* g, qq_quiver** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new qq_quiver{qq::from_graph(g->value)};
  });
}

qq_status qq_quiver_to_graph(const qq_quiver* q, qq_graph** out) {
  return guarded([&] {
    require(q, "quiver");
    require(out, "out");
    *out = new qq_graph{qq::to_graph(q->value)};
  });
}

qq_status qq_quiver_info(const qq_quiver* q, int json, char** out) {
  return guarded([&] {
    require(q, "quiver");
    require(out, "out");
    *out = copy_out(qq::report::info(q->value, json != 0));
  });
}

qq_status qq_quiver_complete(const qq_quiver* q, int json, qq_verdict* verdict, char** out) {
  return with_outcome(verdict, out, [&] {
    require(q, "quiver");
    return qq::report::completeness(q->value, json != 0);
  });
}

qq_status qq_quiver_divcheck(const qq_quiver* q, int json, qq_verdict* verdict, char** out) {
  return with_outcome(verdict, out, [&] {
    require(q, "quiver");
    return qq::report::divisibility(q->value, json != 0);
  });
}

qq_status qq_quiver_weak_iso(const qq_quiver* a, const qq_quiver* b, int json,
                             qq_verdict* verdict, char** out) {
  return with_outcome(verdict, out, [&] {
    require(a, "a");
    require(b, "b");
    return qq::report::weak_iso(a->value, b->value, json != 0);
  });
}

qq_status qq_quiver_diagram(const qq_quiver* q, const char* format, char** out) {
  return guarded([&] {
    require(q, "quiver");
    require(format, "format");
    require(out, "out");
    *out = copy_out(qq::emit_diagram(q->value, qq::parse_diagram_format(format)));
  });
}

qq_status qq_quiver_lpa(const qq_quiver* q, const char* format, char** out) {
  return guarded([&] {
    require(q, "quiver");
    require(format, "format");
    require(out, "out");
    *out = copy_out(qq::report::lpa(q->value, format));
  });
}

qq_status qq_quiver_lpa_matrix(const qq_quiver* q, char** out) {
  return guarded([&] {
    require(q, "quiver");
    require(out, "out");
    *out = copy_out(qq::emit_matrix_form(q->value));
  });
}

qq_status qq_quiver_lpa_compare(const qq_quiver* q, int json, qq_verdict* verdict,
                                char** out) {
  return with_outcome(verdict, out, [&] {
    require(q, "quiver");
    return qq::report::lpa_compare(q->value, json != 0);
  });
}

qq_status qq_quiver_monoid(const qq_quiver* q, int json, char** out) {
  return guarded([&] {
    require(q, "quiver");
    require(out, "out");
    *out = copy_out(qq::report::monoid(q->value, json != 0));
  });
}

qq_monoid_eq_options qq_monoid_eq_defaults(void) {
  const qq::MonoidEqOptions d;
  return {d.depth, d.max_k, d.max_m};
}

qq_status qq_quiver_monoid_eq(const qq_quiver* q, const char* lhs, const char* rhs,
                              const qq_monoid_eq_options* options, int json,
                              qq_verdict* verdict, char** out) {
  return with_outcome(verdict, out, [&] {
    require(q, "quiver");
    require(lhs, "lhs");
    require(rhs, "rhs");
    qq::MonoidEqOptions opts;
    if (options) {
      if (options->depth < 0 || options->max_k < 1 || options->max_m < 0) {
        throw qq::InvalidArgument("monoid-eq options out of range");
      }
      opts.depth = options->depth;
      opts.max_k = options->max_k;
      opts.max_m = options->max_m;
    }
    return qq::report::monoid_eq(q->value, lhs, rhs, opts, json != 0);
  });
}

qq_status qq_quiver_verify_witnesses(const qq_quiver* q, const char* class_id, int json,
                                qq_verdict* verdict, char** out) {
  return with_outcome(verdict, out, [&] {
    require(q, "quiver");
    std::optional<std::string> id;
    if (class_id) id = class_id;
    return qq::report::verify_witnesses(q->value, id, json != 0);
  });
}

}  // extern "C"
