#include "positroid/positroid.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "positroid/crosscheck.hpp"
#include "positroid/dimer.hpp"
#include "positroid/error.hpp"
#include "positroid/necklace.hpp"
#include "positroid/perm.hpp"
#include "positroid/plabic.hpp"
#include "positroid/report.hpp"
#include "positroid/rewrite.hpp"

using namespace positroid;

struct pos_perm {
  DecoratedPermutation p;
};

struct pos_model {
  IndexedModel im;
};

namespace {

thread_local std::string g_last_error;

pos_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedToken:
    case ErrorCode::SizeTooSmall:
    case ErrorCode::NotABijection:
    case ErrorCode::UndecoratedFixedPoint:
    case ErrorCode::DecoratedNonFixedPoint:
    case ErrorCode::ParseError:
      return POS_ERR_PARSE;
    case ErrorCode::NotConnected:
      return POS_ERR_NOT_CONNECTED;
    case ErrorCode::InvalidModel:
      return POS_ERR_INVALID_MODEL;
    case ErrorCode::InconsistentModel:
    case ErrorCode::NonterminatingStrand:
      return POS_ERR_INCONSISTENT;
    case ErrorCode::EqualVertices:
    case ErrorCode::OutOfRange:
    case ErrorCode::SymbolNotRealizable:
      return POS_ERR_ARGUMENT;
    case ErrorCode::CapExceeded:
      return POS_ERR_CAP_EXCEEDED;
    default:
      return POS_ERR_INTERNAL;
  }
}

template <class F>
pos_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    g_last_error = std::string(error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return POS_ERR_INTERNAL;
  }
}

pos_status fail(pos_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Relation parse_relation(const std::string& text, int n) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw Error(ErrorCode::MalformedToken, "relation needs '=': " + text);
  return Relation{RelationKind::Nonadjacent, parse_word(text.substr(0, eq), n), parse_word(text.substr(eq + 1), n)};
}

}  // namespace

extern "C" {

const char* pos_status_name(pos_status status) {
  switch (status) {
    case POS_OK: return "ok";
    case POS_ERR_PARSE: return "parse error";
    case POS_ERR_NOT_CONNECTED: return "not connected";
    case POS_ERR_INVALID_MODEL: return "invalid model";
    case POS_ERR_INCONSISTENT: return "inconsistent model";
    case POS_ERR_MISMATCH: return "mismatch";
    case POS_ERR_ARGUMENT: return "bad argument";
    case POS_ERR_CAP_EXCEEDED: return "cap exceeded";
    case POS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* pos_last_error(void) { return g_last_error.c_str(); }

void pos_string_free(char* s) { std::free(s); }

pos_status pos_perm_parse(const char* text, pos_perm** out) {
  if (!text || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pos_perm{parse_permutation(text)};
    return POS_OK;
  });
}

void pos_perm_free(pos_perm* p) { delete p; }

int pos_perm_size(const pos_perm* p) { return p ? p->p.size() : 0; }

int pos_perm_is_connected(const pos_perm* p) { return p && is_connected(p->p) ? 1 : 0; }

int pos_perm_noninversions(const pos_perm* p) { return p ? noninversion_count(p->p) : 0; }

pos_status pos_perm_format(const pos_perm* p, char** out) {
  if (!p || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(format_permutation(p->p));
    return POS_OK;
  });
}

pos_status pos_perm_enumerate(int n, pos_perm*** out, size_t* count) {
  if (!out || !count) return fail(POS_ERR_ARGUMENT, "null argument");
  if (n < 2) return fail(POS_ERR_ARGUMENT, "n must be at least 2");
  return guarded([&] {
    auto perms = connected_permutations(n);
    auto** arr = new pos_perm*[perms.size()];
    for (std::size_t i = 0; i < perms.size(); ++i) arr[i] = new pos_perm{std::move(perms[i])};
    *out = arr;
    *count = perms.size();
    return POS_OK;
  });
}

void pos_perm_array_free(pos_perm** perms, size_t count) {
  if (!perms) return;
  for (size_t i = 0; i < count; ++i) delete perms[i];
  delete[] perms;
}

pos_status pos_necklace_json(const pos_perm* p, char** out) {
  if (!p || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(to_json(necklace_from_permutation(p->p)).dump());
    return POS_OK;
  });
}

pos_status pos_analyze(const pos_perm* p, pos_format format, char** out) {
  if (!p || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    AnalysisFormat f = format == POS_FORMAT_JSON  ? AnalysisFormat::Json
                       : format == POS_FORMAT_DOT ? AnalysisFormat::Dot
                                                  : AnalysisFormat::Text;
    *out = dup(render_analysis(p->p, f));
    return POS_OK;
  });
}

pos_status pos_model_realize(const pos_perm* p, pos_bridge_order order, uint64_t seed, pos_model** out) {
  if (!p || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    BridgeOrder o = order == POS_ORDER_LEX_GREATEST ? BridgeOrder::LexGreatest
                    : order == POS_ORDER_RANDOM     ? BridgeOrder::Random
                                                    : BridgeOrder::LexLeast;
    *out = new pos_model{IndexedModel(realize(p->p, o, seed))};
    return POS_OK;
  });
}

pos_status pos_model_from_json(const char* text, pos_model** out) {
  if (!text || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    DimerModel m;
    try {
      m = model_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::InvalidModel, std::string("malformed model JSON: ") + e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw Error(ErrorCode::InvalidModel, e.what());
      throw;
    }
    bool structural = false;
    std::vector<std::string> problems = model_problems(m, &structural);
    if (structural) throw Error(ErrorCode::InvalidModel, problems.front());
    *out = new pos_model{IndexedModel(m)};
    return POS_OK;
  });
}

void pos_model_free(pos_model* m) { delete m; }

pos_status pos_model_to_json(const pos_model* m, char** out) {
  if (!m || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(to_json(m->im.raw()).dump(2) + "\n");
    return POS_OK;
  });
}

pos_status pos_model_check(const pos_model* m, char** problems) {
  if (!m) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    bool structural = false;
    std::vector<std::string> lines = model_problems(m->im.raw(), &structural);
    std::string text;
    for (const std::string& l : lines) text += l + "\n";
    if (problems) *problems = dup(text);
    if (lines.empty()) return POS_OK;
    g_last_error = lines.front();
    return structural ? POS_ERR_INVALID_MODEL : POS_ERR_INCONSISTENT;
  });
}

pos_status pos_model_permutation(const pos_model* m, pos_perm** out) {
  if (!m || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pos_perm{decorated_permutation(m->im)};
    return POS_OK;
  });
}

pos_status pos_oracle_pair(const pos_model* m, int v1, int v2, int* arrow_defining, int* x, int* y) {
  if (!m) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const int n = m->im.n();
    if (v1 < 1 || v1 > n || v2 < 1 || v2 > n) throw Error(ErrorCode::OutOfRange, "vertex out of range");
    if (v1 == v2) throw Error(ErrorCode::EqualVertices, "pair needs two distinct vertices");
    Oracle oracle(m->im);
    RelationCounts c = oracle.relation_numbers(v1, v2);
    if (arrow_defining) *arrow_defining = oracle.arrow_defining(v1, v2) ? 1 : 0;
    if (x) *x = c.X;
    if (y) *y = c.Y;
    return POS_OK;
  });
}

pos_status pos_oracle_report(const pos_model* m, int all, int v1, int v2, int relations, char** out) {
  if (!m || !out) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    OracleReport rep = render_oracle(m->im, OracleQuery{all != 0, v1, v2, relations != 0});
    *out = dup(rep.text);
    if (!rep.relations_ok) {
      g_last_error = "relation verification failed";
      return POS_ERR_MISMATCH;
    }
    return POS_OK;
  });
}

pos_status pos_crosscheck(const pos_perm* const* perms, size_t count, const pos_crosscheck_options* opt,
                          char** report_json) {
  if ((!perms && count) || !report_json) return fail(POS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    pos_crosscheck_options o = opt ? *opt : pos_crosscheck_options{POS_ORDER_LEX_LEAST, 0, 1, nullptr, 0};
    std::vector<DecoratedPermutation> list;
    std::string canonical;
    for (size_t i = 0; i < count; ++i) {
      if (!is_connected(perms[i]->p))
        throw Error(ErrorCode::NotConnected, "permutation is not connected: " + format_permutation(perms[i]->p));
      list.push_back(perms[i]->p);
      canonical += format_permutation(perms[i]->p) + "\n";
    }
    std::vector<std::string> extras;
    for (size_t i = 0; i < o.extra_count; ++i) {
      extras.emplace_back(o.extra_relations[i]);
      canonical += "relation " + extras.back() + "\n";
    }
    CrosscheckOptions co;
    co.order = o.order == POS_ORDER_LEX_GREATEST ? BridgeOrder::LexGreatest
               : o.order == POS_ORDER_RANDOM     ? BridgeOrder::Random
                                                 : BridgeOrder::LexLeast;
    co.seed = o.seed;
    canonical += "order " + std::string(bridge_order_name(co.order)) + " seed " + std::to_string(co.seed) + "\n";

    // Extra relations are parsed per size; a size with no permutations never
    // parses them.
    std::vector<CrosscheckResult> results;
    if (extras.empty()) {
      results = crosscheck_many(list, co, o.threads);
    } else {
      for (const DecoratedPermutation& p : list) {
        CrosscheckOptions local = co;
        for (const std::string& e : extras) local.extra_relations.push_back(parse_relation(e, p.size()));
        results.push_back(crosscheck(p, local));
      }
    }

    bool ok = true;
    Json rs = Json::array();
    for (const CrosscheckResult& r : results) {
      ok = ok && r.ok;
      rs.push_back(to_json(r));
    }
    Json rep;
    rep["command"] = "crosscheck";
    rep["input_digest"] = digest(canonical);
    rep["outcome"] = ok ? "ok" : "mismatch";
    rep["checked"] = results.size();
    rep["results"] = std::move(rs);
    *report_json = dup(rep.dump(2) + "\n");
    if (!ok) {
      g_last_error = "crosscheck mismatch";
      return POS_ERR_MISMATCH;
    }
    return POS_OK;
  });
}

}  // extern "C"
