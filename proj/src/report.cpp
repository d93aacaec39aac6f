#include "positroid/report.hpp"

#include <sstream>

#include "positroid/error.hpp"
#include "positroid/necklace.hpp"
#include "positroid/rewrite.hpp"

namespace positroid {

namespace {

std::string relation_line(const Relation& r) {
  return "[" + std::string(relation_kind_name(r.kind)) + "] " + format_word(r.lhs) + " = " + format_word(r.rhs);
}

std::string analysis_text(const DecoratedPermutation& p) {
  const QuiverPresentation qp = gabriel_quiver(p);
  const int n = qp.n;
  std::ostringstream os;
  os << "permutation " << format_permutation(p) << "\n";
  os << "n " << n << "\n";
  os << "k " << qp.k << "\n";
  os << "necklace " << format_necklace(necklace_from_permutation(p)) << "\n";

  std::string present, absent;
  for (int i = 1; i <= n; ++i) {
    std::string x = "x" + std::to_string(i);
    (qp.adjacent_x[static_cast<std::size_t>(i - 1)] ? present : absent) += " " + x;
  }
  for (int i = 1; i <= n; ++i) {
    std::string y = "y" + std::to_string(i);
    (qp.adjacent_y[static_cast<std::size_t>(i - 1)] ? present : absent) += " " + y;
  }
  os << "adjacent arrows:" << present << "\n";
  os << "absent adjacent:" << (absent.empty() ? " none" : absent) << "\n";
  os << "nonadjacent arrows:" << (qp.nonadjacent.empty() ? " none" : "") << "\n";
  for (const ArrowDatum& a : qp.nonadjacent)
    os << "  " << a.from << " -> " << a.to << "  X:Y " << a.X << ":" << a.Y << "  reach " << a.reach_x << ","
       << a.reach_y << "\n";

  std::vector<Relation> circ = relations_circ(n, qp.k, qp.nonadjacent);
  os << "relations (cancellative closure of):\n";
  for (const Relation& r : circ) os << "  " << relation_line(r) << "\n";

  QuiverPresentation full = qp;
  full.relations_circ = circ;
  try {
    fill_admissible(full);
    os << "substitutions:" << (full.substitutions.empty() ? " none" : "") << "\n";
    for (const Substitution& s : full.substitutions)
      os << "  " << format_symbol(s.symbol) << " := " << format_word(s.word) << "\n";
    os << "admissible relations:\n";
    for (const Relation& r : full.relations_admissible) os << "  " << relation_line(r) << "\n";
  } catch (const Error& e) {
    os << "admissible relations: unavailable (" << error_code_name(e.code()) << ": " << e.what() << ")\n";
  }
  return os.str();
}

}  // namespace

std::string render_analysis(const DecoratedPermutation& p, AnalysisFormat format) {
  if (!is_connected(p)) throw Error(ErrorCode::NotConnected, "permutation is not connected: " + format_permutation(p));
  switch (format) {
    case AnalysisFormat::Text:
      return analysis_text(p);
    case AnalysisFormat::Json: {
      Json out;
      out["permutation"] = to_json(p);
      out["necklace"] = to_json(necklace_from_permutation(p));
      out["presentation"] = to_json(build_presentation(p));
      return out.dump(2) + "\n";
    }
    case AnalysisFormat::Dot: {
      QuiverPresentation qp = gabriel_quiver(p);
      qp.relations_circ = relations_circ(p);
      return to_dot(qp);
    }
  }
  return {};
}

std::string verdict_text(bool arrow_defining, const RelationCounts& c) {
  if (!arrow_defining) return "not arrow-defining";
  return "arrow-defining, X=" + std::to_string(c.X) + " Y=" + std::to_string(c.Y);
}

OracleReport render_oracle(const IndexedModel& m, const OracleQuery& q) {
  OracleReport rep;
  Oracle oracle(m);
  const int n = m.n();
  std::ostringstream os;
  auto pair = [&](int v1, int v2, bool label) {
    if (v1 < 1 || v1 > n || v2 < 1 || v2 > n) throw Error(ErrorCode::OutOfRange, "vertex out of range");
    if (v1 == v2) throw Error(ErrorCode::EqualVertices, "pair needs two distinct vertices");
    bool ad = oracle.arrow_defining(v1, v2);
    RelationCounts c = oracle.relation_numbers(v1, v2);
    if (label) os << v1 << " -> " << v2 << ": ";
    os << verdict_text(ad, c) << "\n";
  };
  if (q.all) {
    for (int v1 = 1; v1 <= n; ++v1)
      for (int v2 = 1; v2 <= n; ++v2)
        if (v1 != v2) pair(v1, v2, true);
  } else if (q.v1 != 0 || q.v2 != 0) {
    pair(q.v1, q.v2, false);
  }
  if (q.relations) {
    DecoratedPermutation p = decorated_permutation(m);
    for (const Relation& r : relations_circ(p)) {
      bool ok = false;
      try {
        ok = oracle.verify_relation(r);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) rep.relations_ok = false;
      os << (ok ? "ok   " : "FAIL ") << relation_line(r) << "\n";
    }
  }
  rep.text = os.str();
  return rep;
}

std::vector<std::string> model_problems(const DimerModel& m, bool* structural) {
  std::vector<std::string> out;
  *structural = false;
  for (const ModelViolation& v : validate_model(m)) out.push_back(std::string(violation_name(v.kind)) + ": " + v.detail);
  if (!out.empty()) {
    *structural = true;
    return out;
  }
  IndexedModel im(m);
  for (const BadConfiguration& b : consistency_check(im)) out.push_back(describe(b));
  return out;
}

}  // namespace positroid
