#include "positroid/crosscheck.hpp"

#include <atomic>
#include <cstdio>
#include <thread>

#include "positroid/error.hpp"
#include "positroid/rewrite.hpp"

namespace positroid {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

std::string pair_text(int v1, int v2) { return "(" + std::to_string(v1) + "," + std::to_string(v2) + ")"; }

std::string counts_text(const RelationCounts& c) {
  return "X=" + std::to_string(c.X) + " Y=" + std::to_string(c.Y);
}

}  // namespace

CrosscheckResult crosscheck(const DecoratedPermutation& p, const CrosscheckOptions& opt) {
  CrosscheckResult r;
  r.permutation = format_permutation(p);
  auto fail = [&](std::string check, std::string witness, std::string expected, std::string got) {
    r.ok = false;
    if (r.failures.size() < kMaxWitnesses)
      r.failures.push_back({std::move(check), std::move(witness), std::move(expected), std::move(got)});
  };
  try {
    DimerModel model = realize(p, opt.order, opt.seed);
    IndexedModel im(model);
    DecoratedPermutation back = decorated_permutation(im);
    if (back != p) fail("roundtrip", "", r.permutation, format_permutation(back));

    const int n = p.size();
    Oracle oracle(im);
    for (int v1 = 1; v1 <= n; ++v1) {
      for (int v2 = 1; v2 <= n; ++v2) {
        if (v1 == v2) continue;
        ++r.pairs_checked;
        bool want = is_arrow_defining(p, v1, v2);
        bool got = oracle.arrow_defining(v1, v2);
        if (want != got)
          fail("arrow_defining", pair_text(v1, v2), want ? "true" : "false", got ? "true" : "false");
        RelationCounts cw = relation_numbers(p, v1, v2);
        RelationCounts cg = oracle.relation_numbers(v1, v2);
        if (cw.X != cg.X || cw.Y != cg.Y) fail("relation_numbers", pair_text(v1, v2), counts_text(cw), counts_text(cg));
      }
    }
    const int k = noninversion_count(p);
    for (int j = 1; j <= n; ++j)
      if (!oracle.equivalent(oracle.x_word(j, k), oracle.y_word(j, n - k)))
        fail("grassmannian", "j=" + std::to_string(j), "equivalent", "not equivalent");

    std::vector<Relation> rels;
    if (opt.verify_relations) {
      QuiverPresentation qp = build_presentation(p);
      rels = qp.relations_circ;
      // A substitution x'_i for a missing x_i is itself a relation x_i = x'_i.
      for (const Substitution& s : qp.substitutions)
        rels.push_back({s.symbol.kind == Symbol::Kind::X ? RelationKind::CyclicX : RelationKind::CyclicY,
                        {s.symbol}, s.word});
    }
    rels.insert(rels.end(), opt.extra_relations.begin(), opt.extra_relations.end());
    for (const Relation& rel : rels) {
      ++r.relations_checked;
      std::string text = format_word(rel.lhs) + " = " + format_word(rel.rhs);
      try {
        if (!oracle.verify_relation(rel)) fail("relation", text, "holds", "fails");
      } catch (const Error& e) {
        fail("relation", text, "holds", std::string(error_code_name(e.code())) + ": " + e.what());
      }
    }
    r.states_explored = oracle.states_explored();
  } catch (const Error& e) {
    fail("pipeline", std::string(error_code_name(e.code())), "no error", e.what());
  }
  return r;
}

std::vector<CrosscheckResult> crosscheck_many(const std::vector<DecoratedPermutation>& perms,
                                              const CrosscheckOptions& opt, int threads) {
  std::vector<CrosscheckResult> out(perms.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < perms.size(); i = next++) out[i] = crosscheck(perms[i], opt);
  };
  const int workers = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

Json to_json(const CrosscheckResult& r) {
  Json out;
  out["permutation"] = r.permutation;
  out["outcome"] = r.ok ? "ok" : "mismatch";
  out["pairs_checked"] = r.pairs_checked;
  out["relations_checked"] = r.relations_checked;
  out["states_explored"] = r.states_explored;
  Json fails = Json::array();
  for (const CheckFailure& f : r.failures) {
    Json jf;
    jf["check"] = f.check;
    jf["witness"] = f.witness;
    jf["expected"] = f.expected;
    jf["got"] = f.got;
    fails.push_back(std::move(jf));
  }
  out["failures"] = std::move(fails);
  return out;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace positroid
