// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "positroid/dimer.hpp"
#include "positroid/error.hpp"
#include "positroid/necklace.hpp"
#include "positroid/plabic.hpp"
#include "positroid/presentation.hpp"
#include "positroid/report.hpp"
#include "positroid/rewrite.hpp"

using namespace positroid;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::set<std::string> absent_adjacent(const QuiverPresentation& qp) {
  std::set<std::string> out;
  for (int i = 1; i <= qp.n; ++i) {
    if (!qp.adjacent_x[static_cast<std::size_t>(i - 1)]) out.insert("x" + std::to_string(i));
    if (!qp.adjacent_y[static_cast<std::size_t>(i - 1)]) out.insert("y" + std::to_string(i));
  }
  return out;
}

// Connected permutations the desk-scale sweeps run over: all of n <= 5 and a
// fixed sample of 50 at n = 6.
std::vector<DecoratedPermutation> sweep() {
  std::vector<DecoratedPermutation> out;
  for (int n = 3; n <= 5; ++n) {
    auto c = connected_permutations(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  auto six = connected_permutations(6);
  std::mt19937_64 rng(20240601);
  std::vector<DecoratedPermutation> pick;
  std::sample(six.begin(), six.end(), std::back_inserter(pick), 50, rng);
  out.insert(out.end(), pick.begin(), pick.end());
  return out;
}

Outcome golden_first() {
  Outcome o;
  DecoratedPermutation p = parse_permutation("2 5 6 1 3 4");
  QuiverPresentation qp = build_presentation(p);
  if (qp.k != 3) o.fail("k = " + std::to_string(qp.k));
  std::string nk = format_necklace(necklace_from_permutation(p));
  if (nk != "(123, 234, 134, 145, 156, 126)") o.fail("necklace " + nk);
  if (qp.nonadjacent != std::vector<ArrowDatum>{{3, 1, 4, 2, 2, 1, false}}) o.fail("nonadjacent arrows differ");
  if (absent_adjacent(qp) != std::set<std::string>{"y1", "y2"}) o.fail("absent adjacent arrows differ");
  std::string text = render_analysis(p, AnalysisFormat::Text);
  if (text.find("  3 -> 1  X:Y 2:1") == std::string::npos) o.fail("analyze output lacks 3 -> 1 2:1");
  return o;
}

Outcome golden_final() {
  Outcome o;
  DecoratedPermutation p = parse_permutation("4 5 8 2 9 1 6 7 3");
  QuiverPresentation qp = build_presentation(p);
  if (qp.k != 4) o.fail("k = " + std::to_string(qp.k));
  std::set<std::tuple<int, int, int>> arrows;
  for (const ArrowDatum& d : qp.nonadjacent) arrows.insert({d.from, d.to, d.Y});
  if (arrows != std::set<std::tuple<int, int, int>>{{6, 9, 3}, {2, 5, 2}}) o.fail("nonadjacent arrows differ");
  if (absent_adjacent(qp) != std::set<std::string>{"x6", "x7", "x8"}) o.fail("absent adjacent arrows differ");
  for (const ArrowDatum& d : qp.nonadjacent) {
    int want = d.from == 6 ? 2 : 1;
    if (d.X != want) o.fail("X of " + std::to_string(d.from) + " -> " + std::to_string(d.to));
  }
  // The X values only matter through the cyclic relations they generate;
  // those must hold in the dimer algebra.
  IndexedModel im(realize(p));
  Oracle oracle(im);
  for (const Relation& r : qp.relations_circ) {
    if (r.kind != RelationKind::CyclicX && r.kind != RelationKind::CyclicY) continue;
    if (!oracle.verify_relation(r)) o.fail("cyclic relation fails: " + format_word(r.lhs) + " = " + format_word(r.rhs));
  }
  return o;
}

Outcome cryptomorphism() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 3; n <= 8; ++n)
    for (const auto& p : connected_permutations(n)) {
      GrassmannNecklace nk = necklace_from_permutation(p);
      for (int v1 = 1; v1 <= n; ++v1)
        for (int v2 = 1; v2 <= n; ++v2) {
          if (v1 == v2) continue;
          ++pairs;
          if (is_arrow_defining(p, v1, v2) != is_arrow_defining_necklace(nk, v1, v2) ||
              relation_numbers(p, v1, v2) != relation_numbers_necklace(nk, v1, v2))
            o.fail(format_permutation(p) + " pair " + std::to_string(v1) + "," + std::to_string(v2));
        }
    }
  if (o.ok) o.note = std::to_string(pairs) + " ordered pairs";
  return o;
}

Outcome roundtrip() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : connected_permutations(n)) {
      ++count;
      DimerModel m = realize(p);
      if (!validate_model(m).empty()) {
        o.fail(format_permutation(p) + " invalid");
        continue;
      }
      IndexedModel im(m);
      if (!consistency_check(im).empty()) o.fail(format_permutation(p) + " inconsistent");
      else if (decorated_permutation(im) != p) o.fail(format_permutation(p) + " roundtrip");
    }
  if (o.ok) o.note = std::to_string(count) + " permutations";
  return o;
}

Outcome oracle_vs_formula(const std::vector<DecoratedPermutation>& perms) {
  Outcome o;
  std::size_t states = 0;
  for (const auto& p : perms) {
    IndexedModel im(realize(p));
    Oracle oracle(im);
    const int n = p.size();
    try {
      for (int v1 = 1; v1 <= n; ++v1)
        for (int v2 = 1; v2 <= n; ++v2) {
          if (v1 == v2) continue;
          if (oracle.arrow_defining(v1, v2) != is_arrow_defining(p, v1, v2) ||
              oracle.relation_numbers(v1, v2) != relation_numbers(p, v1, v2))
            o.fail(format_permutation(p) + " pair " + std::to_string(v1) + "," + std::to_string(v2));
        }
    } catch (const Error& e) {
      o.fail(format_permutation(p) + ": " + e.what());  // includes the cap being hit
    }
    states = std::max(states, oracle.largest_class());
  }
  if (o.ok) o.note = std::to_string(perms.size()) + " models, largest class " + std::to_string(states);
  return o;
}

Outcome relation_soundness() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& p : connected_permutations(n)) {
      IndexedModel im(realize(p));
      Oracle oracle(im);
      for (const Relation& r : relations_circ(p)) {
        ++checked;
        if (!oracle.verify_relation(r))
          o.fail(format_permutation(p) + ": " + format_word(r.lhs) + " = " + format_word(r.rhs));
      }
    }
  IndexedModel im(realize(parse_permutation("458291673")));
  Oracle oracle(im);
  Relation closure{RelationKind::Nonadjacent, parse_word("A(2,5) x5 A(6,9)", 9), parse_word("y1 y9", 9)};
  if (!oracle.verify_relation(closure)) o.fail("closure relation fails on 458291673");
  if (o.ok) o.note = std::to_string(checked + 1) + " relations";
  return o;
}

PathWord random_walk(const IndexedModel& m, std::mt19937_64& rng, int start, int len) {
  PathWord w{start, {}};
  for (int i = 0; i < len; ++i) {
    const auto& out = m.out_arrows(start);
    if (out.empty()) break;
    int a = out[rng() % out.size()];
    w.arrows.push_back(a);
    start = m.dst(a);
  }
  return w;
}

// p followed by one face cycle at its target, which is [p f].
PathWord times_face(const Oracle& o, const PathWord& p) {
  const IndexedModel& m = o.model();
  for (int a : m.out_arrows(o.target(p)))
    for (bool cl : {false, true}) {
      if (m.face_of(a, cl) < 0) continue;
      PathWord q = p;
      q.arrows.push_back(a);
      PathWord ret = o.return_path(a, cl);
      q.arrows.insert(q.arrows.end(), ret.arrows.begin(), ret.arrows.end());
      return q;
    }
  return p;
}

Outcome grassmannian_and_paths(const std::vector<DecoratedPermutation>& perms) {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t triples = 0;
  for (const auto& p : perms) {
    IndexedModel im(realize(p));
    Oracle oracle(im);
    const int n = p.size(), k = noninversion_count(p);
    for (int j = 1; j <= n; ++j)
      if (!oracle.equivalent(oracle.x_word(j, k), oracle.y_word(j, n - k)))
        o.fail(format_permutation(p) + " grassmannian at " + std::to_string(j));
    const std::string name = format_permutation(p);
    for (int t = 0; t < 1000; ++t, ++triples) {
      int start = static_cast<int>(rng() % static_cast<std::uint64_t>(im.num_vertices()));
      PathWord a = random_walk(im, rng, start, 1 + static_cast<int>(rng() % 4));
      PathWord b = random_walk(im, rng, oracle.target(a), 1 + static_cast<int>(rng() % 4));
      PathWord c = random_walk(im, rng, oracle.target(b), 1 + static_cast<int>(rng() % 4));
      if (oracle.normalize(oracle.concat(a, b)).c_value < oracle.normalize(a).c_value + oracle.normalize(b).c_value ||
          oracle.normalize(oracle.concat(b, c)).c_value < oracle.normalize(b).c_value + oracle.normalize(c).c_value)
        o.fail(name + " superadditivity");
      // Cancellation, both sides: against a member of b's class, b times f,
      // and a random path with the same ends.
      std::vector<PathWord> cls = oracle.equivalence_class(b);
      std::vector<PathWord> others{cls[rng() % cls.size()], times_face(oracle, b),
                                   random_walk(im, rng, oracle.target(a), static_cast<int>(b.arrows.size()))};
      for (const PathWord& q : others) {
        if (oracle.target(q) != oracle.target(b)) continue;
        bool same = oracle.equivalent(b, q);
        if (oracle.equivalent(oracle.concat(a, b), oracle.concat(a, q)) != same ||
            oracle.equivalent(oracle.concat(b, c), oracle.concat(q, c)) != same)
          o.fail(name + " cancellation");
      }
    }
  }
  if (o.ok) o.note = std::to_string(perms.size()) + " models, " + std::to_string(triples) + " triples";
  return o;
}

Outcome representative_independence() {
  Outcome o;
  int used = 0;
  for (int n = 6; n <= 7 && used < 20; ++n)
    for (const auto& p : connected_permutations(n)) {
      if (used == 20) break;
      std::vector<Realization> reps;
      reps.push_back(realize_with_bridges(p, BridgeOrder::LexLeast));
      reps.push_back(realize_with_bridges(p, BridgeOrder::LexGreatest));
      for (std::uint64_t seed : {1, 2, 3}) reps.push_back(realize_with_bridges(p, BridgeOrder::Random, seed));
      std::vector<std::vector<Bridge>> orders;
      for (const auto& r : reps)
        if (std::find(orders.begin(), orders.end(), r.bridges) == orders.end()) orders.push_back(r.bridges);
      if (orders.size() < 2) continue;
      ++used;
      const QuiverPresentation want = build_presentation(p);
      for (const auto& r : reps) {
        IndexedModel im(r.model);
        Oracle oracle(im);
        if (oracle.presentation() != want) o.fail(format_permutation(p) + " presentation depends on bridge order");
      }
    }
  if (used < 20) o.fail("only " + std::to_string(used) + " permutations with two bridge orders");
  if (o.ok) o.note = "20 permutations";
  return o;
}

int run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) o.fail("took longer than " + std::to_string(limit_s) + " s");
  std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s, o.note.empty() ? "" : ": ",
              o.note.c_str());
  std::fflush(stdout);
  return o.ok ? 0 : 1;
}

}  // namespace

int main() {
  const auto perms = sweep();
  int failed = 0;
  failed += run(1, "golden example 2 5 6 1 3 4", 1.0, golden_first);
  failed += run(2, "golden example 4 5 8 2 9 1 6 7 3", 1.0, golden_final);
  failed += run(3, "permutation and necklace formulas agree, n <= 8", 300.0, cryptomorphism);
  failed += run(4, "generator roundtrip, n <= 6", 600.0, roundtrip);
  failed += run(5, "oracle equals formulas", 1800.0, [&] { return oracle_vs_formula(perms); });
  failed += run(6, "relation soundness", 0, relation_soundness);
  failed += run(7, "grassmannian relations, superadditivity, cancellation", 0,
                [&] { return grassmannian_and_paths(perms); });
  failed += run(8, "representative independence", 0, representative_independence);
  return failed;
}
