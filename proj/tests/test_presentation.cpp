#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "positroid/error.hpp"
#include "positroid/necklace.hpp"
#include "positroid/presentation.hpp"

using namespace positroid;

namespace {

bool has_relation(const std::vector<Relation>& rels, const std::string& lhs, const std::string& rhs, int n) {
  SymbolWord l = parse_word(lhs, n), r = parse_word(rhs, n);
  return std::any_of(rels.begin(), rels.end(), [&](const Relation& q) {
    return (q.lhs == l && q.rhs == r) || (q.lhs == r && q.rhs == l);
  });
}

std::vector<Relation> of_kind(const std::vector<Relation>& rels, std::initializer_list<RelationKind> kinds) {
  std::vector<Relation> out;
  for (const Relation& r : rels)
    if (std::find(kinds.begin(), kinds.end(), r.kind) != kinds.end()) out.push_back(r);
  return out;
}

}  // namespace

TEST(ArrowDefining, FirstExample) {
  DecoratedPermutation p = parse_permutation("256134");
  EXPECT_TRUE(is_arrow_defining(p, 3, 1));
  EXPECT_FALSE(is_arrow_defining(p, 4, 1));
  RelationCounts c = relation_numbers(p, 3, 1);
  EXPECT_EQ(c.X, 2);
  EXPECT_EQ(c.Y, 1);
  EXPECT_TRUE(c.interpreted);
  EXPECT_FALSE(relation_numbers(p, 4, 1).interpreted);
}

TEST(ArrowDefining, FinalExample) {
  DecoratedPermutation p = parse_permutation("458291673");
  RelationCounts a = relation_numbers(p, 6, 9);
  RelationCounts b = relation_numbers(p, 2, 5);
  EXPECT_EQ(a.Y, 3);
  EXPECT_EQ(a.X, 2);
  EXPECT_EQ(b.Y, 2);
  EXPECT_EQ(b.X, 1);
}

TEST(ArrowDefining, Errors) {
  DecoratedPermutation p = parse_permutation("256134");
  EXPECT_THROW(is_arrow_defining(p, 2, 2), Error);
  EXPECT_THROW(is_arrow_defining(p, 0, 2), Error);
  EXPECT_THROW(is_arrow_defining(parse_permutation("2143"), 1, 3), Error);
}

// For adjacent vertices one condition is vacuous; going backwards around
// the circle (pair (i+1, i)) the clockwise strand count is empty.
TEST(ArrowDefining, AdjacentPairs) {
  for (const auto& p : connected_permutations(6))
    for (int i = 1; i <= 6; ++i) {
      EXPECT_EQ(relation_numbers(p, wrap(i + 1, 6), i).Y, 0);
      EXPECT_EQ(relation_numbers(p, i, wrap(i + 1, 6)).X, 0);
    }
}

TEST(ArrowDefining, NecklaceFormulasAgreeUpTo7) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& p : connected_permutations(n)) {
      GrassmannNecklace nk = necklace_from_permutation(p);
      for (int v1 = 1; v1 <= n; ++v1)
        for (int v2 = 1; v2 <= n; ++v2) {
          if (v1 == v2) continue;
          ASSERT_EQ(is_arrow_defining(p, v1, v2), is_arrow_defining_necklace(nk, v1, v2));
          ASSERT_EQ(relation_numbers(p, v1, v2), relation_numbers_necklace(nk, v1, v2));
        }
    }
}

TEST(Presentation, FirstExampleQuiver) {
  QuiverPresentation qp = build_presentation(parse_permutation("256134"));
  EXPECT_EQ(qp.k, 3);
  EXPECT_EQ(qp.adjacent_x, std::vector<bool>(6, true));
  EXPECT_EQ(qp.adjacent_y, (std::vector<bool>{false, false, true, true, true, true}));
  ASSERT_EQ(qp.nonadjacent.size(), 1u);
  EXPECT_EQ(qp.nonadjacent[0], (ArrowDatum{3, 1, 4, 2, 2, 1, false}));
  EXPECT_TRUE(qp.closure);
}

TEST(Presentation, FirstExampleTenCyclicRelations) {
  QuiverPresentation qp = build_presentation(parse_permutation("256134"));
  auto cyc = of_kind(qp.relations_circ, {RelationKind::Nonadjacent, RelationKind::CyclicX, RelationKind::CyclicY});
  EXPECT_EQ(cyc.size(), 10u);
  const int n = 6;
  // Bottom row of the table.
  EXPECT_TRUE(has_relation(cyc, "A(3,1) y6 y5", "x3 x4", n));
  EXPECT_TRUE(has_relation(cyc, "y3 A(3,1) y6", "x4 x5", n));
  EXPECT_TRUE(has_relation(cyc, "y4 y3 A(3,1)", "x5 x6", n));
  EXPECT_TRUE(has_relation(cyc, "A(3,1) x1", "y2", n));
  EXPECT_TRUE(has_relation(cyc, "x2 A(3,1)", "y1", n));
  // Top row.
  EXPECT_TRUE(has_relation(cyc, "A(3,1) y6 x6 y6 x6", "x3 x4 x5 x6", n));
  EXPECT_TRUE(has_relation(cyc, "x3 y3 A(3,1) y6 x6", "x3 x4 x5 x6", n));
  EXPECT_TRUE(has_relation(cyc, "x3 y3 x3 y3 A(3,1)", "x3 x4 x5 x6", n));
  EXPECT_TRUE(has_relation(cyc, "A(3,1) x1 y1", "y2 y1", n));
  EXPECT_TRUE(has_relation(cyc, "y2 x2 A(3,1)", "y2 y1", n));
}

TEST(Presentation, FirstExampleSubstitutions) {
  QuiverPresentation qp = build_presentation(parse_permutation("256134"));
  ASSERT_EQ(qp.substitutions.size(), 2u);
  EXPECT_EQ(qp.substitutions[0].symbol, Symbol::y(1));
  EXPECT_EQ(format_word(qp.substitutions[0].word), "x2 A(3,1)");
  EXPECT_EQ(qp.substitutions[1].symbol, Symbol::y(2));
  EXPECT_EQ(format_word(qp.substitutions[1].word), "A(3,1) x1");
  for (const Relation& r : qp.relations_admissible) {
    EXPECT_GE(r.lhs.size(), 2u);
    EXPECT_GE(r.rhs.size(), 2u);
    for (const Symbol& s : r.lhs) EXPECT_NE(s.kind == Symbol::Kind::Y && s.a <= 2, true);
    for (const Symbol& s : r.rhs) EXPECT_NE(s.kind == Symbol::Kind::Y && s.a <= 2, true);
  }
}

TEST(Presentation, FinalExample) {
  QuiverPresentation qp = build_presentation(parse_permutation("458291673"));
  EXPECT_EQ(qp.k, 4);
  std::vector<bool> ax(9, true);
  ax[5] = ax[6] = ax[7] = false;
  EXPECT_EQ(qp.adjacent_x, ax);
  EXPECT_EQ(qp.adjacent_y, std::vector<bool>(9, true));
  ASSERT_EQ(qp.nonadjacent.size(), 2u);
  EXPECT_EQ(qp.nonadjacent[0], (ArrowDatum{2, 5, 3, 6, 1, 2, false}));
  EXPECT_EQ(qp.nonadjacent[1], (ArrowDatum{6, 9, 3, 6, 2, 3, false}));
  const int n = 9;
  EXPECT_TRUE(has_relation(qp.relations_circ, "A(2,5) x5 x6", "y1 y9 y8 y7", n));   // [beta x^2] = [y_1^4]
  EXPECT_TRUE(has_relation(qp.relations_circ, "x6", "A(6,9) y8 y7", n));            // [x_6] = [alpha y^2]
  EXPECT_TRUE(has_relation(qp.relations_circ, "x2 x3", "A(2,5) y4", n));            // [x_2^2] = [beta y]
  EXPECT_TRUE(has_relation(qp.relations_circ, "x3 x4 x5 A(6,9)", "y2 y1 y9", n));   // [x^3 alpha] = [y_2^3]
  ASSERT_EQ(qp.substitutions.size(), 3u);
  EXPECT_EQ(format_word(qp.substitutions[0].word), "A(6,9) y8 y7");
}

TEST(Presentation, RelationsCompose) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& p : connected_permutations(n)) {
      QuiverPresentation qp = build_presentation(p);
      for (const auto* list : {&qp.relations_circ, &qp.relations_admissible})
        for (const Relation& r : *list) {
          ASSERT_TRUE(word_composes(r.lhs, n)) << format_word(r.lhs);
          ASSERT_TRUE(word_composes(r.rhs, n)) << format_word(r.rhs);
          ASSERT_EQ(r.lhs.front().source(n), r.rhs.front().source(n));
          ASSERT_EQ(r.lhs.back().target(n), r.rhs.back().target(n));
        }
    }
}

// Consecutive members of a cyclic set differ by moving one x (or y) across
// the arrow symbol: the arrow sits at position m in member m.
TEST(Presentation, CyclicSetsTransport) {
  for (const auto& p : connected_permutations(7)) {
    std::map<std::pair<Symbol, RelationKind>, std::vector<const Relation*>> families;
    auto rels = relations_circ(p);
    for (const Relation& r : rels)
      if (r.kind == RelationKind::CyclicX || r.kind == RelationKind::CyclicY) {
        auto a = std::find_if(r.rhs.begin(), r.rhs.end(), [](const Symbol& s) { return s.kind == Symbol::Kind::A; });
        ASSERT_NE(a, r.rhs.end());
        families[{*a, r.kind}].push_back(&r);
      }
    for (const auto& [key, fam] : families)
      for (std::size_t m = 0; m < fam.size(); ++m) {
        ASSERT_EQ(fam[m]->rhs[m], key.first);
        ASSERT_EQ(fam[m]->rhs.size(), fam[0]->rhs.size());
        ASSERT_EQ(fam[m]->lhs.size(), fam[0]->lhs.size());
      }
  }
}

TEST(Presentation, CyclicEquivariance) {
  for (const auto& p : connected_permutations(6)) {
    QuiverPresentation a = gabriel_quiver(p);
    QuiverPresentation b = gabriel_quiver(p.rotated(1));
    EXPECT_EQ(a.k, b.k);
    for (int i = 1; i <= 6; ++i) {
      EXPECT_EQ(a.adjacent_x[static_cast<std::size_t>(i - 1)], b.adjacent_x[static_cast<std::size_t>(wrap(i + 1, 6) - 1)]);
      EXPECT_EQ(a.adjacent_y[static_cast<std::size_t>(i - 1)], b.adjacent_y[static_cast<std::size_t>(wrap(i + 1, 6) - 1)]);
    }
    ASSERT_EQ(a.nonadjacent.size(), b.nonadjacent.size());
    for (const ArrowDatum& d : a.nonadjacent) {
      ArrowDatum shifted = d;
      shifted.from = wrap(d.from + 1, 6);
      shifted.to = wrap(d.to + 1, 6);
      EXPECT_NE(std::find(b.nonadjacent.begin(), b.nonadjacent.end(), shifted), b.nonadjacent.end());
    }
  }
}

// A missing generator need not be one side of a cyclic relation: for 24153
// nothing isolates x3, and the degree search supplies it.
TEST(Presentation, SubstitutionWithoutCyclicRelation) {
  QuiverPresentation qp = build_presentation(parse_permutation("24153"));
  auto it = std::find_if(qp.substitutions.begin(), qp.substitutions.end(),
                         [](const Substitution& s) { return s.symbol == Symbol::x(3); });
  ASSERT_NE(it, qp.substitutions.end());
  EXPECT_EQ(format_word(it->word), "A(3,1) A(1,4)");
  for (const Relation& r : qp.relations_circ) {
    bool isolates = (r.lhs == SymbolWord{Symbol::x(3)}) || (r.rhs == SymbolWord{Symbol::x(3)});
    EXPECT_FALSE(isolates);
  }
}

TEST(Presentation, SubstitutionsAdmissibleUpTo8) {
  for (int n = 3; n <= 8; ++n)
    for (const auto& p : connected_permutations(n)) {
      QuiverPresentation qp;
      ASSERT_NO_THROW(qp = build_presentation(p)) << format_permutation(p);
      for (const Substitution& s : qp.substitutions) {
        ASSERT_GE(s.word.size(), 2u);
        ASSERT_TRUE(word_composes(s.word, n));
        ASSERT_EQ(s.word.front().source(n), s.symbol.source(n));
        ASSERT_EQ(s.word.back().target(n), s.symbol.target(n));
        for (const Symbol& g : s.word) {
          if (g.kind == Symbol::Kind::X) ASSERT_TRUE(qp.adjacent_x[static_cast<std::size_t>(g.a - 1)]);
          if (g.kind == Symbol::Kind::Y) ASSERT_TRUE(qp.adjacent_y[static_cast<std::size_t>(g.a - 1)]);
        }
      }
    }
}

TEST(Presentation, Uniform) {
  QuiverPresentation qp = build_presentation(uniform_permutation(2, 5));
  EXPECT_TRUE(qp.nonadjacent.empty());
  EXPECT_TRUE(qp.substitutions.empty());
  EXPECT_EQ(qp.relations_circ.size(), 10u);
  EXPECT_TRUE(has_relation(qp.relations_circ, "x1 x2", "y5 y4 y3", 5));
}

TEST(Symbols, ParseFormat) {
  SymbolWord w = parse_word("A(2,5) x5 A(6,9)", 9);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], Symbol::arrow(2, 5));
  EXPECT_EQ(w[1], Symbol::x(5));
  EXPECT_EQ(format_word(w), "A(2,5) x5 A(6,9)");
  EXPECT_TRUE(word_composes(w, 9));
  EXPECT_FALSE(word_composes(parse_word("x1 x3", 9), 9));
  EXPECT_EQ(Symbol::y(9).source(9), 1);
  EXPECT_THROW(parse_symbol("z3", 9), Error);
  EXPECT_THROW(parse_symbol("x10", 9), Error);
  EXPECT_THROW(parse_symbol("A(2,2)", 9), Error);
}

TEST(Presentation, JsonRoundtrip) {
  for (const char* text : {"256134", "458291673", "45123"}) {
    QuiverPresentation qp = build_presentation(parse_permutation(text));
    Json j = to_json(qp);
    EXPECT_EQ(presentation_from_json(j), qp) << text;
    EXPECT_EQ(presentation_from_json(Json::parse(j.dump())), qp);
  }
}

TEST(Presentation, Dot) {
  std::string dot = to_dot(build_presentation(parse_permutation("256134")));
  EXPECT_NE(dot.find("3 -> 1 [label=\"2:1\""), std::string::npos);
  EXPECT_EQ(dot.find("label=\"y1\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"y3\""), std::string::npos);
}
