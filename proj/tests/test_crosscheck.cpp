#include <gtest/gtest.h>

#include "positroid/crosscheck.hpp"

using namespace positroid;

TEST(Crosscheck, ExamplesPass) {
  for (const char* text : {"256134", "458291673", "4 5 1 2 3"}) {
    CrosscheckResult r = crosscheck(parse_permutation(text));
    EXPECT_TRUE(r.ok) << text << " " << (r.failures.empty() ? "" : r.failures[0].check);
    EXPECT_GT(r.relations_checked, 0);
  }
}

TEST(Crosscheck, ExtraRelationFailureHasWitness) {
  CrosscheckOptions opt;
  opt.extra_relations.push_back(
      {RelationKind::Nonadjacent, parse_word("A(2,5) x5 A(6,9)", 9), parse_word("y1 y9 x9 y9", 9)});
  CrosscheckResult r = crosscheck(parse_permutation("458291673"), opt);
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].check, "relation");
  EXPECT_EQ(r.failures[0].witness, "A(2,5) x5 A(6,9) = y1 y9 x9 y9");
}

TEST(Crosscheck, PipelineErrorIsReported) {
  CrosscheckResult r = crosscheck(parse_permutation("2143"));
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures[0].check, "pipeline");
}

TEST(Crosscheck, ThreadCountDoesNotChangeOutput) {
  auto perms = connected_permutations(6);
  auto one = crosscheck_many(perms, {}, 1);
  auto four = crosscheck_many(perms, {}, 4);
  ASSERT_EQ(one.size(), perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    EXPECT_EQ(one[i].permutation, format_permutation(perms[i]));
    EXPECT_EQ(to_json(one[i]).dump(), to_json(four[i]).dump());
  }
}

TEST(Crosscheck, Digest) {
  EXPECT_EQ(digest(""), "cbf29ce484222325");
  EXPECT_EQ(digest("a"), "af63dc4c8601ec8c");
  EXPECT_NE(digest("256134"), digest("256143"));
}
