#include <gtest/gtest.h>

#include "oracles.hpp"
#include "positroid/error.hpp"
#include "positroid/necklace.hpp"

using namespace positroid;

TEST(Necklace, FirstExample) {
  GrassmannNecklace nk = necklace_from_permutation(parse_permutation("256134"));
  EXPECT_EQ(nk.k, 3);
  EXPECT_EQ(format_necklace(nk), "(123, 234, 134, 145, 156, 126)");
  EXPECT_FALSE(validate_necklace(nk).has_value());
}

TEST(Necklace, MatchesReferenceFormula) {
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : all_decorated_permutations(n)) {
      GrassmannNecklace nk = necklace_from_permutation(p);
      auto want = oracle::necklace(p);
      for (int v = 1; v <= n; ++v) ASSERT_EQ(nk[v], want[static_cast<std::size_t>(v - 1)]) << format_permutation(p);
      ASSERT_EQ(nk.k, noninversion_count(p));
    }
}

TEST(Necklace, RoundtripAllDecoratedUpTo7) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& p : all_decorated_permutations(n)) {
      GrassmannNecklace nk = necklace_from_permutation(p);
      ASSERT_FALSE(validate_necklace(nk).has_value()) << format_permutation(p);
      ASSERT_EQ(permutation_from_necklace(nk), p) << format_permutation(p);
    }
}

TEST(Necklace, CyclicEquivariance) {
  for (const auto& p : connected_permutations(6)) {
    GrassmannNecklace a = necklace_from_permutation(p);
    GrassmannNecklace b = necklace_from_permutation(p.rotated(1));
    for (int v = 1; v <= 6; ++v) {
      Subset shifted;
      for (int x : a[v]) shifted.insert(wrap(x + 1, 6));
      ASSERT_EQ(b[v + 1], shifted);
    }
  }
}

TEST(Necklace, Violations) {
  GrassmannNecklace nk = necklace_from_permutation(parse_permutation("256134"));
  GrassmannNecklace bad = nk;
  bad.terms[2] = {1, 2};
  ASSERT_TRUE(validate_necklace(bad).has_value());
  EXPECT_EQ(validate_necklace(bad)->kind, NecklaceViolationKind::WrongCardinality);

  bad = nk;
  bad.terms[3] = {2, 5, 6};  // I_4 must contain I_3 \ {3} = {1, 4}
  ASSERT_TRUE(validate_necklace(bad).has_value());
  EXPECT_EQ(validate_necklace(bad)->kind, NecklaceViolationKind::ExchangeAxiomFailed);

  bad = nk;
  bad.terms[0] = {1, 2, 9};
  ASSERT_TRUE(validate_necklace(bad).has_value());
  EXPECT_EQ(validate_necklace(bad)->kind, NecklaceViolationKind::ElementOutOfRange);

  bad = nk;
  bad.terms.pop_back();
  ASSERT_TRUE(validate_necklace(bad).has_value());
  EXPECT_EQ(validate_necklace(bad)->kind, NecklaceViolationKind::WrongLength);
}

TEST(Necklace, NotRealizable) {
  // Passes no axiom check: I_2 does not contain I_1 \ {1}.
  GrassmannNecklace nk{4, 2, {{1, 2}, {3, 4}, {3, 4}, {1, 4}}};
  try {
    permutation_from_necklace(nk);
    FAIL() << "expected NotRealizable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRealizable);
  }
}

TEST(Necklace, FormatLargeN) {
  EXPECT_EQ(format_subset({1, 10, 12}, 12), "{1,10,12}");
  EXPECT_EQ(format_subset({1, 3}, 9), "13");
}

TEST(Necklace, JsonRoundtrip) {
  GrassmannNecklace nk = necklace_from_permutation(parse_permutation("458291673"));
  Json j = to_json(nk);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(necklace_from_json(j), nk);
  EXPECT_EQ(to_json(necklace_from_permutation(parse_permutation("256134"))).dump(),
            R"({"n":6,"k":3,"terms":[[1,2,3],[2,3,4],[1,3,4],[1,4,5],[1,5,6],[1,2,6]]})");
}
