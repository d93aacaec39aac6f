#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "positroid/perm.hpp"
#include "positroid/plabic.hpp"
#include "positroid/presentation.hpp"

namespace positroid {

struct CheckFailure {
  std::string check;
  std::string witness;
  std::string expected;
  std::string got;
};

struct CrosscheckResult {
  std::string permutation;
  bool ok = true;
  int pairs_checked = 0;
  int relations_checked = 0;
  std::size_t states_explored = 0;
  std::vector<CheckFailure> failures;  // truncated to the first few witnesses
};

struct CrosscheckOptions {
  BridgeOrder order = BridgeOrder::LexLeast;
  std::uint64_t seed = 0;
  bool verify_relations = true;
  std::vector<Relation> extra_relations;
};

/// realize -> validate -> roundtrip -> oracle on every ordered pair against
/// the permutation formulas -> every relation of relations_circ, plus any
/// extra relations.
CrosscheckResult crosscheck(const DecoratedPermutation& p, const CrosscheckOptions& opt = {});

/// Results in input order; work is spread over `threads` workers.
std::vector<CrosscheckResult> crosscheck_many(const std::vector<DecoratedPermutation>& perms,
                                              const CrosscheckOptions& opt, int threads);

Json to_json(const CrosscheckResult& r);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace positroid
