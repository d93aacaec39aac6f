#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "positroid/perm.hpp"

namespace positroid {

using Subset = std::set<int>;

/// Sequence (I_1, ..., I_n) of k-subsets of [n].
struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<Subset> terms;  // terms[v - 1] is I_v

  const Subset& operator[](int v) const { return terms[static_cast<std::size_t>(wrap(v, n) - 1)]; }
  bool operator==(const GrassmannNecklace&) const = default;
};

enum class NecklaceViolationKind { WrongCardinality, ExchangeAxiomFailed, ElementOutOfRange, WrongLength };

struct NecklaceViolation {
  NecklaceViolationKind kind;
  int index;  // the offending v (1-based)
};

GrassmannNecklace necklace_from_permutation(const DecoratedPermutation& p);

/// First violated axiom, or nullopt when the necklace is valid.
std::optional<NecklaceViolation> validate_necklace(const GrassmannNecklace& nk);

/// Throws Error(NotRealizable) when the entering elements do not assemble into
/// a bijection.
DecoratedPermutation permutation_from_necklace(const GrassmannNecklace& nk);

/// "123" when n <= 9, "{1,10,12}" otherwise.
std::string format_subset(const Subset& s, int n);
std::string format_necklace(const GrassmannNecklace& nk);

Json to_json(const GrassmannNecklace& nk);
GrassmannNecklace necklace_from_json(const Json& j);

}  // namespace positroid
