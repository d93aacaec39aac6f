#include "positroid/necklace.hpp"

#include <algorithm>

#include "positroid/error.hpp"

namespace positroid {

GrassmannNecklace necklace_from_permutation(const DecoratedPermutation& p) {
  GrassmannNecklace nk;
  nk.n = p.size();
  nk.k = noninversion_count(p);
  for (int v = 1; v <= nk.n; ++v) {
    Subset term;
    for (int j = 1; j <= nk.n; ++j)
      if (!left_of_strand(p, j, v)) term.insert(j);
    nk.terms.push_back(std::move(term));
  }
  return nk;
}

std::optional<NecklaceViolation> validate_necklace(const GrassmannNecklace& nk) {
  if (nk.n < 1 || static_cast<int>(nk.terms.size()) != nk.n)
    return NecklaceViolation{NecklaceViolationKind::WrongLength, 0};
  for (int v = 1; v <= nk.n; ++v) {
    const Subset& t = nk[v];
    if (static_cast<int>(t.size()) != nk.k)
      return NecklaceViolation{NecklaceViolationKind::WrongCardinality, v};
    if (!t.empty() && (*t.begin() < 1 || *t.rbegin() > nk.n))
      return NecklaceViolation{NecklaceViolationKind::ElementOutOfRange, v};
  }
  for (int v = 1; v <= nk.n; ++v) {
    const Subset& next = nk[v + 1];
    for (int e : nk[v])
      if (e != v && !next.count(e))
        return NecklaceViolation{NecklaceViolationKind::ExchangeAxiomFailed, v};
  }
  return std::nullopt;
}

DecoratedPermutation permutation_from_necklace(const GrassmannNecklace& nk) {
  if (auto bad = validate_necklace(nk))
    throw Error(ErrorCode::NotRealizable,
                "necklace fails its axioms at index " + std::to_string(bad->index));
  const int n = nk.n;
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<Decoration> dec(static_cast<std::size_t>(n), Decoration::None);
  for (int v = 1; v <= n; ++v) {
    const Subset& cur = nk[v];
    const Subset& next = nk[v + 1];
    std::vector<int> entering;
    std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(),
                        std::back_inserter(entering));
    if (entering.empty()) {
      // I_{v+1} = I_v: v is a fixed point.
      image[static_cast<std::size_t>(v - 1)] = v;
      dec[static_cast<std::size_t>(v - 1)] = cur.count(v) ? Decoration::Coloop : Decoration::Loop;
      continue;
    }
    if (entering.size() != 1)
      throw Error(ErrorCode::NotRealizable, "more than one element enters after " + std::to_string(v));
    int e = entering.front();
    if (image[static_cast<std::size_t>(e - 1)] != 0)
      throw Error(ErrorCode::NotRealizable, "element " + std::to_string(e) + " enters twice");
    image[static_cast<std::size_t>(e - 1)] = v;
  }
  for (int i = 1; i <= n; ++i) {
    if (image[static_cast<std::size_t>(i - 1)] == 0)
      throw Error(ErrorCode::NotRealizable, "element " + std::to_string(i) + " never enters");
  }
  try {
    return DecoratedPermutation(std::move(image), std::move(dec));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotRealizable, e.what());
  }
}

std::string format_subset(const Subset& s, int n) {
  std::string out;
  if (n <= 9) {
    for (int e : s) out += std::to_string(e);
    return out;
  }
  out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string format_necklace(const GrassmannNecklace& nk) {
  std::string out = "(";
  for (int v = 1; v <= nk.n; ++v) {
    if (v > 1) out += ", ";
    out += format_subset(nk[v], nk.n);
  }
  return out + ")";
}

Json to_json(const GrassmannNecklace& nk) {
  Json terms = Json::array();
  for (const auto& t : nk.terms) terms.push_back(std::vector<int>(t.begin(), t.end()));
  return {{"n", nk.n}, {"k", nk.k}, {"terms", terms}};
}

GrassmannNecklace necklace_from_json(const Json& j) {
  try {
    GrassmannNecklace nk;
    nk.n = j.at("n").get<int>();
    nk.k = j.at("k").get<int>();
    for (const auto& t : j.at("terms")) {
      auto v = t.get<std::vector<int>>();
      nk.terms.emplace_back(v.begin(), v.end());
    }
    return nk;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace positroid
