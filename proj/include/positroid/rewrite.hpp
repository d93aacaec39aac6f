#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "positroid/dimer.hpp"
#include "positroid/presentation.hpp"

namespace positroid {

/// Path in an IndexedModel: dense arrow indices read left to right. The
/// source is stored so that the empty word is a constant path.
struct PathWord {
  int source = 0;
  std::vector<int> arrows;

  auto operator<=>(const PathWord&) const = default;
  bool operator==(const PathWord&) const = default;
};

struct NormalForm {
  PathWord minimal;  // the unique rightmost member of the minimal class
  int c_value = 0;

  bool operator==(const NormalForm&) const = default;
};

struct Morph {
  PathWord word;
  int position;
  bool right;  // R^cl replaced by R^cc
};

/// Dimer-algebra path arithmetic by breadth-first closure under basic morphs.
/// Holds caches, so one instance must not be shared between threads.
class Oracle {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  explicit Oracle(const IndexedModel& m, std::size_t cap = kDefaultCap);

  const IndexedModel& model() const { return m_; }

  int target(const PathWord& w) const;
  bool composes(const PathWord& w) const;

  /// Rest of the cl (or cc) face of arrow after the arrow. Throws NoSuchFaceSide.
  PathWord return_path(int arrow, bool cl_side) const;
  std::vector<Morph> morph_neighbors(const PathWord& w) const;
  /// Throws CapExceeded.
  std::vector<PathWord> equivalence_class(const PathWord& w) const;

  NormalForm normalize(const PathWord& w);
  bool equivalent(const PathWord& p, const PathWord& q);
  PathWord concat(const PathWord& p, const PathWord& q) const;

  // Boundary-labelled helpers; labels are 1..n.
  PathWord constant(int label) const;
  PathWord x_path(int i) const;
  PathWord y_path(int i) const;
  PathWord x_word(int from, int len) const;
  PathWord y_word(int from, int len) const;

  PathWord minimal_path(int v1, int v2);
  bool arrow_defining(int v1, int v2);
  RelationCounts relation_numbers(int v1, int v2);

  /// Throws SymbolNotRealizable for an A symbol on a pair that is not
  /// arrow-defining.
  PathWord expand(const SymbolWord& w);
  bool verify_relation(const Relation& r);

  /// k from the Grassmannian relation, quiver and relation numbers from the
  /// oracle, relations assembled by the same rules as the formula module.
  QuiverPresentation presentation();

  std::size_t states_explored() const { return explored_; }
  std::size_t largest_class() const { return largest_; }

 private:
  struct MinimalInfo {
    NormalForm nf;
    std::vector<PathWord> minimal_class;
  };
  MinimalInfo normalize_full(const PathWord& w);
  int find_face_cycle(const std::vector<int>& w, int* length) const;
  bool has_right_morph(const std::vector<int>& w) const;
  bool direct(const PathWord& w) const;
  int oracle_k();

  const IndexedModel& m_;
  std::size_t cap_;
  mutable std::size_t explored_ = 0;
  mutable std::size_t largest_ = 0;
  std::map<PathWord, NormalForm> nf_cache_;
  std::map<std::pair<int, int>, MinimalInfo> minimal_cache_;
};

}  // namespace positroid
