#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "positroid/necklace.hpp"
#include "positroid/perm.hpp"

namespace positroid {

/// Generator symbol. X(i) is the path x_i: i -> i+1, Y(i) is y_i: i+1 -> i and
/// A(a, b) is the nonadjacent arrow a -> b.
struct Symbol {
  enum class Kind : std::uint8_t { X, Y, A };
  Kind kind;
  int a;
  int b = 0;

  static Symbol x(int i) { return {Kind::X, i, 0}; }
  static Symbol y(int i) { return {Kind::Y, i, 0}; }
  static Symbol arrow(int from, int to) { return {Kind::A, from, to}; }

  int source(int n) const;
  int target(int n) const;

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;
};

/// Composition reads left to right.
using SymbolWord = std::vector<Symbol>;

enum class RelationKind : std::uint8_t { Commutation, Grassmannian, Nonadjacent, CyclicX, CyclicY };

struct Relation {
  RelationKind kind;
  SymbolWord lhs;
  SymbolWord rhs;

  bool operator==(const Relation&) const = default;
};

struct ArrowDatum {
  int from;
  int to;
  int reach_x;
  int reach_y;
  int X;
  int Y;
  bool adjacent;

  bool operator==(const ArrowDatum&) const = default;
};

struct RelationCounts {
  int X;
  int Y;
  // False when the pair is not arrow-defining: the counts are then raw
  // combinatorial quantities with no algebraic reading.
  bool interpreted;

  bool operator==(const RelationCounts&) const = default;
};

struct Substitution {
  Symbol symbol;
  SymbolWord word;

  bool operator==(const Substitution&) const = default;
};

struct QuiverPresentation {
  int n = 0;
  int k = 0;
  std::vector<bool> adjacent_x;  // [i - 1]: x_i is an arrow of the Gabriel quiver
  std::vector<bool> adjacent_y;
  std::vector<ArrowDatum> nonadjacent;  // sorted by (from, to)
  std::vector<Relation> relations_circ;
  std::vector<Substitution> substitutions;
  std::vector<Relation> relations_admissible;
  // The ideal is the cancellative closure of relations_circ, not the ideal
  // they generate.
  bool closure = true;

  bool operator==(const QuiverPresentation&) const = default;
};

bool is_arrow_defining(const DecoratedPermutation& p, int v1, int v2);
bool is_arrow_defining_necklace(const GrassmannNecklace& nk, int v1, int v2);

RelationCounts relation_numbers(const DecoratedPermutation& p, int v1, int v2);
RelationCounts relation_numbers_necklace(const GrassmannNecklace& nk, int v1, int v2);

/// Quiver part only: k, adjacency flags, nonadjacent arrows. Relations empty.
QuiverPresentation gabriel_quiver(const DecoratedPermutation& p);

std::vector<Relation> relations_circ(int n, int k, const std::vector<ArrowDatum>& nonadjacent);
std::vector<Relation> relations_circ(const DecoratedPermutation& p);

/// Fills substitutions and relations_admissible from the quiver and
/// relations_circ already present in qp.
void fill_admissible(QuiverPresentation& qp);

/// Complete presentation from quiver data; used for both the permutation
/// formulas and oracle-derived quivers.
QuiverPresentation presentation_from_quiver(int n, int k, std::vector<bool> adjacent_x,
                                            std::vector<bool> adjacent_y,
                                            std::vector<ArrowDatum> nonadjacent);

QuiverPresentation build_presentation(const DecoratedPermutation& p);

std::string format_symbol(const Symbol& s);
std::string format_word(const SymbolWord& w);
Symbol parse_symbol(std::string_view text, int n);
/// Space-separated symbols, e.g. "A(2,5) x5 A(6,9)".
SymbolWord parse_word(std::string_view text, int n);
std::string_view relation_kind_name(RelationKind kind);

/// True iff consecutive symbols compose.
bool word_composes(const SymbolWord& w, int n);

Json to_json(const QuiverPresentation& qp);
QuiverPresentation presentation_from_json(const Json& j);
std::string to_dot(const QuiverPresentation& qp);

}  // namespace positroid
