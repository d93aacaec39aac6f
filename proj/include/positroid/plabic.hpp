#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "positroid/dimer.hpp"
#include "positroid/perm.hpp"

namespace positroid {

enum class BridgeOrder { LexLeast, LexGreatest, Random };

std::string_view bridge_order_name(BridgeOrder order);

/// A bridge puts a white vertex on the leaf at a and a black vertex on the
/// leaf at b, where b is the next non-fixed position clockwise from a.
struct Bridge {
  int a;
  int b;

  bool operator==(const Bridge&) const = default;
};

/// Planar bicoloured graph in a disk. Vertices 0..n-1 are the boundary
/// vertices 1..n (clockwise). Rotations list incident edge indices in
/// clockwise order; the disk boundary arcs are implicit.
struct PlabicGraph {
  enum class Color : std::uint8_t { Boundary, White, Black };

  int n = 0;
  std::vector<Color> color;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;
  std::vector<bool> vertex_alive;
  std::vector<bool> edge_alive;

  int other_end(int e, int v) const {
    const auto& [a, b] = edges[static_cast<std::size_t>(e)];
    return a == v ? b : a;
  }
  int degree(int v) const { return static_cast<int>(rotation[static_cast<std::size_t>(v)].size()); }
  int internal_vertex_count() const;
};

/// Peeling sequence from p down to lollipops, in peel order. Every step
/// raises the length of the bounded affine permutation by one, so the graph
/// built from the reversed sequence is reduced.
std::vector<Bridge> bridge_sequence(const DecoratedPermutation& p, BridgeOrder order = BridgeOrder::LexLeast,
                                    std::uint64_t seed = 0);

/// Lollipops for the peeled fixed points, then bridges in reverse peel
/// order, then contraction of degree-2 vertices and same-colour edges.
/// Lollipops: white for Loop, black for Coloop.
PlabicGraph plabic_from_permutation(const DecoratedPermutation& p, BridgeOrder order = BridgeOrder::LexLeast,
                                    std::uint64_t seed = 0);

/// Trips turn maximally right at black vertices and maximally left at white
/// ones; a trip from i ending at j gives pi(i) = j.
DecoratedPermutation trip_permutation(const PlabicGraph& g);

/// Quiver vertices are faces of g, arrows cross edges with the black end on
/// their left, and each internal vertex bounds a face (cc around black, cl
/// around white). Strands of the result then follow the trips of g. Throws Error(NotReduced) if g is not in reduced bipartite
/// form.
DimerModel dimer_from_plabic(const PlabicGraph& g);

struct Realization {
  DimerModel model;
  std::vector<Bridge> bridges;
};

/// Throws NotConnected for disconnected p, and RoundtripFailed or NotReduced
/// if the construction misbehaves.
Realization realize_with_bridges(const DecoratedPermutation& p, BridgeOrder order = BridgeOrder::LexLeast,
                                 std::uint64_t seed = 0);
DimerModel realize(const DecoratedPermutation& p, BridgeOrder order = BridgeOrder::LexLeast,
                   std::uint64_t seed = 0);

}  // namespace positroid
