#include "positroid/plabic.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "positroid/error.hpp"

namespace positroid {

using Color = PlabicGraph::Color;

std::string_view bridge_order_name(BridgeOrder order) {
  switch (order) {
    case BridgeOrder::LexLeast: return "lex-least";
    case BridgeOrder::LexGreatest: return "lex-greatest";
    case BridgeOrder::Random: return "random";
  }
  return "?";
}

int PlabicGraph::internal_vertex_count() const {
  int c = 0;
  for (std::size_t v = 0; v < color.size(); ++v) c += vertex_alive[v] && color[v] != Color::Boundary;
  return c;
}

namespace {

// Bounded affine lift: i <= f(i) <= i + n, coloops at i, loops at i + n.
std::vector<int> affine_lift(const DecoratedPermutation& p) {
  const int n = p.size();
  std::vector<int> f(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    int v = p(i);
    if (v > i) f[static_cast<std::size_t>(i)] = v;
    else if (v < i) f[static_cast<std::size_t>(i)] = v + n;
    else f[static_cast<std::size_t>(i)] = p.decoration(i) == Decoration::Coloop ? i : i + n;
  }
  return f;
}

bool affine_fixed(const std::vector<int>& f, int i, int n) {
  int v = f[static_cast<std::size_t>(i)];
  return v == i || v == i + n;
}

int add_vertex(PlabicGraph& g, Color c) {
  g.color.push_back(c);
  g.rotation.emplace_back();
  g.vertex_alive.push_back(true);
  return static_cast<int>(g.color.size()) - 1;
}

int add_edge(PlabicGraph& g, int u, int v) {
  g.edges.emplace_back(u, v);
  g.edge_alive.push_back(true);
  return static_cast<int>(g.edges.size()) - 1;
}

void replace_endpoint(PlabicGraph& g, int e, int from, int to) {
  auto& [a, b] = g.edges[static_cast<std::size_t>(e)];
  if (a == from) a = to;
  else b = to;
}

// Splits the leaf at boundary vertex `bd` with a new vertex of colour c.
// Returns (new vertex, inner edge, boundary edge).
std::tuple<int, int, int> split_leaf(PlabicGraph& g, int bd, Color c) {
  int inner = g.rotation[static_cast<std::size_t>(bd)].front();
  int x = add_vertex(g, c);
  replace_endpoint(g, inner, bd, x);
  int outer = add_edge(g, bd, x);
  g.rotation[static_cast<std::size_t>(bd)] = {outer};
  return {x, inner, outer};
}

void insert_bridge(PlabicGraph& g, const Bridge& br) {
  auto [x, x_inner, x_outer] = split_leaf(g, br.a - 1, Color::White);
  auto [y, y_inner, y_outer] = split_leaf(g, br.b - 1, Color::Black);
  int bridge = add_edge(g, x, y);
  // Clockwise: the bridge leaves X towards b, i.e. after the boundary edge.
  g.rotation[static_cast<std::size_t>(x)] = {x_inner, x_outer, bridge};
  g.rotation[static_cast<std::size_t>(y)] = {y_inner, bridge, y_outer};
}

bool is_internal(const PlabicGraph& g, int v) {
  return g.color[static_cast<std::size_t>(v)] != Color::Boundary;
}

bool remove_degree_two(PlabicGraph& g) {
  for (int v = 0; v < static_cast<int>(g.color.size()); ++v) {
    if (!g.vertex_alive[static_cast<std::size_t>(v)] || !is_internal(g, v) || g.degree(v) != 2) continue;
    int e1 = g.rotation[static_cast<std::size_t>(v)][0];
    int e2 = g.rotation[static_cast<std::size_t>(v)][1];
    int x = g.other_end(e1, v), y = g.other_end(e2, v);
    if (x == y || (!is_internal(g, x) && !is_internal(g, y))) continue;
    replace_endpoint(g, e1, v, y);
    auto& ry = g.rotation[static_cast<std::size_t>(y)];
    std::replace(ry.begin(), ry.end(), e2, e1);
    g.edge_alive[static_cast<std::size_t>(e2)] = false;
    g.vertex_alive[static_cast<std::size_t>(v)] = false;
    g.rotation[static_cast<std::size_t>(v)].clear();
    return true;
  }
  return false;
}

// Edges of rot starting just after e, excluding e.
std::vector<int> after(const std::vector<int>& rot, int e) {
  auto it = std::find(rot.begin(), rot.end(), e);
  std::vector<int> out(it + 1, rot.end());
  out.insert(out.end(), rot.begin(), it);
  return out;
}

bool merge_same_colour(PlabicGraph& g) {
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (!g.edge_alive[static_cast<std::size_t>(e)]) continue;
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (u == v || !is_internal(g, u) || !is_internal(g, v)) continue;
    if (g.color[static_cast<std::size_t>(u)] != g.color[static_cast<std::size_t>(v)]) continue;
    const auto& ru = g.rotation[static_cast<std::size_t>(u)];
    const auto& rv = g.rotation[static_cast<std::size_t>(v)];
    bool parallel = std::any_of(ru.begin(), ru.end(), [&](int f) { return f != e && g.other_end(f, u) == v; });
    if (parallel) continue;
    std::vector<int> merged = after(ru, e);
    std::vector<int> tail = after(rv, e);
    for (int f : tail) replace_endpoint(g, f, v, u);
    merged.insert(merged.end(), tail.begin(), tail.end());
    g.rotation[static_cast<std::size_t>(u)] = std::move(merged);
    g.rotation[static_cast<std::size_t>(v)].clear();
    g.vertex_alive[static_cast<std::size_t>(v)] = false;
    g.edge_alive[static_cast<std::size_t>(e)] = false;
    return true;
  }
  return false;
}

}  // namespace

std::vector<Bridge> bridge_sequence(const DecoratedPermutation& p, BridgeOrder order, std::uint64_t seed) {
  const int n = p.size();
  std::vector<int> f = affine_lift(p);
  std::vector<Bridge> out;
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<int> live;
    for (int i = 1; i <= n; ++i)
      if (!affine_fixed(f, i, n)) live.push_back(i);
    if (live.empty()) break;
    std::vector<Bridge> candidates;
    for (std::size_t t = 0; t < live.size(); ++t) {
      int a = live[t], b = live[(t + 1) % live.size()];
      int b_aff = b > a ? b : b + n;
      int fb = f[static_cast<std::size_t>(b)] + (b_aff - b);
      if (f[static_cast<std::size_t>(a)] < fb) candidates.push_back({a, b});
    }
    if (candidates.empty()) throw Error(ErrorCode::NotRealizable, "no bridge can be peeled");
    Bridge pick = candidates.front();
    if (order == BridgeOrder::LexGreatest) pick = candidates.back();
    if (order == BridgeOrder::Random)
      pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    int a = pick.a, b = pick.b;
    int shift = b > a ? 0 : n;
    int fa = f[static_cast<std::size_t>(a)];
    f[static_cast<std::size_t>(a)] = f[static_cast<std::size_t>(b)] + shift;
    f[static_cast<std::size_t>(b)] = fa - shift;
    out.push_back(pick);
  }
  return out;
}

PlabicGraph plabic_from_permutation(const DecoratedPermutation& p, BridgeOrder order, std::uint64_t seed) {
  const int n = p.size();
  std::vector<Bridge> seq = bridge_sequence(p, order, seed);

  // Lollipop colours come from the fully peeled affine permutation.
  std::vector<int> f = affine_lift(p);
  for (const Bridge& br : seq) {
    int a = br.a, b = br.b;
    int shift = b > a ? 0 : n;
    int fa = f[static_cast<std::size_t>(a)];
    f[static_cast<std::size_t>(a)] = f[static_cast<std::size_t>(b)] + shift;
    f[static_cast<std::size_t>(b)] = fa - shift;
  }

  PlabicGraph g;
  g.n = n;
  for (int i = 1; i <= n; ++i) add_vertex(g, Color::Boundary);
  for (int i = 1; i <= n; ++i) {
    Color c = f[static_cast<std::size_t>(i)] == i ? Color::Black : Color::White;
    int l = add_vertex(g, c);
    int e = add_edge(g, i - 1, l);
    g.rotation[static_cast<std::size_t>(i - 1)] = {e};
    g.rotation[static_cast<std::size_t>(l)] = {e};
  }
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) insert_bridge(g, *it);
  while (merge_same_colour(g) || remove_degree_two(g)) {
  }
  return g;
}

DecoratedPermutation trip_permutation(const PlabicGraph& g) {
  const int n = g.n;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<Decoration> dec(static_cast<std::size_t>(n), Decoration::None);
  const std::size_t cap = 4 * g.edges.size() + 4;
  for (int i = 1; i <= n; ++i) {
    int v = i - 1;
    int e = g.rotation[static_cast<std::size_t>(v)].front();
    Color last = Color::Boundary;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > cap) throw Error(ErrorCode::NonterminatingStrand, "trip does not terminate");
      v = g.other_end(e, v);
      if (!is_internal(g, v)) break;
      const auto& rot = g.rotation[static_cast<std::size_t>(v)];
      last = g.color[static_cast<std::size_t>(v)];
      std::size_t pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), e) - rot.begin());
      std::size_t d = rot.size();
      e = last == Color::Black ? rot[(pos + d - 1) % d] : rot[(pos + 1) % d];
    }
    image[static_cast<std::size_t>(i - 1)] = v + 1;
    if (v + 1 == i) dec[static_cast<std::size_t>(i - 1)] = last == Color::Black ? Decoration::Coloop : Decoration::Loop;
  }
  return DecoratedPermutation(std::move(image), std::move(dec));
}

DimerModel dimer_from_plabic(const PlabicGraph& g) {
  const int n = g.n;
  // Full edge list with the boundary arcs appended: arc j joins j and j+1.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> plabic_edge;  // -1 for arcs
  std::map<int, int> dense_of;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (!g.edge_alive[static_cast<std::size_t>(e)]) continue;
    dense_of[e] = static_cast<int>(edges.size());
    edges.push_back(g.edges[static_cast<std::size_t>(e)]);
    plabic_edge.push_back(e);
  }
  const int first_arc = static_cast<int>(edges.size());
  for (int j = 1; j <= n; ++j) {
    edges.emplace_back(j - 1, wrap(j + 1, n) - 1);
    plabic_edge.push_back(-1);
  }
  auto arc = [&](int j) { return first_arc + wrap(j, n) - 1; };

  std::vector<std::vector<int>> rot(g.color.size());
  for (std::size_t v = 0; v < g.color.size(); ++v) {
    if (!g.vertex_alive[v]) continue;
    for (int e : g.rotation[v]) rot[v].push_back(dense_of.at(e));
  }
  for (int j = 1; j <= n; ++j) {
    auto& r = rot[static_cast<std::size_t>(j - 1)];
    if (r.size() != 1) throw Error(ErrorCode::NotReduced, "boundary vertex without a single leaf");
    r = {r[0], arc(j - 1), arc(j)};
  }
  for (std::size_t e = 0; e < static_cast<std::size_t>(first_arc); ++e) {
    auto [u, v] = edges[e];
    if (u == v) throw Error(ErrorCode::NotReduced, "plabic graph has a loop edge");
    Color cu = g.color[static_cast<std::size_t>(u)], cv = g.color[static_cast<std::size_t>(v)];
    if (cu == cv) throw Error(ErrorCode::NotReduced, "edge joins two vertices of the same colour");
  }

  // Darts: 2e runs first -> second, 2e + 1 the reverse. Each face of the
  // embedding is traced keeping it on the left.
  const int D = 2 * static_cast<int>(edges.size());
  auto head = [&](int d) { return d % 2 == 0 ? edges[static_cast<std::size_t>(d / 2)].second : edges[static_cast<std::size_t>(d / 2)].first; };
  auto dart_from = [&](int e, int v) { return edges[static_cast<std::size_t>(e)].first == v ? 2 * e : 2 * e + 1; };
  std::vector<int> face_of(static_cast<std::size_t>(D), -1);
  int faces = 0;
  for (int d0 = 0; d0 < D; ++d0) {
    if (face_of[static_cast<std::size_t>(d0)] >= 0) continue;
    int d = d0;
    do {
      face_of[static_cast<std::size_t>(d)] = faces;
      int v = head(d), e = d / 2;
      const auto& r = rot[static_cast<std::size_t>(v)];
      std::size_t pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), e) - r.begin());
      int next = r[(pos + 1) % r.size()];
      d = dart_from(next, v);
    } while (d != d0);
    ++faces;
  }

  const int outer = face_of[static_cast<std::size_t>(dart_from(arc(1), 0))];
  // Quiver vertex j is the face on the disk side of arc j-1.
  std::vector<int> qv(static_cast<std::size_t>(faces), 0);
  for (int j = 1; j <= n; ++j) {
    int f = face_of[static_cast<std::size_t>(dart_from(arc(j - 1), j - 1))];
    if (f == outer || qv[static_cast<std::size_t>(f)] != 0)
      throw Error(ErrorCode::NotReduced, "boundary faces are not distinct");
    qv[static_cast<std::size_t>(f)] = j;
  }
  int next_id = n + 1;
  for (int d = 0; d < D; ++d) {
    int f = face_of[static_cast<std::size_t>(d)];
    if (f != outer && qv[static_cast<std::size_t>(f)] == 0) qv[static_cast<std::size_t>(f)] = next_id++;
  }

  DimerModel m;
  for (int j = 1; j <= n; ++j) m.boundary.push_back(j);
  for (int id = 1; id < next_id; ++id) m.vertices.push_back(id);

  // Leaves first (boundary arrows alpha_1..alpha_n), then internal edges.
  std::vector<int> order;
  for (int j = 1; j <= n; ++j) order.push_back(rot[static_cast<std::size_t>(j - 1)][0]);
  for (int e = 0; e < first_arc; ++e) {
    auto [u, v] = edges[static_cast<std::size_t>(e)];
    if (is_internal(g, u) && is_internal(g, v)) order.push_back(e);
  }
  std::vector<int> arrow_of(static_cast<std::size_t>(first_arc), 0);
  for (int e : order) {
    auto [u, v] = edges[static_cast<std::size_t>(e)];
    // Dart o -> c: from the boundary end of a leaf, or from the white end.
    int o = u, c = v;
    if (!is_internal(g, v) || g.color[static_cast<std::size_t>(u)] == Color::Black) std::swap(o, c);
    int d = dart_from(e, o);
    int left = qv[static_cast<std::size_t>(face_of[static_cast<std::size_t>(d)])];
    int right = qv[static_cast<std::size_t>(face_of[static_cast<std::size_t>(d ^ 1)])];
    if (left == 0 || right == 0) throw Error(ErrorCode::NotReduced, "edge borders the outer face");
    bool black = g.color[static_cast<std::size_t>(c)] == Color::Black;
    int id = static_cast<int>(m.arrows.size()) + 1;
    m.arrows.push_back(black ? Arrow{id, left, right} : Arrow{id, right, left});
    arrow_of[static_cast<std::size_t>(e)] = id;
  }

  for (std::size_t v = 0; v < g.color.size(); ++v) {
    if (!g.vertex_alive[v] || !is_internal(g, static_cast<int>(v))) continue;
    const auto& r = rot[v];
    std::vector<int> cyc;
    if (g.color[v] == Color::White) {
      for (int e : r) cyc.push_back(arrow_of[static_cast<std::size_t>(e)]);
      m.faces_cl.push_back(std::move(cyc));
    } else {
      cyc.push_back(arrow_of[static_cast<std::size_t>(r[0])]);
      for (std::size_t i = r.size() - 1; i >= 1; --i) cyc.push_back(arrow_of[static_cast<std::size_t>(r[i])]);
      m.faces_cc.push_back(std::move(cyc));
    }
  }
  return m;
}

Realization realize_with_bridges(const DecoratedPermutation& p, BridgeOrder order, std::uint64_t seed) {
  if (!is_connected(p)) throw Error(ErrorCode::NotConnected, "permutation is not connected");
  Realization out;
  out.bridges = bridge_sequence(p, order, seed);
  PlabicGraph g = plabic_from_permutation(p, order, seed);
  if (trip_permutation(g) != p)
    throw Error(ErrorCode::RoundtripFailed, "plabic trips give " + format_permutation(trip_permutation(g)));
  out.model = dimer_from_plabic(g);
  auto violations = validate_model(out.model);
  if (!violations.empty())
    throw Error(ErrorCode::RoundtripFailed, "generated model is invalid: " +
                                                std::string(violation_name(violations.front().kind)) + " " +
                                                violations.front().detail);
  IndexedModel im(out.model);
  auto bad = consistency_check(im);
  if (!bad.empty()) throw Error(ErrorCode::NotReduced, "generated model has " + describe(bad.front()));
  DecoratedPermutation back = decorated_permutation(im);
  if (back != p)
    throw Error(ErrorCode::RoundtripFailed, "generated model has permutation " + format_permutation(back));
  return out;
}

DimerModel realize(const DecoratedPermutation& p, BridgeOrder order, std::uint64_t seed) {
  return realize_with_bridges(p, order, seed).model;
}

}  // namespace positroid
