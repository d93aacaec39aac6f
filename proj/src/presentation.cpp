#include "positroid/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "positroid/error.hpp"

namespace positroid {

namespace {

void check_pair(int n, int v1, int v2) {
  if (v1 < 1 || v1 > n || v2 < 1 || v2 > n)
    throw Error(ErrorCode::OutOfRange, "boundary vertex out of range");
  if (v1 == v2) throw Error(ErrorCode::EqualVertices, "v1 and v2 must differ");
}

bool arrow_defining_unchecked(const DecoratedPermutation& p, int v1, int v2) {
  const int n = p.size();
  // (1): every w strictly between v2 and v1 is jumped over by some strand
  // starting in [v2, w-1] and ending in [w, v1-1].
  const int span1 = clockwise_offset(v2, v1, n);
  for (int d = 1; d < span1; ++d) {
    int w = wrap(v2 + d, n);
    auto target = CyclicInterval::closed(w, wrap(v1 - 1, n), n);
    bool found = false;
    for (int e = 0; e < d && !found; ++e) found = target.contains(p(wrap(v2 + e, n)));
    if (!found) return false;
  }
  // (2): mirror image on the arc from v1 to v2.
  const int span2 = clockwise_offset(v1, v2, n);
  for (int d = 1; d < span2; ++d) {
    int w = wrap(v1 + d, n);
    auto target = CyclicInterval::closed(v1, wrap(w - 1, n), n);
    bool found = false;
    for (int e = d; e < span2 && !found; ++e) found = target.contains(p(wrap(v1 + e, n)));
    if (!found) return false;
  }
  return true;
}

RelationCounts counts_unchecked(const DecoratedPermutation& p, int v1, int v2) {
  const int n = p.size();
  int Y = 0, X = 0;
  const int ylimit = clockwise_offset(v2, wrap(v1 - 1, n), n);
  const int xlimit = clockwise_offset(v1, wrap(v2 - 1, n), n);
  for (int i = 1; i <= n; ++i) {
    int a = clockwise_offset(v2, i, n), b = clockwise_offset(v2, p(i), n);
    if (a < b && b <= ylimit) ++Y;
    int c = clockwise_offset(v1, p(i), n), d = clockwise_offset(v1, i, n);
    if (c < d && d <= xlimit) ++X;
  }
  return {X, Y, false};
}

SymbolWord xs(int from, int len, int n) {
  SymbolWord w;
  for (int i = 0; i < len; ++i) w.push_back(Symbol::x(wrap(from + i, n)));
  return w;
}

// y-path of length len starting at vertex `from`.
SymbolWord ys(int from, int len, int n) {
  SymbolWord w;
  for (int i = 1; i <= len; ++i) w.push_back(Symbol::y(wrap(from - i, n)));
  return w;
}

SymbolWord cat(std::initializer_list<SymbolWord> parts) {
  SymbolWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

int Symbol::source(int n) const {
  switch (kind) {
    case Kind::X: return a;
    case Kind::Y: return wrap(a + 1, n);
    case Kind::A: return a;
  }
  return 0;
}

int Symbol::target(int n) const {
  switch (kind) {
    case Kind::X: return wrap(a + 1, n);
    case Kind::Y: return a;
    case Kind::A: return b;
  }
  return 0;
}

bool word_composes(const SymbolWord& w, int n) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].target(n) != w[i].source(n)) return false;
  return true;
}

bool is_arrow_defining(const DecoratedPermutation& p, int v1, int v2) {
  check_pair(p.size(), v1, v2);
  if (!is_connected(p)) throw Error(ErrorCode::NotConnected, "permutation is not connected");
  return arrow_defining_unchecked(p, v1, v2);
}

bool is_arrow_defining_necklace(const GrassmannNecklace& nk, int v1, int v2) {
  const int n = nk.n;
  check_pair(n, v1, v2);
  Subset meet, join;
  std::set_intersection(nk[v1].begin(), nk[v1].end(), nk[v2].begin(), nk[v2].end(),
                        std::inserter(meet, meet.end()));
  std::set_union(nk[v1].begin(), nk[v1].end(), nk[v2].begin(), nk[v2].end(),
                 std::inserter(join, join.end()));
  for (int w : CyclicInterval::open(v2, v1, n).members()) {
    const Subset& iw = nk[w];
    if (std::includes(iw.begin(), iw.end(), meet.begin(), meet.end())) return false;
  }
  for (int w : CyclicInterval::open(v1, v2, n).members()) {
    const Subset& iw = nk[w];
    if (std::includes(join.begin(), join.end(), iw.begin(), iw.end())) return false;
  }
  return true;
}

RelationCounts relation_numbers(const DecoratedPermutation& p, int v1, int v2) {
  check_pair(p.size(), v1, v2);
  RelationCounts c = counts_unchecked(p, v1, v2);
  c.interpreted = is_connected(p) && arrow_defining_unchecked(p, v1, v2);
  return c;
}

RelationCounts relation_numbers_necklace(const GrassmannNecklace& nk, int v1, int v2) {
  const int n = nk.n;
  check_pair(n, v1, v2);
  int X = 0, Y = 0;
  for (int i : CyclicInterval::left_closed(v2, v1, n).members())
    if (nk[v1].count(i) && nk[v2].count(i)) ++Y;
  for (int i : CyclicInterval::left_closed(v1, v2, n).members())
    if (!nk[v1].count(i) && !nk[v2].count(i)) ++X;
  bool interpreted = is_arrow_defining_necklace(nk, v1, v2);
  return {X, Y, interpreted};
}

QuiverPresentation gabriel_quiver(const DecoratedPermutation& p) {
  if (!is_connected(p)) throw Error(ErrorCode::NotConnected, "permutation is not connected");
  const int n = p.size();
  QuiverPresentation qp;
  qp.n = n;
  qp.k = noninversion_count(p);
  qp.adjacent_x.assign(static_cast<std::size_t>(n), false);
  qp.adjacent_y.assign(static_cast<std::size_t>(n), false);
  for (int i = 1; i <= n; ++i) {
    qp.adjacent_x[static_cast<std::size_t>(i - 1)] = arrow_defining_unchecked(p, i, wrap(i + 1, n));
    qp.adjacent_y[static_cast<std::size_t>(i - 1)] = arrow_defining_unchecked(p, wrap(i + 1, n), i);
  }
  for (int v1 = 1; v1 <= n; ++v1) {
    for (int v2 = 1; v2 <= n; ++v2) {
      int rx = clockwise_offset(v1, v2, n);
      if (v1 == v2 || rx == 1 || rx == n - 1) continue;
      if (!arrow_defining_unchecked(p, v1, v2)) continue;
      RelationCounts c = counts_unchecked(p, v1, v2);
      qp.nonadjacent.push_back({v1, v2, rx, n - rx, c.X, c.Y, false});
    }
  }
  return qp;
}

std::vector<Relation> relations_circ(int n, int k, const std::vector<ArrowDatum>& nonadjacent) {
  std::vector<Relation> out;
  for (int i = 1; i <= n; ++i)
    out.push_back({RelationKind::Commutation, {Symbol::x(i), Symbol::y(i)},
                   {Symbol::y(wrap(i - 1, n)), Symbol::x(wrap(i - 1, n))}});
  if (k > 0 && k < n)
    for (int i = 1; i <= n; ++i)
      out.push_back({RelationKind::Grassmannian, xs(i, k, n), ys(i, n - k, n)});
  for (const ArrowDatum& p : nonadjacent) {
    const int t = p.from, h = p.to;
    const SymbolWord A{Symbol::arrow(t, h)};
    // Face loops at the tail and head; [xy] = [yx] is central, so the
    // (xy)^Y and (xy)^X factors may be split across A in every position.
    const SymbolWord yx_t{Symbol::y(wrap(t - 1, n)), Symbol::x(wrap(t - 1, n))};
    const SymbolWord xy_t{Symbol::x(t), Symbol::y(t)};
    const SymbolWord xy_h{Symbol::x(h), Symbol::y(h)};
    const SymbolWord yx_h{Symbol::y(wrap(h - 1, n)), Symbol::x(wrap(h - 1, n))};
    auto power = [](const SymbolWord& w, int e) {
      SymbolWord out;
      for (int r = 0; r < e; ++r) out.insert(out.end(), w.begin(), w.end());
      return out;
    };
    for (int m = 0; m <= p.Y; ++m)
      out.push_back({RelationKind::Nonadjacent, ys(t, p.reach_y, n), cat({power(yx_t, m), A, power(xy_h, p.Y - m)})});
    for (int m = 0; m <= p.X; ++m)
      out.push_back({RelationKind::Nonadjacent, xs(t, p.reach_x, n), cat({power(xy_t, m), A, power(yx_h, p.X - m)})});
    for (int m = 0; m <= p.Y; ++m)
      out.push_back({RelationKind::CyclicY, ys(wrap(t - m, n), p.reach_y - p.Y, n),
                     cat({xs(wrap(t - m, n), m, n), A, xs(h, p.Y - m, n)})});
    for (int m = 0; m <= p.X; ++m)
      out.push_back({RelationKind::CyclicX, xs(wrap(t + m, n), p.reach_x - p.X, n),
                     cat({ys(wrap(t + m, n), m, n), A, ys(h, p.X - m, n)})});
  }
  return out;
}

std::vector<Relation> relations_circ(const DecoratedPermutation& p) {
  QuiverPresentation qp = gabriel_quiver(p);
  return relations_circ(qp.n, qp.k, qp.nonadjacent);
}

void fill_admissible(QuiverPresentation& qp) {
  const int n = qp.n;
  auto missing = [&](const Symbol& s) {
    if (s.kind == Symbol::Kind::X) return !qp.adjacent_x[static_cast<std::size_t>(s.a - 1)];
    if (s.kind == Symbol::Kind::Y) return !qp.adjacent_y[static_cast<std::size_t>(s.a - 1)];
    return false;
  };

  // Fallback when no cyclic relation isolates the symbol. Grade x by n-k and
  // y by k, so that f = xy has degree n and A(t,h) has degree
  // reach_x (n-k) - n X. In a thin model two paths with the same ends and
  // degree are equal, so any word of present generators with the symbol's
  // ends and degree expresses it. Shortest word wins, then the least one.
  auto graded_search = [&](const Symbol& s, SymbolWord& out) {
    const int k = qp.k;
    std::vector<std::pair<Symbol, int>> gens;
    for (int i = 1; i <= n; ++i) {
      if (!missing(Symbol::x(i))) gens.push_back({Symbol::x(i), n - k});
      if (!missing(Symbol::y(i))) gens.push_back({Symbol::y(i), k});
    }
    for (const ArrowDatum& d : qp.nonadjacent) {
      gens.push_back({Symbol::arrow(d.from, d.to), d.reach_x * (n - k) - n * d.X});
    }
    std::sort(gens.begin(), gens.end());
    const int goal = s.kind == Symbol::Kind::X ? n - k : k;
    const int from = s.source(n), to = s.target(n);
    SymbolWord cur;
    std::function<bool(int, int, std::size_t)> dfs = [&](int at, int left, std::size_t len) {
      if (cur.size() == len) return left == 0 && at == to;
      for (const auto& [g, deg] : gens) {
        if (g.source(n) != at) continue;
        cur.push_back(g);
        if (dfs(g.target(n), left - deg, len)) return true;
        cur.pop_back();
      }
      return false;
    };
    // A degrees can be zero, so the bound is on length rather than degree.
    for (std::size_t len = 2; len <= static_cast<std::size_t>(2 * n); ++len) {
      cur.clear();
      if (dfs(from, goal, len)) {
        out = cur;
        return true;
      }
    }
    return false;
  };

  std::map<Symbol, SymbolWord> done;
  std::set<Symbol> active;
  std::function<bool(const Symbol&, SymbolWord&)> expand_symbol;
  auto expand_word = [&](const SymbolWord& w, SymbolWord& out) {
    for (const Symbol& s : w) {
      if (!missing(s)) {
        out.push_back(s);
        continue;
      }
      SymbolWord sub;
      if (!expand_symbol(s, sub)) return false;
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return true;
  };
  expand_symbol = [&](const Symbol& s, SymbolWord& out) {
    if (auto it = done.find(s); it != done.end()) {
      out = it->second;
      return true;
    }
    if (active.count(s)) return false;
    active.insert(s);
    bool ok = false;
    for (const Relation& r : qp.relations_circ) {
      const SymbolWord* other = nullptr;
      if (r.lhs.size() == 1 && r.lhs[0] == s) other = &r.rhs;
      else if (r.rhs.size() == 1 && r.rhs[0] == s) other = &r.lhs;
      if (!other || (other->size() == 1 && (*other)[0] == s)) continue;
      SymbolWord candidate;
      if (expand_word(*other, candidate)) {
        out = candidate;
        ok = true;
        break;
      }
    }
    if (!ok) ok = graded_search(s, out);
    active.erase(s);
    if (ok) done[s] = out;
    return ok;
  };

  qp.substitutions.clear();
  for (int i = 1; i <= n; ++i) {
    for (Symbol s : {Symbol::x(i), Symbol::y(i)}) {
      if (!missing(s)) continue;
      SymbolWord w;
      if (!expand_symbol(s, w))
        throw Error(ErrorCode::SubstitutionNotFound,
                    "no cyclic relation expresses missing generator " + format_symbol(s));
      qp.substitutions.push_back({s, w});
    }
  }

  qp.relations_admissible.clear();
  for (const Relation& r : qp.relations_circ) {
    Relation sub{r.kind, {}, {}};
    expand_word(r.lhs, sub.lhs);
    expand_word(r.rhs, sub.rhs);
    if (sub.lhs == sub.rhs) continue;
    bool dup = std::any_of(qp.relations_admissible.begin(), qp.relations_admissible.end(),
                           [&](const Relation& q) {
                             return (q.lhs == sub.lhs && q.rhs == sub.rhs) ||
                                    (q.lhs == sub.rhs && q.rhs == sub.lhs);
                           });
    if (dup) continue;
    if (sub.lhs.size() < 2 || sub.rhs.size() < 2)
      throw Error(ErrorCode::NotAdmissible,
                  "relation " + format_word(sub.lhs) + " = " + format_word(sub.rhs) +
                      " has a side of length one");
    qp.relations_admissible.push_back(std::move(sub));
  }
}

QuiverPresentation presentation_from_quiver(int n, int k, std::vector<bool> adjacent_x,
                                            std::vector<bool> adjacent_y,
                                            std::vector<ArrowDatum> nonadjacent) {
  QuiverPresentation qp;
  qp.n = n;
  qp.k = k;
  qp.adjacent_x = std::move(adjacent_x);
  qp.adjacent_y = std::move(adjacent_y);
  qp.nonadjacent = std::move(nonadjacent);
  std::sort(qp.nonadjacent.begin(), qp.nonadjacent.end(),
            [](const ArrowDatum& a, const ArrowDatum& b) {
              return std::pair(a.from, a.to) < std::pair(b.from, b.to);
            });
  qp.relations_circ = relations_circ(n, k, qp.nonadjacent);
  fill_admissible(qp);
  return qp;
}

QuiverPresentation build_presentation(const DecoratedPermutation& p) {
  QuiverPresentation q = gabriel_quiver(p);
  return presentation_from_quiver(q.n, q.k, q.adjacent_x, q.adjacent_y, q.nonadjacent);
}

std::string format_symbol(const Symbol& s) {
  switch (s.kind) {
    case Symbol::Kind::X: return "x" + std::to_string(s.a);
    case Symbol::Kind::Y: return "y" + std::to_string(s.a);
    case Symbol::Kind::A: return "A(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
  }
  return "?";
}

std::string format_word(const SymbolWord& w) {
  std::string out;
  for (const Symbol& s : w) {
    if (!out.empty()) out += ' ';
    out += format_symbol(s);
  }
  return out;
}

Symbol parse_symbol(std::string_view text, int n) {
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad symbol '" + std::string(text) + "'"); };
  auto number = [&](std::string_view t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) throw bad();
    if (v < 1 || v > n) throw Error(ErrorCode::OutOfRange, "symbol index out of range");
    return v;
  };
  if (text.size() >= 2 && (text[0] == 'x' || text[0] == 'y')) {
    int i = number(text.substr(1));
    return text[0] == 'x' ? Symbol::x(i) : Symbol::y(i);
  }
  if (text.size() >= 6 && text.substr(0, 2) == "A(" && text.back() == ')') {
    std::string_view inner = text.substr(2, text.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw bad();
    int a = number(inner.substr(0, comma)), b = number(inner.substr(comma + 1));
    if (a == b) throw Error(ErrorCode::OutOfRange, "A symbol needs distinct endpoints");
    return Symbol::arrow(a, b);
  }
  throw bad();
}

SymbolWord parse_word(std::string_view text, int n) {
  SymbolWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.push_back(parse_symbol(tok, n));
  return w;
}

std::string_view relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Commutation: return "commutation";
    case RelationKind::Grassmannian: return "grassmannian";
    case RelationKind::Nonadjacent: return "nonadjacent";
    case RelationKind::CyclicX: return "cyclic_x";
    case RelationKind::CyclicY: return "cyclic_y";
  }
  return "?";
}

namespace {

RelationKind relation_kind_from_name(const std::string& s) {
  for (RelationKind k : {RelationKind::Commutation, RelationKind::Grassmannian,
                         RelationKind::Nonadjacent, RelationKind::CyclicX, RelationKind::CyclicY})
    if (relation_kind_name(k) == s) return k;
  throw Error(ErrorCode::ParseError, "unknown relation kind '" + s + "'");
}

Json word_json(const SymbolWord& w) {
  Json out = Json::array();
  for (const Symbol& s : w) out.push_back(format_symbol(s));
  return out;
}

SymbolWord word_from_json(const Json& j, int n) {
  SymbolWord w;
  for (const auto& s : j) w.push_back(parse_symbol(s.get<std::string>(), n));
  return w;
}

Json relations_json(const std::vector<Relation>& rels) {
  Json out = Json::array();
  for (const Relation& r : rels) {
    Json jr;
    jr["kind"] = relation_kind_name(r.kind);
    jr["lhs"] = word_json(r.lhs);
    jr["rhs"] = word_json(r.rhs);
    out.push_back(std::move(jr));
  }
  return out;
}

std::vector<Relation> relations_from_json(const Json& j, int n) {
  std::vector<Relation> out;
  for (const auto& jr : j)
    out.push_back({relation_kind_from_name(jr.at("kind").get<std::string>()),
                   word_from_json(jr.at("lhs"), n), word_from_json(jr.at("rhs"), n)});
  return out;
}

}  // namespace

Json to_json(const QuiverPresentation& qp) {
  Json out;
  out["n"] = qp.n;
  out["k"] = qp.k;
  out["adjacent_x"] = qp.adjacent_x;
  out["adjacent_y"] = qp.adjacent_y;
  Json na = Json::array();
  for (const ArrowDatum& a : qp.nonadjacent) {
    Json ja;
    ja["from"] = a.from;
    ja["to"] = a.to;
    ja["X"] = a.X;
    ja["Y"] = a.Y;
    na.push_back(std::move(ja));
  }
  out["nonadjacent"] = std::move(na);
  out["relations"] = relations_json(qp.relations_circ);
  out["closure"] = qp.closure;
  Json subs = Json::array();
  for (const Substitution& s : qp.substitutions) {
    Json js;
    js["symbol"] = format_symbol(s.symbol);
    js["word"] = word_json(s.word);
    subs.push_back(std::move(js));
  }
  Json adm;
  adm["substitutions"] = std::move(subs);
  adm["relations"] = relations_json(qp.relations_admissible);
  out["admissible"] = std::move(adm);
  return out;
}

QuiverPresentation presentation_from_json(const Json& j) {
  try {
    QuiverPresentation qp;
    qp.n = j.at("n").get<int>();
    qp.k = j.at("k").get<int>();
    const int n = qp.n;
    qp.adjacent_x = j.at("adjacent_x").get<std::vector<bool>>();
    qp.adjacent_y = j.at("adjacent_y").get<std::vector<bool>>();
    for (const auto& ja : j.at("nonadjacent")) {
      int from = ja.at("from").get<int>(), to = ja.at("to").get<int>();
      int rx = clockwise_offset(from, to, n);
      qp.nonadjacent.push_back(
          {from, to, rx, n - rx, ja.at("X").get<int>(), ja.at("Y").get<int>(), false});
    }
    qp.relations_circ = relations_from_json(j.at("relations"), n);
    qp.closure = j.value("closure", true);
    if (j.contains("admissible")) {
      const Json& adm = j.at("admissible");
      for (const auto& js : adm.at("substitutions"))
        qp.substitutions.push_back({parse_symbol(js.at("symbol").get<std::string>(), n),
                                    word_from_json(js.at("word"), n)});
      qp.relations_admissible = relations_from_json(adm.at("relations"), n);
    }
    return qp;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string to_dot(const QuiverPresentation& qp) {
  std::ostringstream out;
  out << "digraph boundary_quiver {\n";
  out << "  node [shape=circle];\n";
  for (int i = 1; i <= qp.n; ++i) out << "  " << i << ";\n";
  for (int i = 1; i <= qp.n; ++i) {
    int j = wrap(i + 1, qp.n);
    if (qp.adjacent_x[static_cast<std::size_t>(i - 1)])
      out << "  " << i << " -> " << j << " [label=\"x" << i << "\"];\n";
    if (qp.adjacent_y[static_cast<std::size_t>(i - 1)])
      out << "  " << j << " -> " << i << " [label=\"y" << i << "\", style=dashed];\n";
  }
  for (const ArrowDatum& a : qp.nonadjacent)
    out << "  " << a.from << " -> " << a.to << " [label=\"" << a.X << ":" << a.Y
        << "\", color=red];\n";
  out << "}\n";
  return out.str();
}

}  // namespace positroid
