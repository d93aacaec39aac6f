#include "positroid/rewrite.hpp"

#include <deque>
#include <unordered_set>

#include "positroid/error.hpp"

namespace positroid {

namespace {

struct WordHash {
  std::size_t operator()(const std::vector<int>& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int a : w) {
      h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool matches(const std::vector<int>& w, std::size_t at, const std::vector<int>& face, int from, int len) {
  if (at + static_cast<std::size_t>(len) > w.size()) return false;
  const int L = static_cast<int>(face.size());
  for (int t = 0; t < len; ++t)
    if (w[at + static_cast<std::size_t>(t)] != face[static_cast<std::size_t>((from + t) % L)]) return false;
  return true;
}

}  // namespace

Oracle::Oracle(const IndexedModel& m, std::size_t cap) : m_(m), cap_(cap) {}

int Oracle::target(const PathWord& w) const {
  return w.arrows.empty() ? w.source : m_.dst(w.arrows.back());
}

bool Oracle::composes(const PathWord& w) const {
  int v = w.source;
  for (int a : w.arrows) {
    if (m_.src(a) != v) return false;
    v = m_.dst(a);
  }
  return true;
}

PathWord Oracle::return_path(int arrow, bool cl_side) const {
  int f = m_.face_of(arrow, cl_side);
  if (f < 0) throw Error(ErrorCode::NoSuchFaceSide, "arrow " + std::to_string(m_.arrow_id(arrow)) + " has no " +
                                                        (cl_side ? "cl" : "cc") + " face");
  const auto& cyc = m_.face(f);
  int pos = cl_side ? m_.cl(arrow).pos : m_.cc(arrow).pos;
  PathWord out{m_.dst(arrow), {}};
  for (std::size_t t = 1; t < cyc.size(); ++t) out.arrows.push_back(cyc[(static_cast<std::size_t>(pos) + t) % cyc.size()]);
  return out;
}

std::vector<Morph> Oracle::morph_neighbors(const PathWord& w) const {
  std::vector<Morph> out;
  const auto& a = w.arrows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (bool from_cl : {true, false}) {
      int f = m_.face_of(a[i], from_cl);
      if (f < 0) continue;
      int alpha = m_.pred_in_face(a[i], f);
      if (!m_.is_internal_arrow(alpha)) continue;
      const auto& cyc = m_.face(f);
      int L = static_cast<int>(cyc.size());
      int pos = from_cl ? m_.cl(a[i]).pos : m_.cc(a[i]).pos;
      if (!matches(a, i, cyc, pos, L - 1)) continue;
      PathWord other = return_path(alpha, !from_cl);
      PathWord next{w.source, {}};
      next.arrows.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      next.arrows.insert(next.arrows.end(), other.arrows.begin(), other.arrows.end());
      next.arrows.insert(next.arrows.end(), a.begin() + static_cast<std::ptrdiff_t>(i) + L - 1, a.end());
      out.push_back({std::move(next), static_cast<int>(i), from_cl});
    }
  }
  return out;
}

std::vector<PathWord> Oracle::equivalence_class(const PathWord& w) const {
  std::vector<PathWord> out{w};
  std::unordered_set<std::vector<int>, WordHash> seen{w.arrows};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Morph& mo : morph_neighbors(out[head])) {
      if (!seen.insert(mo.word.arrows).second) continue;
      if (seen.size() > cap_) throw Error(ErrorCode::CapExceeded, "equivalence class exceeds the state cap");
      out.push_back(std::move(mo.word));
    }
  }
  explored_ += out.size();
  largest_ = std::max(largest_, out.size());
  return out;
}

int Oracle::find_face_cycle(const std::vector<int>& w, int* length) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (bool cl_side : {true, false}) {
      int f = m_.face_of(w[i], cl_side);
      if (f < 0) continue;
      const auto& cyc = m_.face(f);
      int pos = cl_side ? m_.cl(w[i]).pos : m_.cc(w[i]).pos;
      int L = static_cast<int>(cyc.size());
      if (matches(w, i, cyc, pos, L)) {
        *length = L;
        return static_cast<int>(i);
      }
    }
  }
  return -1;
}

bool Oracle::has_right_morph(const std::vector<int>& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    int f = m_.cl(w[i]).face;
    if (f < 0) continue;
    int alpha = m_.pred_in_face(w[i], f);
    if (!m_.is_internal_arrow(alpha)) continue;
    if (matches(w, i, m_.face(f), m_.cl(w[i]).pos, static_cast<int>(m_.face(f).size()) - 1)) return true;
  }
  return false;
}

Oracle::MinimalInfo Oracle::normalize_full(const PathWord& w) {
  PathWord cur = w;
  int c = 0;
  while (true) {
    // Breadth-first closure with early exit at the first member containing a
    // whole face cycle; stripping it lowers the word by one power of f.
    std::vector<PathWord> cls{cur};
    std::unordered_set<std::vector<int>, WordHash> seen{cur.arrows};
    bool stripped = false;
    for (std::size_t head = 0; head < cls.size() && !stripped; ++head) {
      int len = 0;
      int at = find_face_cycle(cls[head].arrows, &len);
      if (at >= 0) {
        PathWord next{cls[head].source, {}};
        const auto& a = cls[head].arrows;
        next.arrows.assign(a.begin(), a.begin() + at);
        next.arrows.insert(next.arrows.end(), a.begin() + at + len, a.end());
        cur = std::move(next);
        ++c;
        stripped = true;
        break;
      }
      for (Morph& mo : morph_neighbors(cls[head])) {
        if (!seen.insert(mo.word.arrows).second) continue;
        if (seen.size() > cap_) throw Error(ErrorCode::CapExceeded, "equivalence class exceeds the state cap");
        cls.push_back(std::move(mo.word));
      }
    }
    explored_ += cls.size();
    largest_ = std::max(largest_, cls.size());
    if (stripped) continue;

    const PathWord* rightmost = nullptr;
    for (const PathWord& p : cls) {
      if (has_right_morph(p.arrows)) continue;
      if (rightmost)
        throw Error(ErrorCode::NoRightmostMember, "minimal class has two rightmost members");
      rightmost = &p;
    }
    if (!rightmost) throw Error(ErrorCode::NoRightmostMember, "minimal class has no rightmost member");
    MinimalInfo info;
    info.nf = {*rightmost, c};
    info.minimal_class = std::move(cls);
    return info;
  }
}

NormalForm Oracle::normalize(const PathWord& w) {
  if (auto it = nf_cache_.find(w); it != nf_cache_.end()) return it->second;
  NormalForm nf = normalize_full(w).nf;
  nf_cache_.emplace(w, nf);
  return nf;
}

bool Oracle::equivalent(const PathWord& p, const PathWord& q) {
  if (p.source != q.source || target(p) != target(q)) return false;
  return normalize(p) == normalize(q);
}

PathWord Oracle::concat(const PathWord& p, const PathWord& q) const {
  PathWord out = p;
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

PathWord Oracle::constant(int label) const { return {m_.boundary_vertex(label), {}}; }

PathWord Oracle::x_path(int i) const {
  int a = m_.boundary_arrow(i);
  if (m_.alpha_is_x(i)) return {m_.src(a), {a}};
  return return_path(a, m_.cl(a).face >= 0);
}

PathWord Oracle::y_path(int i) const {
  int a = m_.boundary_arrow(i);
  if (!m_.alpha_is_x(i)) return {m_.src(a), {a}};
  return return_path(a, m_.cl(a).face >= 0);
}

PathWord Oracle::x_word(int from, int len) const {
  PathWord out = constant(from);
  for (int t = 0; t < len; ++t) out = concat(out, x_path(from + t));
  return out;
}

PathWord Oracle::y_word(int from, int len) const {
  PathWord out = constant(from);
  for (int t = 1; t <= len; ++t) out = concat(out, y_path(from - t));
  return out;
}

PathWord Oracle::minimal_path(int v1, int v2) {
  auto key = std::pair(wrap(v1, m_.n()), wrap(v2, m_.n()));
  if (auto it = minimal_cache_.find(key); it != minimal_cache_.end()) return it->second.nf.minimal;
  int s = m_.boundary_vertex(key.first), t = m_.boundary_vertex(key.second);
  // Any path s -> t; normalisation does the rest.
  std::vector<int> via(static_cast<std::size_t>(m_.num_vertices()), -2);
  std::deque<int> queue{s};
  via[static_cast<std::size_t>(s)] = -1;
  while (!queue.empty() && via[static_cast<std::size_t>(t)] == -2) {
    int v = queue.front();
    queue.pop_front();
    for (int a : m_.out_arrows(v)) {
      int u = m_.dst(a);
      if (via[static_cast<std::size_t>(u)] != -2) continue;
      via[static_cast<std::size_t>(u)] = a;
      queue.push_back(u);
    }
  }
  if (via[static_cast<std::size_t>(t)] == -2) throw Error(ErrorCode::InvalidModel, "no path between boundary vertices");
  PathWord p{s, {}};
  for (int v = t; v != s;) {
    int a = via[static_cast<std::size_t>(v)];
    p.arrows.insert(p.arrows.begin(), a);
    v = m_.src(a);
  }
  MinimalInfo info = normalize_full(p);
  PathWord out = info.nf.minimal;
  minimal_cache_.emplace(key, std::move(info));
  return out;
}

bool Oracle::direct(const PathWord& w) const {
  for (std::size_t i = 0; i + 1 < w.arrows.size(); ++i)
    if (m_.label(m_.dst(w.arrows[i])) != 0) return false;
  return true;
}

bool Oracle::arrow_defining(int v1, int v2) {
  if (wrap(v1, m_.n()) == wrap(v2, m_.n())) throw Error(ErrorCode::EqualVertices, "v1 and v2 must differ");
  minimal_path(v1, v2);
  const MinimalInfo& info = minimal_cache_.at(std::pair(wrap(v1, m_.n()), wrap(v2, m_.n())));
  for (const PathWord& p : info.minimal_class)
    if (!direct(p)) return false;
  return true;
}

RelationCounts Oracle::relation_numbers(int v1, int v2) {
  const int n = m_.n();
  if (wrap(v1, n) == wrap(v2, n)) throw Error(ErrorCode::EqualVertices, "v1 and v2 must differ");
  int rx = clockwise_offset(v1, v2, n);
  // The minimal path has c-value 0, so the gaps are the c-values of the pure
  // x- and y-paths.
  int X = normalize(x_word(v1, rx)).c_value;
  int Y = normalize(y_word(v1, n - rx)).c_value;
  return {X, Y, arrow_defining(v1, v2)};
}

PathWord Oracle::expand(const SymbolWord& w) {
  const int n = m_.n();
  if (w.empty()) throw Error(ErrorCode::ParseError, "empty symbol word");
  PathWord out = constant(w.front().source(n));
  for (const Symbol& s : w) {
    switch (s.kind) {
      case Symbol::Kind::X: out = concat(out, x_path(s.a)); break;
      case Symbol::Kind::Y: out = concat(out, y_path(s.a)); break;
      case Symbol::Kind::A:
        if (!arrow_defining(s.a, s.b))
          throw Error(ErrorCode::SymbolNotRealizable, format_symbol(s) + " is not arrow-defining in this model");
        out = concat(out, minimal_path(s.a, s.b));
        break;
    }
  }
  if (!composes(out)) throw Error(ErrorCode::ParseError, "symbol word does not compose: " + format_word(w));
  return out;
}

bool Oracle::verify_relation(const Relation& r) {
  return equivalent(expand(r.lhs), expand(r.rhs));
}

int Oracle::oracle_k() {
  const int n = m_.n();
  for (int k = 1; k < n; ++k)
    if (equivalent(x_word(1, k), y_word(1, n - k))) return k;
  throw Error(ErrorCode::InconsistentModel, "no Grassmannian relation holds at vertex 1");
}

QuiverPresentation Oracle::presentation() {
  const int n = m_.n();
  std::vector<bool> ax(static_cast<std::size_t>(n)), ay(static_cast<std::size_t>(n));
  std::vector<ArrowDatum> na;
  for (int i = 1; i <= n; ++i) {
    ax[static_cast<std::size_t>(i - 1)] = arrow_defining(i, i + 1);
    ay[static_cast<std::size_t>(i - 1)] = arrow_defining(i + 1, i);
  }
  for (int v1 = 1; v1 <= n; ++v1) {
    for (int v2 = 1; v2 <= n; ++v2) {
      int rx = clockwise_offset(v1, v2, n);
      if (v1 == v2 || rx == 1 || rx == n - 1 || !arrow_defining(v1, v2)) continue;
      RelationCounts c = relation_numbers(v1, v2);
      na.push_back({v1, v2, rx, n - rx, c.X, c.Y, false});
    }
  }
  return presentation_from_quiver(n, oracle_k(), std::move(ax), std::move(ay), std::move(na));
}

}  // namespace positroid
