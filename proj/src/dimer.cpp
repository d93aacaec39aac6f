#include "positroid/dimer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "positroid/error.hpp"

namespace positroid {

namespace {

std::string ids(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

// Violations that prevent building an IndexedModel.
std::vector<ModelViolation> structural_violations(const DimerModel& m) {
  std::vector<ModelViolation> out;
  auto add = [&](ModelViolationKind k, std::string d) { out.push_back({k, std::move(d)}); };

  std::unordered_map<int, int> vidx, aidx;
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    if (!vidx.emplace(m.vertices[i], static_cast<int>(i)).second)
      add(ModelViolationKind::DuplicateId, "vertex " + std::to_string(m.vertices[i]));
  for (std::size_t i = 0; i < m.arrows.size(); ++i) {
    const Arrow& a = m.arrows[i];
    if (!aidx.emplace(a.id, static_cast<int>(i)).second)
      add(ModelViolationKind::DuplicateId, "arrow " + std::to_string(a.id));
    if (!vidx.count(a.src) || !vidx.count(a.dst))
      add(ModelViolationKind::UnknownVertex, "arrow " + std::to_string(a.id) + " endpoint");
  }
  std::set<int> seen_boundary;
  for (int b : m.boundary) {
    if (!vidx.count(b)) add(ModelViolationKind::UnknownVertex, "boundary vertex " + std::to_string(b));
    if (!seen_boundary.insert(b).second)
      add(ModelViolationKind::BoundaryVertexRepeated, "boundary vertex " + std::to_string(b));
  }
  if (!out.empty()) return out;

  for (const auto* faces : {&m.faces_cc, &m.faces_cl}) {
    const char* side = faces == &m.faces_cc ? "cc" : "cl";
    std::set<int> on_side;
    for (std::size_t f = 0; f < faces->size(); ++f) {
      const auto& cyc = (*faces)[f];
      std::string where = std::string(side) + " face " + std::to_string(f) + " [" + ids(cyc) + "]";
      bool known = !cyc.empty();
      for (int id : cyc) {
        if (!aidx.count(id)) {
          add(ModelViolationKind::UnknownArrow, where);
          known = false;
        }
      }
      if (!known) {
        if (cyc.empty()) add(ModelViolationKind::FaceNotCycle, where + " is empty");
        continue;
      }
      std::set<int> in_face;
      for (int id : cyc) {
        if (!in_face.insert(id).second) add(ModelViolationKind::RepeatedArrowInFace, where);
        else if (!on_side.insert(id).second)
          add(ModelViolationKind::InternalArrowFaceSides,
              "arrow " + std::to_string(id) + " lies in two " + side + " faces");
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Arrow& a = m.arrows[static_cast<std::size_t>(aidx[cyc[i]])];
        const Arrow& b = m.arrows[static_cast<std::size_t>(aidx[cyc[(i + 1) % cyc.size()]])];
        if (a.dst != b.src) {
          add(ModelViolationKind::FaceNotCycle, where);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

Json to_json(const DimerModel& m) {
  Json out;
  out["boundary"] = m.boundary;
  out["vertices"] = m.vertices;
  Json arrows = Json::array();
  for (const Arrow& a : m.arrows) {
    Json ja;
    ja["id"] = a.id;
    ja["src"] = a.src;
    ja["dst"] = a.dst;
    arrows.push_back(std::move(ja));
  }
  out["arrows"] = std::move(arrows);
  out["faces_cc"] = m.faces_cc;
  out["faces_cl"] = m.faces_cl;
  return out;
}

DimerModel model_from_json(const Json& j) {
  try {
    DimerModel m;
    m.boundary = j.at("boundary").get<std::vector<int>>();
    m.vertices = j.at("vertices").get<std::vector<int>>();
    for (const auto& ja : j.at("arrows"))
      m.arrows.push_back({ja.at("id").get<int>(), ja.at("src").get<int>(), ja.at("dst").get<int>()});
    m.faces_cc = j.at("faces_cc").get<std::vector<std::vector<int>>>();
    m.faces_cl = j.at("faces_cl").get<std::vector<std::vector<int>>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("dimer model JSON: ") + e.what());
  }
}

IndexedModel::IndexedModel(const DimerModel& m) : raw_(m) {
  auto bad = structural_violations(m);
  if (!bad.empty())
    throw Error(ErrorCode::InvalidModel,
                std::string(violation_name(bad.front().kind)) + ": " + bad.front().detail);
  std::unordered_map<int, int> vidx, aidx;
  for (std::size_t i = 0; i < m.vertices.size(); ++i) vidx[m.vertices[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < m.arrows.size(); ++i) aidx[m.arrows[i].id] = static_cast<int>(i);

  const std::size_t A = m.arrows.size();
  src_.resize(A);
  dst_.resize(A);
  out_.resize(m.vertices.size());
  for (std::size_t i = 0; i < A; ++i) {
    src_[i] = vidx[m.arrows[i].src];
    dst_[i] = vidx[m.arrows[i].dst];
    out_[static_cast<std::size_t>(src_[i])].push_back(static_cast<int>(i));
  }
  cc_.resize(A);
  cl_.resize(A);
  num_cc_ = static_cast<int>(m.faces_cc.size());
  for (const auto* faces : {&m.faces_cc, &m.faces_cl}) {
    bool is_cl = faces == &m.faces_cl;
    for (const auto& cyc : *faces) {
      int f = static_cast<int>(faces_.size());
      std::vector<int> dense;
      for (std::size_t p = 0; p < cyc.size(); ++p) {
        int a = aidx[cyc[p]];
        dense.push_back(a);
        (is_cl ? cl_ : cc_)[static_cast<std::size_t>(a)] = {f, static_cast<int>(p)};
      }
      faces_.push_back(std::move(dense));
    }
  }
  label_.assign(m.vertices.size(), 0);
  for (std::size_t j = 0; j < m.boundary.size(); ++j) {
    int v = vidx[m.boundary[j]];
    boundary_.push_back(v);
    label_[static_cast<std::size_t>(v)] = static_cast<int>(j) + 1;
  }
  alpha_.assign(boundary_.size(), -1);
  const int nb = n();
  for (int a = 0; a < static_cast<int>(A); ++a) {
    if (!is_boundary_arrow(a)) continue;
    int ls = label(src(a)), ld = label(dst(a));
    if (ls == 0 || ld == 0 || nb < 2) continue;
    int j = 0;
    if (wrap(ls + 1, nb) == ld) j = ls;
    else if (wrap(ld + 1, nb) == ls) j = ld;
    if (j == 0) continue;
    int& slot = alpha_[static_cast<std::size_t>(j - 1)];
    slot = slot == -1 ? a : -2;
  }
  for (int& s : alpha_)
    if (s == -2) s = -1;
}

int IndexedModel::pred_in_face(int a, int f) const {
  const auto& cyc = face(f);
  int p = face_is_cl(f) ? cl(a).pos : cc(a).pos;
  int L = static_cast<int>(cyc.size());
  return cyc[static_cast<std::size_t>((p + L - 1) % L)];
}

int IndexedModel::next_in_face(int a, int f) const {
  const auto& cyc = face(f);
  int p = face_is_cl(f) ? cl(a).pos : cc(a).pos;
  return cyc[static_cast<std::size_t>((p + 1) % static_cast<int>(cyc.size()))];
}

int IndexedModel::other_face(int a, int f) const {
  if (cc(a).face == f) return cl(a).face;
  if (cl(a).face == f) return cc(a).face;
  return -1;
}

bool IndexedModel::alpha_is_x(int j) const {
  int a = boundary_arrow(j);
  return a >= 0 && label(src(a)) == wrap(j, n());
}

std::string_view violation_name(ModelViolationKind kind) {
  switch (kind) {
    case ModelViolationKind::DuplicateId: return "DuplicateId";
    case ModelViolationKind::UnknownVertex: return "UnknownVertex";
    case ModelViolationKind::UnknownArrow: return "UnknownArrow";
    case ModelViolationKind::SelfLoop: return "SelfLoop";
    case ModelViolationKind::FaceNotCycle: return "FaceNotCycle";
    case ModelViolationKind::RepeatedArrowInFace: return "RepeatedArrowInFace";
    case ModelViolationKind::ArrowFaceCount: return "ArrowFaceCount";
    case ModelViolationKind::InternalArrowFaceSides: return "InternalArrowFaceSides";
    case ModelViolationKind::IncidenceDisconnected: return "IncidenceDisconnected";
    case ModelViolationKind::NotADisk: return "NotADisk";
    case ModelViolationKind::BoundaryTooSmall: return "BoundaryTooSmall";
    case ModelViolationKind::BoundaryVertexRepeated: return "BoundaryVertexRepeated";
    case ModelViolationKind::BoundaryNotCycle: return "BoundaryNotCycle";
    case ModelViolationKind::BoundaryOrientation: return "BoundaryOrientation";
  }
  return "?";
}

std::vector<ModelViolation> validate_model(const DimerModel& m) {
  std::vector<ModelViolation> out = structural_violations(m);
  auto add = [&](ModelViolationKind k, std::string d) { out.push_back({k, std::move(d)}); };
  if (m.boundary.size() < 3)
    add(ModelViolationKind::BoundaryTooSmall, std::to_string(m.boundary.size()) + " boundary vertices");
  for (const Arrow& a : m.arrows)
    if (a.src == a.dst) add(ModelViolationKind::SelfLoop, "arrow " + std::to_string(a.id));
  if (!out.empty()) return out;

  IndexedModel im(m);
  for (int a = 0; a < im.num_arrows(); ++a)
    if (im.cc(a).face < 0 && im.cl(a).face < 0)
      add(ModelViolationKind::ArrowFaceCount, "arrow " + std::to_string(im.arrow_id(a)) + " lies in no face");

  // Incidence graph at each vertex: arrows at v, joined when consecutive in a face.
  for (int v = 0; v < im.num_vertices(); ++v) {
    std::vector<int> local;
    for (int a = 0; a < im.num_arrows(); ++a)
      if (im.src(a) == v || im.dst(a) == v) local.push_back(a);
    if (local.empty()) {
      add(ModelViolationKind::IncidenceDisconnected, "vertex " + std::to_string(im.vertex_id(v)) + " is isolated");
      continue;
    }
    std::map<int, int> pos;
    for (std::size_t i = 0; i < local.size(); ++i) pos[local[i]] = static_cast<int>(i);
    std::vector<int> parent(local.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (int f = 0; f < im.num_faces(); ++f) {
      const auto& cyc = im.face(f);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (im.dst(a) != v) continue;
        parent[static_cast<std::size_t>(find(pos[a]))] = find(pos[b]);
      }
    }
    int roots = 0;
    for (std::size_t i = 0; i < local.size(); ++i) roots += find(static_cast<int>(i)) == static_cast<int>(i);
    if (roots != 1)
      add(ModelViolationKind::IncidenceDisconnected, "vertex " + std::to_string(im.vertex_id(v)));
  }

  long euler = static_cast<long>(m.vertices.size()) - static_cast<long>(m.arrows.size()) +
               static_cast<long>(m.faces_cc.size() + m.faces_cl.size());
  if (euler != 1) add(ModelViolationKind::NotADisk, "V - E + F = " + std::to_string(euler));

  const int n = im.n();
  int boundary_arrows = 0;
  for (int a = 0; a < im.num_arrows(); ++a) boundary_arrows += im.is_boundary_arrow(a);
  for (int j = 1; j <= n; ++j) {
    if (im.boundary_arrow(j) < 0)
      add(ModelViolationKind::BoundaryNotCycle,
          "no unique boundary arrow between boundary vertices " + std::to_string(j) + " and " +
              std::to_string(wrap(j + 1, n)));
  }
  if (boundary_arrows != n)
    add(ModelViolationKind::BoundaryNotCycle,
        std::to_string(boundary_arrows) + " boundary arrows for " + std::to_string(n) + " boundary vertices");
  for (int j = 1; j <= n; ++j) {
    int a = im.boundary_arrow(j);
    if (a < 0) continue;
    bool in_cl = im.cl(a).face >= 0;
    if (in_cl != im.alpha_is_x(j))
      add(ModelViolationKind::BoundaryOrientation,
          "boundary arrow " + std::to_string(im.arrow_id(a)) +
              (in_cl ? " runs counter-clockwise but lies in a cl face"
                     : " runs clockwise but lies in a cc face"));
  }
  return out;
}

StrandSet strands(const IndexedModel& m) {
  const int n = m.n();
  const int cap = 2 * m.num_arrows() + 2;
  StrandSet out;
  // covered[a][side]: internal arrow a has been crossed into its cc (0) or cl (1) face.
  std::vector<std::array<bool, 2>> covered(static_cast<std::size_t>(m.num_arrows()), {false, false});

  for (int j = 1; j <= n; ++j) {
    int a = m.boundary_arrow(j);
    if (a < 0) throw Error(ErrorCode::InvalidModel, "missing boundary arrow " + std::to_string(j));
    Strand s;
    s.start_sv = j;
    int f = m.cc(a).face >= 0 ? m.cc(a).face : m.cl(a).face;
    s.steps.push_back({a, f});
    while (true) {
      if (static_cast<int>(s.steps.size()) > cap)
        throw Error(ErrorCode::NonterminatingStrand, "strand from " + std::to_string(j) + " does not terminate");
      int b = m.next_in_face(a, f);
      int g = m.other_face(b, f);
      if (g < 0) {
        s.steps.push_back({b, -1});
        for (int e = 1; e <= n; ++e)
          if (m.boundary_arrow(e) == b) s.end_sv = e;
        break;
      }
      covered[static_cast<std::size_t>(b)][m.face_is_cl(g) ? 1 : 0] = true;
      s.steps.push_back({b, g});
      a = b;
      f = g;
    }
    out.boundary.push_back(std::move(s));
  }

  for (int a0 = 0; a0 < m.num_arrows(); ++a0) {
    if (!m.is_internal_arrow(a0)) continue;
    for (int side = 0; side < 2; ++side) {
      if (covered[static_cast<std::size_t>(a0)][static_cast<std::size_t>(side)]) continue;
      Strand s;
      s.closed = true;
      int a = a0, f = m.face_of(a0, side == 1);
      do {
        if (static_cast<int>(s.steps.size()) > cap)
          throw Error(ErrorCode::NonterminatingStrand, "closed strand does not close");
        covered[static_cast<std::size_t>(a)][m.face_is_cl(f) ? 1 : 0] = true;
        s.steps.push_back({a, f});
        int b = m.next_in_face(a, f);
        int g = m.other_face(b, f);
        if (g < 0) throw Error(ErrorCode::InvalidModel, "closed strand reached the boundary");
        a = b;
        f = g;
      } while (!(a == a0 && f == m.face_of(a0, side == 1)));
      out.closed.push_back(std::move(s));
    }
  }
  return out;
}

DecoratedPermutation decorated_permutation(const IndexedModel& m) {
  StrandSet s = strands(m);
  if (!s.closed.empty()) throw Error(ErrorCode::InconsistentModel, "strand diagram has closed cycles");
  const int n = m.n();
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<Decoration> dec(static_cast<std::size_t>(n), Decoration::None);
  for (const Strand& z : s.boundary) {
    image[static_cast<std::size_t>(z.start_sv - 1)] = z.end_sv;
    if (z.start_sv == z.end_sv)
      dec[static_cast<std::size_t>(z.start_sv - 1)] =
          m.alpha_is_x(z.start_sv) ? Decoration::Coloop : Decoration::Loop;
  }
  return DecoratedPermutation(std::move(image), std::move(dec));
}

std::string_view bad_configuration_name(BadConfigurationKind kind) {
  switch (kind) {
    case BadConfigurationKind::SelfIntersection: return "SelfIntersection";
    case BadConfigurationKind::ClosedCycle: return "ClosedCycle";
    case BadConfigurationKind::BadLens: return "BadLens";
  }
  return "?";
}

std::string describe(const BadConfiguration& b) {
  return std::string(bad_configuration_name(b.kind)) + " strands [" + ids(b.strands) + "] arrows [" +
         ids(b.arrows) + "]";
}

std::vector<BadConfiguration> consistency_check(const IndexedModel& m) {
  StrandSet s = strands(m);
  std::vector<BadConfiguration> out;
  std::vector<const Strand*> all;
  for (const Strand& z : s.boundary) all.push_back(&z);
  for (const Strand& z : s.closed) all.push_back(&z);

  // First position of each arrow along each strand.
  std::vector<std::map<int, int>> first(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t p = 0; p < all[i]->steps.size(); ++p) {
      int a = all[i]->steps[p].arrow;
      auto [it, fresh] = first[i].emplace(a, static_cast<int>(p));
      if (!fresh)
        out.push_back({BadConfigurationKind::SelfIntersection, {static_cast<int>(i) + 1}, {m.arrow_id(a)}});
    }
  }
  for (std::size_t i = s.boundary.size(); i < all.size(); ++i) {
    std::vector<int> arrows;
    for (const auto& st : all[i]->steps) arrows.push_back(m.arrow_id(st.arrow));
    out.push_back({BadConfigurationKind::ClosedCycle, {static_cast<int>(i) + 1}, arrows});
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      // Shared arrows in order along strand i; a pair appearing in the same
      // order along strand j is a parallel double crossing.
      std::vector<std::pair<int, int>> shared;  // (pos in i, pos in j)
      for (const auto& [a, pi] : first[i]) {
        auto it = first[j].find(a);
        if (it != first[j].end()) shared.emplace_back(pi, it->second);
      }
      std::sort(shared.begin(), shared.end());
      for (std::size_t x = 0; x < shared.size(); ++x) {
        bool found = false;
        for (std::size_t y = x + 1; y < shared.size() && !found; ++y) {
          if (shared[y].second > shared[x].second) {
            int ax = all[i]->steps[static_cast<std::size_t>(shared[x].first)].arrow;
            int ay = all[i]->steps[static_cast<std::size_t>(shared[y].first)].arrow;
            out.push_back({BadConfigurationKind::BadLens,
                           {static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                           {m.arrow_id(ax), m.arrow_id(ay)}});
            found = true;
          }
        }
        if (found) break;
      }
    }
  }
  return out;
}

StrandSets strand_sets(const DecoratedPermutation& p, int v1, int v2) {
  const int n = p.size();
  if (v1 < 1 || v1 > n || v2 < 1 || v2 > n) throw Error(ErrorCode::OutOfRange, "boundary vertex out of range");
  if (v1 == v2) throw Error(ErrorCode::EqualVertices, "v1 and v2 must differ");
  StrandSets out;
  const int ylimit = clockwise_offset(v2, wrap(v1 - 1, n), n);
  const int xlimit = clockwise_offset(v1, wrap(v2 - 1, n), n);
  for (int j = 1; j <= n; ++j) {
    int a = clockwise_offset(v2, j, n), b = clockwise_offset(v2, p(j), n);
    if (a < b && b <= ylimit) out.cl.push_back(j);
    int c = clockwise_offset(v1, p(j), n), d = clockwise_offset(v1, j, n);
    if (c < d && d <= xlimit) out.cc.push_back(j);
  }
  return out;
}

}  // namespace positroid
