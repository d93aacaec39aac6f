#pragma once

#include <string>
#include <vector>

#include "positroid/perm.hpp"

namespace positroid {

struct Arrow {
  int id;
  int src;
  int dst;

  bool operator==(const Arrow&) const = default;
};

/// A quiver with faces in a disk, as raw fixture data. Ids are arbitrary
/// integers; boundary lists the boundary vertices clockwise starting at the
/// vertex labelled 1.
struct DimerModel {
  std::vector<int> boundary;
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> faces_cc;
  std::vector<std::vector<int>> faces_cl;

  bool operator==(const DimerModel&) const = default;
};

Json to_json(const DimerModel& m);
DimerModel model_from_json(const Json& j);

/// Dense view of a model. Vertices and arrows are renumbered 0..V-1 and
/// 0..A-1 in input order; faces are numbered cc first, then cl.
/// Construction throws Error(InvalidModel) on dangling or duplicate ids,
/// malformed face cycles, or arrows lying on a face side twice; the
/// remaining axioms are checked by validate_model.
class IndexedModel {
 public:
  explicit IndexedModel(const DimerModel& m);

  struct Side {
    int face = -1;
    int pos = -1;
  };

  const DimerModel& raw() const { return raw_; }
  int n() const { return static_cast<int>(boundary_.size()); }
  int num_vertices() const { return static_cast<int>(raw_.vertices.size()); }
  int num_arrows() const { return static_cast<int>(raw_.arrows.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  int src(int a) const { return src_[static_cast<std::size_t>(a)]; }
  int dst(int a) const { return dst_[static_cast<std::size_t>(a)]; }
  const Side& cc(int a) const { return cc_[static_cast<std::size_t>(a)]; }
  const Side& cl(int a) const { return cl_[static_cast<std::size_t>(a)]; }
  bool is_boundary_arrow(int a) const { return (cc(a).face < 0) != (cl(a).face < 0); }
  bool is_internal_arrow(int a) const { return cc(a).face >= 0 && cl(a).face >= 0; }

  const std::vector<int>& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
  bool face_is_cl(int f) const { return f >= num_cc_; }
  int face_of(int a, bool cl_side) const { return cl_side ? cl(a).face : cc(a).face; }
  /// Arrow preceding a in face f (a must lie in f).
  int pred_in_face(int a, int f) const;
  int next_in_face(int a, int f) const;
  /// The face of a other than f, or -1.
  int other_face(int a, int f) const;

  /// 1..n for boundary vertices, 0 for interior ones.
  int label(int v) const { return label_[static_cast<std::size_t>(v)]; }
  int boundary_vertex(int j) const { return boundary_[static_cast<std::size_t>(wrap(j, n()) - 1)]; }
  /// The boundary arrow between boundary vertices j and j+1, or -1.
  int boundary_arrow(int j) const { return alpha_[static_cast<std::size_t>(wrap(j, n()) - 1)]; }
  /// True iff the boundary arrow alpha_j points j -> j+1.
  bool alpha_is_x(int j) const;

  const std::vector<int>& out_arrows(int v) const { return out_[static_cast<std::size_t>(v)]; }
  int vertex_id(int v) const { return raw_.vertices[static_cast<std::size_t>(v)]; }
  int arrow_id(int a) const { return raw_.arrows[static_cast<std::size_t>(a)].id; }

 private:
  DimerModel raw_;
  std::vector<int> src_, dst_, label_, boundary_, alpha_;
  std::vector<Side> cc_, cl_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> out_;
  int num_cc_ = 0;
};

enum class ModelViolationKind {
  DuplicateId,
  UnknownVertex,
  UnknownArrow,
  SelfLoop,
  FaceNotCycle,
  RepeatedArrowInFace,
  ArrowFaceCount,
  InternalArrowFaceSides,
  IncidenceDisconnected,
  NotADisk,
  BoundaryTooSmall,
  BoundaryVertexRepeated,
  BoundaryNotCycle,
  BoundaryOrientation,
};

struct ModelViolation {
  ModelViolationKind kind;
  std::string detail;
};

std::string_view violation_name(ModelViolationKind kind);

/// Every violated axiom; empty when the model is valid.
std::vector<ModelViolation> validate_model(const DimerModel& m);

struct StrandStep {
  int arrow;      // dense arrow index
  int into_face;  // face entered after crossing the arrow, -1 when leaving the disk
};

struct Strand {
  std::vector<StrandStep> steps;
  int start_sv = 0;  // strand-vertex label, 0 for a closed cycle
  int end_sv = 0;
  bool closed = false;
};

struct StrandSet {
  std::vector<Strand> boundary;  // boundary[j - 1] starts at strand-vertex j
  std::vector<Strand> closed;
};

/// Zig-zag traversal: from arrow a in face F the strand moves to the arrow
/// following a in F and then into that arrow's other face.
/// Throws Error(NonterminatingStrand).
StrandSet strands(const IndexedModel& m);

/// Throws Error(InconsistentModel) when closed strands exist.
DecoratedPermutation decorated_permutation(const IndexedModel& m);

enum class BadConfigurationKind { SelfIntersection, ClosedCycle, BadLens };

struct BadConfiguration {
  BadConfigurationKind kind;
  std::vector<int> strands;  // 1..n for boundary strands, n+1.. for closed ones
  std::vector<int> arrows;   // arrow ids
};

std::string_view bad_configuration_name(BadConfigurationKind kind);
std::string describe(const BadConfiguration& b);

/// Empty when the strand diagram has no bad configurations.
std::vector<BadConfiguration> consistency_check(const IndexedModel& m);

struct StrandSets {
  std::vector<int> cl;  // strand-vertex labels j of the strands in CL(v2, v1)
  std::vector<int> cc;  // and in CC(v2, v1)
  int cl_count() const { return static_cast<int>(cl.size()); }
  int cc_count() const { return static_cast<int>(cc.size()); }
};

/// CL(v2, v1): strands j with v2 <= j < pi(j) <= v1 - 1 clockwise;
/// CC(v2, v1): strands j with v1 <= pi(j) < j <= v2 - 1 clockwise.
StrandSets strand_sets(const DecoratedPermutation& p, int v1, int v2);

}  // namespace positroid
