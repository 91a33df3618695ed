#pragma once

// Triangulations of unpunctured marked surfaces.
//
// Edges 1..n are the arcs of the triangulation, n+1..n+m the boundary
// segments. A triangle lists its three sides in clockwise cyclic order;
// side j runs clockwise from corner j-1 to corner j, so corner j is the
// marked point shared by sides j and j+1 (indices mod 3).
//
// A triangulation built from raw triangles is purely combinatorial: marked
// points, boundary components, genus and orientation consistency are all
// recovered from the gluing and validated. Polygons and annuli additionally
// carry a cover (see cover.hpp) with one lifted chord per edge, which is what
// lets arcs be given by endpoints instead of by crossing sequences.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cck/cover.hpp"
#include "cck/seeds.hpp"

namespace cck {

struct SurfaceDescriptor {
  int genus = 0;
  std::vector<int> marked_counts;  // one entry per boundary component

  int boundary_components() const noexcept { return static_cast<int>(marked_counts.size()); }
  int marked_points() const noexcept;
  /// 6g + 3b + m - 6.
  int rank() const noexcept;
  /// n - 2(g - 1) - b.
  int triangle_count() const noexcept;

  friend bool operator==(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;
};

struct Triangle {
  std::array<int, 3> sides{};
  std::array<int, 3> corners{};  // corners[j] = end point of sides[j]

  int start(int slot) const { return corners[static_cast<std::size_t>((slot + 2) % 3)]; }
  int end(int slot) const { return corners[static_cast<std::size_t>(slot % 3)]; }
  /// Slot of edge e, or -1.
  int slot_of(int e) const;
};

struct Occurrence {
  std::size_t triangle = 0;
  int slot = 0;
};

class Triangulation {
 public:
  /// Validates and builds. Marked points are numbered by first appearance.
  /// When `expected` is given, the recovered genus and marked counts must match.
  static Triangulation from_triangles(std::size_t n, std::size_t boundary_edges,
                                      const std::vector<std::array<int, 3>>& sides,
                                      const std::optional<SurfaceDescriptor>& expected = std::nullopt);

  const SurfaceDescriptor& surface() const noexcept { return surface_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t boundary_count() const noexcept { return boundary_; }
  std::size_t edge_count() const noexcept { return n_ + boundary_; }
  std::size_t marked_point_count() const noexcept { return marked_; }

  bool is_interior(int e) const noexcept { return e >= 1 && static_cast<std::size_t>(e) <= n_; }
  bool is_boundary(int e) const noexcept {
    return static_cast<std::size_t>(e) > n_ && static_cast<std::size_t>(e) <= n_ + boundary_;
  }
  void check_edge(int e) const;

  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
  /// Where e appears; the first entry fixes the canonical orientation of e.
  const std::vector<Occurrence>& occurrences(int e) const;
  /// Canonical (start, end) marked points of e.
  std::pair<int, int> endpoints(int e) const;
  /// +1 if slot `slot` of triangle t runs e in its canonical orientation, else -1.
  int orientation_sign(std::size_t t, int slot) const;

  bool simply_connected() const noexcept { return surface_.genus == 0 && surface_.boundary_components() == 1; }

  /// Embedded surfaces (polygons, annuli) only.
  const Cover* cover() const noexcept { return cover_ ? &*cover_ : nullptr; }
  const Chord& lift(int e) const;
  std::optional<int> edge_of(const Chord& c) const;
  /// Recomputes the triangles from the lifted chords and compares them with
  /// the combinatorial ones. Throws InvariantError on disagreement.
  void check_geometry() const;

  friend Triangulation flip(const Triangulation& t, int k);
  friend Triangulation make_embedded(const Cover& cover, std::size_t n, const std::vector<Chord>& lifts,
                                     const std::optional<SurfaceDescriptor>& expected);

 private:
  Triangulation() = default;
  void validate(const std::optional<SurfaceDescriptor>& expected, bool keep_corner_labels);

  SurfaceDescriptor surface_;
  std::size_t n_ = 0;
  std::size_t boundary_ = 0;
  std::size_t marked_ = 0;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<Occurrence>> occurrences_;  // index e
  std::optional<Cover> cover_;
  std::vector<Chord> lifts_;  // index e, normalized
};

/// Surface with a cover: `lifts[e-1]` is a lift of edge e for every edge
/// including the boundary. Triangles are derived from the chords.
Triangulation make_embedded(const Cover& cover, std::size_t n, const std::vector<Chord>& lifts,
                            const std::optional<SurfaceDescriptor>& expected = std::nullopt);

/// Polygon with vertices 1..m counterclockwise. Diagonal i gets edge id i,
/// boundary segment (k, k+1) gets id n+k.
Triangulation build_polygon(int m, const std::vector<std::pair<int, int>>& diagonals);

struct AnnulusArcSpec {
  AnnulusPoint from;
  AnnulusPoint to;
  std::int64_t winding = 0;
};

/// Annulus with p outer and q inner points. Arc i gets edge id i; outer
/// segment (o_r, o_{r+1}) gets n+r and inner segment (i_s, i_{s+1}) gets n+p+s.
Triangulation build_annulus(int p, int q, const std::vector<AnnulusArcSpec>& arcs);

/// The n x n block of the signed adjacency matrix with the identity below.
ExtendedMatrix build_BT(const Triangulation& t);

/// Replaces interior edge k by the other diagonal of its quadrilateral; the
/// new arc keeps the id k.
Triangulation flip(const Triangulation& t, int k);

}  // namespace cck
