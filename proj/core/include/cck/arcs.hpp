#pragma once

// Arcs, crossing bands and complete paths.
//
// A crossing band is the strip of triangles Δ_0..Δ_d that an arc γ passes
// through, read in the universal cover. Its vertices are lifted marked
// points numbered 0, 1, 2, ... in order of appearance: Δ_0 contributes three
// and each later triangle one new vertex. Paths are walked on these lifted
// vertices, which makes homotopy to γ a local condition: the odd step
// 2k+1 must be the side of Δ_k joining the end of step 2k to the start of
// step 2k+2.
//
// Endpoint labels: in Δ_k the crossed arc τ_{i_k} runs (clockwise) from t_k
// to s_k. A step along τ_{i_k} from t_k to s_k is γ-oriented.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cck/cover.hpp"
#include "cck/surface.hpp"

namespace cck {

struct Arc {
  enum class Kind { chord, annulus, band, edge };

  Kind kind = Kind::edge;
  int a = 0;  // chord endpoints (polygon vertices)
  int b = 0;
  AnnulusPoint from;  // annulus arc: copy 0 of `from` to copy `winding` of `to`
  AnnulusPoint to;
  std::int64_t winding = 0;
  std::vector<int> crossed;        // explicit band
  std::size_t first_triangle = 0;  // explicit band, 1-based index of Δ_0
  int edge = 0;                    // an arc of the triangulation

  static Arc make_chord(int a, int b);
  static Arc make_annulus(AnnulusPoint from, AnnulusPoint to, std::int64_t winding);
  static Arc make_band(std::vector<int> crossed, std::size_t first_triangle);
  static Arc make_edge(int e);
};

/// "chord a b", "annarc x y w", "band d i1 .. id / t0" or "edge e".
Arc parse_arc(std::string_view text);
std::string to_string(const Arc& arc);

/// Lift of an arc given by endpoints; the surface must carry a cover.
Chord arc_chord(const Triangulation& t, const Arc& arc);

struct GeometricCrossing {
  int edge;
  Chord lift;
};

/// Arcs of the lifted triangulation crossed by the lift of γ, in order from
/// γ.a to γ.b. The count is the minimal crossing number with T.
std::vector<GeometricCrossing> geometric_crossings(const Triangulation& t, const Chord& gamma);

struct CrossingBand {
  int gamma_edge = 0;  // d == 0 only
  std::vector<int> crossed;                    // i_1..i_d
  std::vector<std::size_t> triangles;          // Δ_0..Δ_d, indices into T
  std::vector<Triangle> band_triangles;        // copies of Δ_k
  std::vector<std::array<int, 3>> lifted;      // lifted corner ids of Δ_k
  std::vector<std::array<int, 3>> signs;       // orientation_sign per slot of Δ_k
  std::vector<int> vertex_labels;              // lifted id -> marked point
  std::vector<int> third;                      // [γ_{-1}], [γ_0], ..., [γ_{d+1}]
  std::vector<int> s_vertex;                   // s_k, k = 1..d at index k-1
  std::vector<int> t_vertex;                   // t_k
  int s = -1;                                  // start of γ (lifted)
  int t = -1;                                  // end of γ (lifted)

  std::size_t d() const noexcept { return crossed.size(); }
  /// τ_{[γ_k]} for -1 <= k <= d+1.
  int third_side(int k) const;
  int s_label(std::size_t k) const { return vertex_labels.at(static_cast<std::size_t>(s_vertex.at(k - 1))); }
  int t_label(std::size_t k) const { return vertex_labels.at(static_cast<std::size_t>(t_vertex.at(k - 1))); }
};

/// Band of an arc of the triangulation itself (d = 0).
CrossingBand trivial_band(const Triangulation& t, int edge);

/// Walks from triangle Δ_0 (0-based index) across i_1..i_d. Throws
/// DomainError unless each i_k is an interior side of Δ_{k-1} other than i_{k-1}.
CrossingBand build_band(const Triangulation& t, std::size_t first_triangle, const std::vector<int>& crossed);

CrossingBand crossing_band(const Triangulation& t, const Arc& gamma);

/// The band of γ traversed in the opposite direction.
CrossingBand reversed_band(const Triangulation& t, const CrossingBand& band);

struct PathStep {
  int edge = 0;
  int from = 0;  // marked point labels
  int to = 0;
  int direction = 1;  // +1 along the canonical orientation of the edge
  int lifted_from = -1;
  int lifted_to = -1;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct CompletePath {
  std::vector<PathStep> steps;

  /// The (edge, direction) sequence that orders paths.
  std::vector<std::pair<int, int>> key() const;
  /// Steps in opposite order and direction; lifted ids are dropped.
  CompletePath reversed() const;
};

/// "(8,1,3,3,3,5,12)".
std::string to_string(const CompletePath& path);

/// All complete paths, ordered by key(); direction -1 sorts before +1.
std::vector<CompletePath> enumerate_paths(const CrossingBand& band);

/// 1 <= k <= d.
bool gamma_oriented(const CrossingBand& band, const CompletePath& path, std::size_t k);

CompletePath alpha_zero(const CrossingBand& band);

}  // namespace cck
