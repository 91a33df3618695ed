#pragma once

// Generated test surfaces and arcs.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cck/arcs.hpp"
#include "cck/surface.hpp"

namespace cck {

struct CorpusSurface {
  std::string name;
  Triangulation triangulation;
  std::vector<Arc> arcs;
};

/// Diagonal sets of all triangulations of the m-gon, in a fixed order.
std::vector<std::vector<std::pair<int, int>>> polygon_triangulations(int m);
/// All diagonals (a, b), a < b.
std::vector<Arc> polygon_chords(int m);

/// Zigzag triangulation: o_1 joined to i_1, then fanning around.
Triangulation build_standard_annulus(int p, int q);
/// Every arc of the (p, q) annulus with |winding| <= max_winding, one
/// representative per isotopy class.
std::vector<Arc> annulus_arcs(int p, int q, int max_winding);

/// Polygons 4 <= m <= max_m with all triangulations and chords; (p, q)
/// annuli with p + q <= max_pq, standard triangulation and its single flips,
/// arcs with |winding| <= max_winding.
std::vector<CorpusSurface> generate_corpus(int max_m, int max_pq, int max_winding);

/// m <= 8 and the (2, 2) annulus with |w| <= 2, including the bundled
/// annulus triangulation.
std::vector<CorpusSurface> acceptance_corpus();
/// m <= 10 and p + q <= 6 with |w| <= 2.
std::vector<CorpusSurface> full_corpus();

std::size_t case_count(const std::vector<CorpusSurface>& corpus);

}  // namespace cck
