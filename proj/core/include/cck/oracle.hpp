#pragma once

// Cluster variables by seed mutation, independent of the path formula.
//
// The arc is brought into the triangulation by flips that lower its
// crossing number, mutating a symbolic seed alongside. The crossed arcs are
// tried last to first; if none of them lowers the crossing number, a
// breadth-first search over flip sequences takes over.

#include <cstddef>
#include <optional>
#include <vector>

#include "cck/algebra.hpp"
#include "cck/arcs.hpp"
#include "cck/seeds.hpp"
#include "cck/surface.hpp"

namespace cck {

struct OracleOptions {
  /// Triangulations the search may visit per stuck step; 0 means 10 * d.
  std::size_t budget = 0;
  /// Extended matrix of the initial seed; principal coefficients if absent.
  /// Its top block must be B_T.
  std::optional<ExtendedMatrix> matrix;
};

struct OracleResult {
  LaurentPolynomial value;
  std::vector<int> flip_sequence;
  std::size_t seeds_visited = 0;
  bool used_search = false;
};

/// Needs a polygon or annulus surface. Throws DomainError when the search
/// budget is exhausted.
OracleResult oracle_expand(const Triangulation& t, const Arc& gamma, const OracleOptions& options = {});

}  // namespace cck
