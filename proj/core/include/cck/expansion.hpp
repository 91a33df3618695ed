#pragma once

// Laurent expansions from complete paths.
//
// Every operation here runs one path enumeration and derives its result
// from the (x, y) weights of the paths.

#include <cstddef>
#include <span>
#include <vector>

#include "cck/algebra.hpp"
#include "cck/arcs.hpp"
#include "cck/seeds.hpp"
#include "cck/surface.hpp"

namespace cck {

/// +1 per interior odd step, -1 per crossing; boundary segments count as 1.
ExponentVector x_weight(const Triangulation& t, const CrossingBand& band, const CompletePath& path);
/// +1 at y_{i_k} for every γ-oriented step 2k.
ExponentVector y_weight(const Triangulation& t, const CrossingBand& band, const CompletePath& path);

struct Expansion {
  CrossingBand band;
  std::vector<CompletePath> paths;
  LaurentPolynomial polynomial;  // principal coefficients
};

Expansion expand(const Triangulation& t, const Arc& gamma);

LaurentPolynomial expand_principal(const Triangulation& t, const Arc& gamma);
/// The expansion at x_i = 1.
LaurentPolynomial f_polynomial(const Triangulation& t, const Arc& gamma);

/// deg x_i = e_i, deg y_i = minus column i of B, so that y_i * prod_j x_j^{b_ji}
/// has degree 0.
std::vector<int> degree(const ExtendedMatrix& b, const ExponentVector& e);
/// Common degree of all terms, or throws InvariantError if there is none.
std::vector<int> homogeneous_degree(const ExtendedMatrix& b, const LaurentPolynomial& p);

struct GVector {
  std::vector<int> entries;
  std::vector<int> plus;   // I+, with repetitions, ascending
  std::vector<int> minus;  // I-, with repetitions, ascending
};

/// Reads I+ and I- off the s_k of the band and checks the result against the
/// degree of α^0 and against the homogeneity of the full expansion.
GVector g_vector(const Triangulation& t, const Arc& gamma);
GVector g_vector(const Triangulation& t, const Expansion& expansion);

/// Coefficients in Trop(u_1..u_l): y_i is replaced by yhat[i-1] and the
/// result divided by F evaluated in the semifield. The y-block of the result
/// holds the u-exponents.
LaurentPolynomial expand_with_coefficients(const Triangulation& t, const Arc& gamma, const TropicalSemifield& semifield,
                                           std::span<const TropicalSemifield::Element> yhat);
LaurentPolynomial expand_with_coefficients(const Expansion& expansion, const TropicalSemifield& semifield,
                                           std::span<const TropicalSemifield::Element> yhat);

struct ChiTable {
  struct Entry {
    std::vector<int> e;
    std::size_t count;
  };
  std::vector<Entry> entries;  // sorted by e
  std::size_t path_count = 0;
  /// Disc or annulus: the counts are Euler characteristics of quiver
  /// Grassmannians. Elsewhere they are only path counts.
  bool theorem = false;
};

ChiTable chi_table(const Triangulation& t, const Arc& gamma);
ChiTable chi_table(const Triangulation& t, const Expansion& expansion);

}  // namespace cck
