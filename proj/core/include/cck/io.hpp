#pragma once

// Text formats. Every file starts with the line "cck/1"; '#' starts a comment.
//
// Surface file:
//
//   cck/1
//   surface g b m1 .. mb      genus, boundary components, marked points on each
//   edges n m                 n arcs (ids 1..n), m boundary segments (n+1..n+m)
//   tri e1 e2 e3              a triangle, sides in clockwise order; boundary
//                             ids may carry a 'b' suffix ("7b")
//   polygon m                 optional geometry: polygon, vertices 1..m ccw,
//   diag e a b                  arc e is the diagonal (a, b)
//   annulus p q               optional geometry: annulus,
//   lift e x y w                arc e runs from copy 0 of x to copy w of y
//   chord a b                 arcs to process (see parse_arc); any number
//   annarc x y w
//   band d i1 .. id / t0
//   edge e
//
// With geometry the triangles are derived from it and the boundary ids are
// implied (polygon: (k, k+1) -> n+k; annulus: (o_r, o_{r+1}) -> n+r and
// (i_s, i_{s+1}) -> n+p+s). Any "tri" lines must then agree with the derived
// triangles. Triangles are numbered 1.. in the order write_surface prints them.
//
// Coefficient file: "cck/1", then l, then n rows of l integers; row i holds
// the exponents of u_1..u_l in the coefficient y_i.

#include <iosfwd>
#include <string>
#include <vector>

#include "cck/algebra.hpp"
#include "cck/arcs.hpp"
#include "cck/expansion.hpp"
#include "cck/seeds.hpp"
#include "cck/surface.hpp"

namespace cck {

struct SurfaceFile {
  Triangulation triangulation;
  std::vector<Arc> arcs;
};

/// Throws ParseError with the offending line for malformed input and for
/// triangulations that violate an invariant.
SurfaceFile read_surface(std::istream& in);
SurfaceFile read_surface_file(const std::string& path);
void write_surface(std::ostream& out, const Triangulation& t, const std::vector<Arc>& arcs = {});

std::vector<TropicalSemifield::Element> read_coefficients(std::istream& in, std::size_t n);
std::vector<TropicalSemifield::Element> read_coefficients_file(const std::string& path, std::size_t n);
/// B_T with the coefficient rows below: b_{n+j, i} = yhat[i-1][j-1].
ExtendedMatrix coefficient_matrix(const Triangulation& t, const std::vector<TropicalSemifield::Element>& yhat);

/// One-line JSON records with a fixed field order.
std::string gvector_json(const Arc& arc, const GVector& g);
std::string chi_json(const Arc& arc, const ChiTable& table);

}  // namespace cck
