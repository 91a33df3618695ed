#include "cck/expansion.hpp"

#include <algorithm>
#include <map>

#include "cck/error.hpp"

namespace cck {

ExponentVector x_weight(const Triangulation& t, const CrossingBand& band, const CompletePath& path) {
  const std::size_t n = t.n();
  ExponentVector e(n, 0);
  for (std::size_t j = 0; j < path.steps.size(); j += 2) {
    const int edge = path.steps[j].edge;
    if (t.is_interior(edge)) e.x()[static_cast<std::size_t>(edge - 1)] += 1;
  }
  for (int edge : band.crossed) e.x()[static_cast<std::size_t>(edge - 1)] -= 1;
  return e;
}

ExponentVector y_weight(const Triangulation& t, const CrossingBand& band, const CompletePath& path) {
  ExponentVector e(0, t.n());
  for (std::size_t k = 1; k <= band.d(); ++k)
    if (gamma_oriented(band, path, k)) e.y()[static_cast<std::size_t>(band.crossed[k - 1] - 1)] += 1;
  return e;
}

Expansion expand(const Triangulation& t, const Arc& gamma) {
  Expansion r;
  r.band = crossing_band(t, gamma);
  r.paths = enumerate_paths(r.band);
  r.polynomial = LaurentPolynomial(t.n(), t.n());
  for (const auto& path : r.paths) {
    ExponentVector e(x_weight(t, r.band, path).x(), y_weight(t, r.band, path).y());
    r.polynomial.add_term(e, 1);
  }
  return r;
}

LaurentPolynomial expand_principal(const Triangulation& t, const Arc& gamma) { return expand(t, gamma).polynomial; }

LaurentPolynomial f_polynomial(const Triangulation& t, const Arc& gamma) {
  return substitute_x_one(expand(t, gamma).polynomial);
}

std::vector<int> degree(const ExtendedMatrix& b, const ExponentVector& e) {
  const std::size_t n = b.n();
  if (e.x_rank() != n || e.y_rank() != n) throw InvariantError("grading needs x- and y-rank equal to the matrix rank");
  std::vector<int> deg = e.x();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) deg[j - 1] -= e.y()[i - 1] * b(j, i);
  return deg;
}

std::vector<int> homogeneous_degree(const ExtendedMatrix& b, const LaurentPolynomial& p) {
  if (p.is_zero()) throw InvariantError("the zero polynomial has no degree");
  const auto first = degree(b, p.terms().begin()->first);
  for (const auto& [e, c] : p.terms())
    if (degree(b, e) != first) throw InvariantError("expansion is not homogeneous");
  return first;
}

GVector g_vector(const Triangulation& t, const Arc& gamma) { return g_vector(t, expand(t, gamma)); }

GVector g_vector(const Triangulation& t, const Expansion& expansion) {
  const CrossingBand& band = expansion.band;
  const std::size_t d = band.d();
  GVector g;
  g.entries.assign(t.n(), 0);
  if (d == 0) {
    g.plus = {band.gamma_edge};
  } else {
    auto s = [&](std::size_t k) -> int {
      if (k == 0) return band.s_vertex[0];
      if (k == d + 1) return -1;
      return band.s_vertex[k - 1];
    };
    for (std::size_t k = 1; k <= d; ++k)
      if (s(k - 1) == s(k) && s(k) != s(k + 1)) g.minus.push_back(band.crossed[k - 1]);
    for (std::size_t k = 2; k + 1 <= d; ++k)
      if (s(k - 1) != s(k) && s(k) == s(k + 1)) g.plus.push_back(band.crossed[k - 1]);
    g.plus.push_back(band.third_side(-1));
    g.plus.push_back(band.third_side(static_cast<int>(d) + 1));
  }
  std::sort(g.plus.begin(), g.plus.end());
  std::sort(g.minus.begin(), g.minus.end());
  for (int h : g.plus)
    if (t.is_interior(h)) g.entries[static_cast<std::size_t>(h - 1)] += 1;
  for (int h : g.minus)
    if (t.is_interior(h)) g.entries[static_cast<std::size_t>(h - 1)] -= 1;

  const CompletePath a0 = alpha_zero(band);
  if (x_weight(t, band, a0).x() != g.entries) throw InvariantError("g-vector differs from the degree of alpha^0");
  if (!y_weight(t, band, a0).y_is_zero()) throw InvariantError("alpha^0 has a gamma-oriented step");
  if (homogeneous_degree(build_BT(t), expansion.polynomial) != g.entries)
    throw InvariantError("g-vector differs from the degree of the expansion");
  return g;
}

LaurentPolynomial expand_with_coefficients(const Triangulation& t, const Arc& gamma, const TropicalSemifield& semifield,
                                           std::span<const TropicalSemifield::Element> yhat) {
  return expand_with_coefficients(expand(t, gamma), semifield, yhat);
}

LaurentPolynomial expand_with_coefficients(const Expansion& expansion, const TropicalSemifield& semifield,
                                           std::span<const TropicalSemifield::Element> yhat) {
  const LaurentPolynomial& p = expansion.polynomial;
  const std::size_t ell = semifield.generator_count();
  const auto denominator = tropical_eval(substitute_x_one(p), semifield, yhat);
  LaurentPolynomial r(p.x_rank(), ell);
  for (const auto& [e, c] : p.terms()) {
    TropicalSemifield::Element u = semifield.identity();
    for (std::size_t i = 0; i < e.y_rank(); ++i) u = semifield.multiply(u, semifield.power(yhat[i], e.y()[i]));
    ExponentVector term(e.x(), std::vector<int>(ell, 0));
    for (std::size_t j = 0; j < ell; ++j) term.y()[j] = static_cast<int>(u[j] - denominator[j]);
    r.add_term(term, c);
  }
  return r;
}

ChiTable chi_table(const Triangulation& t, const Arc& gamma) { return chi_table(t, expand(t, gamma)); }

ChiTable chi_table(const Triangulation& t, const Expansion& expansion) {
  std::map<std::vector<int>, std::size_t> counts;
  for (const auto& path : expansion.paths) ++counts[y_weight(t, expansion.band, path).y()];
  ChiTable table;
  for (auto& [e, c] : counts) table.entries.push_back({e, c});
  table.path_count = expansion.paths.size();
  const auto& s = t.surface();
  table.theorem = s.genus == 0 && (s.boundary_components() == 1 || s.boundary_components() == 2);
  return table;
}

}  // namespace cck
