#include "cck/arcs.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cck/error.hpp"

namespace cck {

namespace {

int rot(int j) { return ((j % 3) + 3) % 3; }
std::size_t at(int j) { return static_cast<std::size_t>(rot(j)); }

std::int64_t crossing_bound(const Chord& gamma, const Chord& c) {
  return std::llabs(gamma.a.index) + std::llabs(gamma.b.index) + std::llabs(c.a.index) + std::llabs(c.b.index) + 2;
}

std::size_t find_triangle(const Triangulation& t, CoverPoint x, CoverPoint y, CoverPoint z) {
  const Cover& cover = *t.cover();
  std::array<CoverPoint, 3> v{x, y, z};
  std::sort(v.begin(), v.end(), [&](const CoverPoint& p, const CoverPoint& q) { return cover.key_less(p, q); });
  const std::array<Chord, 3> chords{Chord{v[0], v[2]}, Chord{v[2], v[1]}, Chord{v[1], v[0]}};
  std::array<int, 3> sides{};
  for (std::size_t j = 0; j < 3; ++j) {
    auto e = t.edge_of(chords[j]);
    if (!e) throw InvariantError("band triangle side is not an edge");
    sides[j] = *e;
  }
  const std::array<int, 3> corners{cover.label(v[2]), cover.label(v[1]), cover.label(v[0])};
  std::size_t found = t.triangles().size();
  for (std::size_t i = 0; i < t.triangles().size(); ++i) {
    const Triangle& tri = t.triangles()[i];
    for (int r = 0; r < 3; ++r) {
      bool same = true;
      for (int j = 0; j < 3; ++j)
        same = same && tri.sides[at(j + r)] == sides[at(j)] && tri.corners[at(j + r)] == corners[at(j)];
      if (same) {
        if (found != t.triangles().size() && found != i) throw InvariantError("band triangle is ambiguous");
        found = i;
      }
    }
  }
  if (found == t.triangles().size()) throw InvariantError("band triangle not found");
  return found;
}

PathStep make_step(const CrossingBand& band, std::size_t k, int from, int to) {
  const auto& c = band.lifted[k];
  for (int j = 0; j < 3; ++j) {
    const int prev = c[at(j - 1)];
    const int cur = c[at(j)];
    if ((prev == from && cur == to) || (prev == to && cur == from)) {
      const int along = prev == from ? 1 : -1;
      return PathStep{band.band_triangles[k].sides[at(j)],
                      band.vertex_labels[static_cast<std::size_t>(from)],
                      band.vertex_labels[static_cast<std::size_t>(to)],
                      along * band.signs[k][at(j)],
                      from,
                      to};
    }
  }
  throw InvariantError("no side of the band triangle joins the requested vertices");
}

CompletePath single_step_path(const CrossingBand& band) {
  PathStep step{band.gamma_edge, band.vertex_labels[0], band.vertex_labels[1], 1, 0, 1};
  return CompletePath{{step}};
}

}  // namespace

Arc Arc::make_chord(int a, int b) {
  Arc r;
  r.kind = Kind::chord;
  r.a = a;
  r.b = b;
  return r;
}

Arc Arc::make_annulus(AnnulusPoint from, AnnulusPoint to, std::int64_t winding) {
  Arc r;
  r.kind = Kind::annulus;
  r.from = from;
  r.to = to;
  r.winding = winding;
  return r;
}

Arc Arc::make_band(std::vector<int> crossed, std::size_t first_triangle) {
  Arc r;
  r.kind = Kind::band;
  r.crossed = std::move(crossed);
  r.first_triangle = first_triangle;
  return r;
}

Arc Arc::make_edge(int e) {
  Arc r;
  r.kind = Kind::edge;
  r.edge = e;
  return r;
}

Arc parse_arc(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  auto fail = [&](const std::string& why) -> ParseError { return ParseError(0, "arc '" + std::string(text) + "': " + why); };
  Arc arc;
  if (kind == "chord") {
    int a = 0, b = 0;
    if (!(in >> a >> b)) throw fail("expected 'chord a b'");
    arc = Arc::make_chord(a, b);
  } else if (kind == "annarc") {
    std::string x, y;
    std::int64_t w = 0;
    if (!(in >> x >> y >> w)) throw fail("expected 'annarc x y w'");
    try {
      arc = Arc::make_annulus(parse_annulus_point(x), parse_annulus_point(y), w);
    } catch (const DomainError& e) {
      throw fail(e.what());
    }
  } else if (kind == "band") {
    long d = -1;
    if (!(in >> d) || d < 1) throw fail("expected a positive crossing count");
    std::vector<int> crossed(static_cast<std::size_t>(d));
    for (auto& e : crossed)
      if (!(in >> e)) throw fail("expected " + std::to_string(d) + " crossed edges");
    std::string slash;
    long t0 = 0;
    if (!(in >> slash) || slash != "/" || !(in >> t0) || t0 < 1) throw fail("expected '/ t0' after the crossed edges");
    arc = Arc::make_band(std::move(crossed), static_cast<std::size_t>(t0));
  } else if (kind == "edge") {
    int e = 0;
    if (!(in >> e)) throw fail("expected 'edge e'");
    arc = Arc::make_edge(e);
  } else {
    throw fail("unknown arc kind '" + kind + "'");
  }
  std::string extra;
  if (in >> extra) throw fail("trailing '" + extra + "'");
  return arc;
}

std::string to_string(const Arc& arc) {
  std::ostringstream out;
  switch (arc.kind) {
    case Arc::Kind::chord:
      out << "chord " << arc.a << ' ' << arc.b;
      break;
    case Arc::Kind::annulus:
      out << "annarc " << to_string(arc.from) << ' ' << to_string(arc.to) << ' ' << arc.winding;
      break;
    case Arc::Kind::band:
      out << "band " << arc.crossed.size();
      for (int e : arc.crossed) out << ' ' << e;
      out << " / " << arc.first_triangle;
      break;
    case Arc::Kind::edge:
      out << "edge " << arc.edge;
      break;
  }
  return out.str();
}

Chord arc_chord(const Triangulation& t, const Arc& arc) {
  const Cover* cover = t.cover();
  if (!cover) throw DomainError("arc '" + to_string(arc) + "' needs a polygon or annulus surface");
  switch (arc.kind) {
    case Arc::Kind::chord:
      if (cover->kind() != Cover::Kind::polygon) throw DomainError("chord arcs need a polygon");
      return {cover->lift(arc.a), cover->lift(arc.b)};
    case Arc::Kind::annulus:
      if (cover->kind() != Cover::Kind::annulus) throw DomainError("annarc arcs need an annulus");
      return {cover->lift(arc.from, 0), cover->lift(arc.to, arc.winding)};
    case Arc::Kind::edge:
      return t.lift(arc.edge);
    case Arc::Kind::band:
      break;
  }
  throw DomainError("a band has no endpoint description");
}

std::vector<GeometricCrossing> geometric_crossings(const Triangulation& t, const Chord& gamma) {
  const Cover* cover = t.cover();
  if (!cover) throw DomainError("geometric crossings need a polygon or annulus surface");
  std::vector<GeometricCrossing> found;
  for (int e = 1; e <= static_cast<int>(t.n()); ++e) {
    const Chord& lift = t.lift(e);
    const std::int64_t r = cover->kind() == Cover::Kind::polygon ? 0 : crossing_bound(gamma, lift);
    for (std::int64_t k = -r; k <= r; ++k) {
      const Chord c = cover->translate(lift, k);
      if (cover->crosses(gamma, c)) found.push_back({e, c});
    }
  }
  // Position counterclockwise from gamma.a; crossing chords are nested around it.
  const auto origin = cover->key(gamma.a);
  auto pos = [&](const CoverPoint& x) {
    const auto k = cover->key(x);
    return std::make_pair(k > origin ? 0 : 1, k);
  };
  const auto end = pos(gamma.b);
  auto split = [&](const Chord& c) { return pos(c.a) < end ? std::make_pair(pos(c.a), pos(c.b)) : std::make_pair(pos(c.b), pos(c.a)); };
  std::sort(found.begin(), found.end(), [&](const GeometricCrossing& x, const GeometricCrossing& y) {
    const auto [xu, xv] = split(x.lift);
    const auto [yu, yv] = split(y.lift);
    if (xu != yu) return xu < yu;
    return xv > yv;
  });
  return found;
}

int CrossingBand::third_side(int k) const {
  if (k < -1 || k > static_cast<int>(d()) + 1 || third.empty()) throw DomainError("third side index out of range");
  return third[static_cast<std::size_t>(k + 1)];
}

CrossingBand trivial_band(const Triangulation& t, int edge) {
  t.check_edge(edge);
  if (!t.is_interior(edge)) throw DomainError("edge " + std::to_string(edge) + " is a boundary segment, not an arc");
  CrossingBand band;
  band.gamma_edge = edge;
  const auto [a, b] = t.endpoints(edge);
  band.vertex_labels = {a, b};
  band.s = 0;
  band.t = 1;
  return band;
}

CrossingBand build_band(const Triangulation& t, std::size_t first_triangle, const std::vector<int>& crossed) {
  if (crossed.empty()) throw DomainError("a band crosses at least one arc");
  if (first_triangle >= t.triangles().size()) throw DomainError("band start triangle out of range");
  CrossingBand band;
  band.crossed = crossed;
  band.third.assign(crossed.size() + 3, 0);

  auto add_triangle = [&](std::size_t index, std::array<int, 3> lifted) {
    band.triangles.push_back(index);
    band.band_triangles.push_back(t.triangles()[index]);
    band.lifted.push_back(lifted);
    std::array<int, 3> signs{};
    for (int j = 0; j < 3; ++j) signs[at(j)] = t.orientation_sign(index, j);
    band.signs.push_back(signs);
  };

  const Triangle& first = t.triangles()[first_triangle];
  band.vertex_labels.assign(first.corners.begin(), first.corners.end());
  add_triangle(first_triangle, {0, 1, 2});

  for (std::size_t k = 1; k <= crossed.size(); ++k) {
    const int e = crossed[k - 1];
    const std::size_t prev_index = band.triangles.back();
    const Triangle& prev = t.triangles()[prev_index];
    const int p = prev.slot_of(e);
    if (!t.is_interior(e) || p < 0)
      throw DomainError("crossed edge " + std::to_string(e) + " is not an arc of triangle " +
                        std::to_string(prev_index + 1));
    if (k >= 2 && crossed[k - 2] == e) throw DomainError("band crosses edge " + std::to_string(e) + " twice in a row");
    const auto c = band.lifted.back();
    if (k == 1) {
      band.s = c[at(p + 1)];
      band.third[0] = prev.sides[at(p + 2)];
      band.third[1] = prev.sides[at(p + 1)];
    } else {
      band.third[k] = prev.sides[at(3 - prev.slot_of(crossed[k - 2]) - p)];
    }

    const auto& occ = t.occurrences(e);
    const Occurrence& next_occ = occ[0].triangle == prev_index && occ[0].slot == p ? occ[1] : occ[0];
    const Triangle& next = t.triangles()[next_occ.triangle];
    const int q = next_occ.slot;
    std::array<int, 3> lifted{};
    lifted[at(q - 1)] = c[at(p)];
    lifted[at(q)] = c[at(p - 1)];
    lifted[at(q + 1)] = static_cast<int>(band.vertex_labels.size());
    band.vertex_labels.push_back(next.corners[at(q + 1)]);
    if (band.vertex_labels[static_cast<std::size_t>(lifted[at(q - 1)])] != next.corners[at(q - 1)] ||
        band.vertex_labels[static_cast<std::size_t>(lifted[at(q)])] != next.corners[at(q)])
      throw InvariantError("glued corners disagree along edge " + std::to_string(e));
    add_triangle(next_occ.triangle, lifted);
    band.t_vertex.push_back(lifted[at(q - 1)]);
    band.s_vertex.push_back(lifted[at(q)]);
    if (k == crossed.size()) {
      band.t = lifted[at(q + 1)];
      band.third[k + 1] = next.sides[at(q + 1)];
      band.third[k + 2] = next.sides[at(q + 2)];
    }
  }
  return band;
}

CrossingBand crossing_band(const Triangulation& t, const Arc& gamma) {
  if (gamma.kind == Arc::Kind::edge) return trivial_band(t, gamma.edge);
  if (gamma.kind == Arc::Kind::band) {
    if (gamma.first_triangle < 1) throw DomainError("band start triangle is 1-based");
    return build_band(t, gamma.first_triangle - 1, gamma.crossed);
  }
  const Chord c = arc_chord(t, gamma);
  const Cover& cover = *t.cover();
  if (cover.is_boundary(c)) throw DomainError("'" + to_string(gamma) + "' is a boundary segment");
  if (!cover.is_arc(c)) throw DomainError("'" + to_string(gamma) + "' is not an arc");
  const auto crossings = geometric_crossings(t, c);
  if (crossings.empty()) {
    auto e = t.edge_of(c);
    if (!e) throw InvariantError("uncrossed arc is missing from the triangulation");
    return trivial_band(t, *e);
  }
  std::vector<int> crossed;
  for (const auto& x : crossings) crossed.push_back(x.edge);
  const Chord& first = crossings.front().lift;
  return build_band(t, find_triangle(t, c.a, first.a, first.b), crossed);
}

CrossingBand reversed_band(const Triangulation& t, const CrossingBand& band) {
  if (band.d() == 0) {
    CrossingBand r = band;
    std::swap(r.vertex_labels[0], r.vertex_labels[1]);
    return r;
  }
  std::vector<int> crossed(band.crossed.rbegin(), band.crossed.rend());
  return build_band(t, band.triangles.back(), crossed);
}

std::vector<std::pair<int, int>> CompletePath::key() const {
  std::vector<std::pair<int, int>> k;
  for (const auto& s : steps) k.emplace_back(s.edge, s.direction);
  return k;
}

CompletePath CompletePath::reversed() const {
  CompletePath r;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    r.steps.push_back(PathStep{it->edge, it->to, it->from, -it->direction, -1, -1});
  return r;
}

std::string to_string(const CompletePath& path) {
  std::string s = "(";
  for (std::size_t i = 0; i < path.steps.size(); ++i) s += (i ? "," : "") + std::to_string(path.steps[i].edge);
  return s + ")";
}

std::vector<CompletePath> enumerate_paths(const CrossingBand& band) {
  const std::size_t d = band.d();
  if (d == 0) return {single_step_path(band)};
  std::vector<CompletePath> paths;
  CompletePath current;
  // ends[k-1] is the end point of step 2k.
  auto extend = [&](auto&& self, std::size_t k, int at_vertex) -> void {
    if (k > d) {
      current.steps.push_back(make_step(band, d, at_vertex, band.t));
      paths.push_back(current);
      current.steps.pop_back();
      return;
    }
    for (const int end : {band.s_vertex[k - 1], band.t_vertex[k - 1]}) {
      const int start = end == band.s_vertex[k - 1] ? band.t_vertex[k - 1] : band.s_vertex[k - 1];
      if (start == at_vertex) continue;
      current.steps.push_back(make_step(band, k - 1, at_vertex, start));
      current.steps.push_back(make_step(band, k, start, end));
      self(self, k + 1, end);
      current.steps.pop_back();
      current.steps.pop_back();
    }
  };
  extend(extend, 1, band.s);
  std::sort(paths.begin(), paths.end(), [](const CompletePath& a, const CompletePath& b) { return a.key() < b.key(); });
  return paths;
}

bool gamma_oriented(const CrossingBand& band, const CompletePath& path, std::size_t k) {
  if (k < 1 || k > band.d()) throw DomainError("crossing index out of range");
  if (path.steps.size() != 2 * band.d() + 1) throw DomainError("path does not belong to this band");
  const PathStep& step = path.steps[2 * k - 1];
  return step.lifted_from == band.t_vertex[k - 1] && step.lifted_to == band.s_vertex[k - 1];
}

CompletePath alpha_zero(const CrossingBand& band) {
  const std::size_t d = band.d();
  if (d == 0) return single_step_path(band);
  CompletePath path;
  path.steps.push_back(make_step(band, 0, band.s, band.s_vertex[0]));
  for (std::size_t k = 1; k <= d; ++k) {
    const int sk = band.s_vertex[k - 1];
    const int tk = band.t_vertex[k - 1];
    path.steps.push_back(make_step(band, k, sk, tk));
    if (k < d) {
      const int next_s = band.s_vertex[k];
      if (next_s == sk)
        path.steps.push_back(make_step(band, k, tk, sk));
      else
        path.steps.push_back(make_step(band, k, band.t_vertex[k], next_s));
    }
  }
  path.steps.push_back(make_step(band, d, band.t_vertex[d - 1], band.t));
  return path;
}

}  // namespace cck
