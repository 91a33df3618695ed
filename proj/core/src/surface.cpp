#include "cck/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "cck/error.hpp"

namespace cck {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t node(std::size_t t, int j) { return 3 * t + static_cast<std::size_t>((j % 3 + 3) % 3); }

std::string edge_name(int e) { return "edge " + std::to_string(e); }

Triangle rotated_to_min(const Triangle& t) {
  int best = 0;
  for (int j = 1; j < 3; ++j)
    if (t.sides[static_cast<std::size_t>(j)] < t.sides[static_cast<std::size_t>(best)]) best = j;
  Triangle r;
  for (int j = 0; j < 3; ++j) {
    r.sides[static_cast<std::size_t>(j)] = t.sides[static_cast<std::size_t>((best + j) % 3)];
    r.corners[static_cast<std::size_t>(j)] = t.corners[static_cast<std::size_t>((best + j) % 3)];
  }
  return r;
}

std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> canonical_list(const std::vector<Triangle>& ts) {
  std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> r;
  for (const auto& t : ts) {
    auto c = rotated_to_min(t);
    r.emplace_back(c.sides, c.corners);
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::int64_t translate_bound(const Chord& c, const Chord& d) {
  return std::llabs(c.a.index) + std::llabs(c.b.index) + std::llabs(d.a.index) + std::llabs(d.b.index) + 2;
}

struct Neighbour {
  CoverPoint point;
  int edge;
};

std::vector<Neighbour> neighbours(const Cover& cover, const std::vector<Chord>& lifts, const CoverPoint& p) {
  std::vector<Neighbour> r;
  for (std::size_t e = 1; e < lifts.size(); ++e) {
    const Chord& c = lifts[e];
    std::int64_t k = 0;
    if (cover.translation_between(c.a, p, k)) r.push_back({cover.translate(c.b, k), static_cast<int>(e)});
    if (cover.translation_between(c.b, p, k)) r.push_back({cover.translate(c.a, k), static_cast<int>(e)});
  }
  return r;
}

std::vector<CoverPoint> common_neighbours(const Cover& cover, const std::vector<Chord>& lifts, const Chord& c) {
  auto na = neighbours(cover, lifts, c.a);
  auto nb = neighbours(cover, lifts, c.b);
  std::set<CoverPoint> in_b;
  for (const auto& x : nb) in_b.insert(x.point);
  std::set<CoverPoint> common;
  for (const auto& x : na)
    if (in_b.count(x.point)) common.insert(x.point);
  return {common.begin(), common.end()};
}

std::optional<int> find_edge(const Cover& cover, const std::vector<Chord>& lifts, const Chord& c) {
  const Chord key = cover.normalize(c);
  for (std::size_t e = 1; e < lifts.size(); ++e)
    if (lifts[e] == key) return static_cast<int>(e);
  return std::nullopt;
}

// Triangles of the cover, one representative per deck orbit, as clockwise
// side triples with corner labels.
std::vector<Triangle> derive_triangles(const Cover& cover, const std::vector<Chord>& lifts) {
  std::set<std::array<CoverPoint, 3>> seen;
  std::vector<Triangle> result;
  for (std::size_t e = 1; e < lifts.size(); ++e) {
    const Chord& c = lifts[e];
    for (const auto& r : common_neighbours(cover, lifts, c)) {
      std::array<CoverPoint, 3> v{c.a, c.b, r};
      std::sort(v.begin(), v.end(), [&](const CoverPoint& x, const CoverPoint& y) { return cover.key_less(x, y); });
      if (cover.kind() == Cover::Kind::annulus) {
        const Chord shift = cover.normalize({v[0], v[1]});
        std::int64_t k = 0;
        cover.translation_between(v[0], shift.a, k);
        for (auto& x : v) x = cover.translate(x, k);
      }
      if (!seen.insert(v).second) continue;
      const auto& [a, b, cc] = v;
      Triangle t;
      const std::array<Chord, 3> sides{Chord{a, cc}, Chord{cc, b}, Chord{b, a}};
      for (std::size_t j = 0; j < 3; ++j) {
        auto id = find_edge(cover, lifts, sides[j]);
        if (!id) throw InvariantError("cover triangle side is not an edge");
        t.sides[j] = *id;
      }
      t.corners = {cover.label(cc), cover.label(b), cover.label(a)};
      result.push_back(t);
    }
  }
  return result;
}

}  // namespace

int SurfaceDescriptor::marked_points() const noexcept {
  return std::accumulate(marked_counts.begin(), marked_counts.end(), 0);
}

int SurfaceDescriptor::rank() const noexcept { return 6 * genus + 3 * boundary_components() + marked_points() - 6; }

int SurfaceDescriptor::triangle_count() const noexcept { return rank() - 2 * (genus - 1) - boundary_components(); }

int Triangle::slot_of(int e) const {
  for (int j = 0; j < 3; ++j)
    if (sides[static_cast<std::size_t>(j)] == e) return j;
  return -1;
}

void Triangulation::check_edge(int e) const {
  if (e < 1 || static_cast<std::size_t>(e) > edge_count()) throw DomainError(edge_name(e) + " does not exist");
}

const std::vector<Occurrence>& Triangulation::occurrences(int e) const {
  check_edge(e);
  return occurrences_[static_cast<std::size_t>(e)];
}

std::pair<int, int> Triangulation::endpoints(int e) const {
  const Occurrence& o = occurrences(e).front();
  const Triangle& t = triangles_[o.triangle];
  return {t.start(o.slot), t.end(o.slot)};
}

int Triangulation::orientation_sign(std::size_t t, int slot) const {
  const int e = triangles_.at(t).sides[static_cast<std::size_t>(slot)];
  const Occurrence& o = occurrences(e).front();
  return o.triangle == t && o.slot == slot ? 1 : -1;
}

const Chord& Triangulation::lift(int e) const {
  if (!cover_) throw DomainError("surface has no cover");
  check_edge(e);
  return lifts_[static_cast<std::size_t>(e)];
}

std::optional<int> Triangulation::edge_of(const Chord& c) const {
  if (!cover_) throw DomainError("surface has no cover");
  return find_edge(*cover_, lifts_, c);
}

void Triangulation::check_geometry() const {
  if (!cover_) return;
  if (canonical_list(derive_triangles(*cover_, lifts_)) != canonical_list(triangles_))
    throw InvariantError("triangles disagree with the embedded chords");
}

Triangulation Triangulation::from_triangles(std::size_t n, std::size_t boundary_edges,
                                            const std::vector<std::array<int, 3>>& sides,
                                            const std::optional<SurfaceDescriptor>& expected) {
  Triangulation t;
  t.n_ = n;
  t.boundary_ = boundary_edges;
  for (const auto& s : sides) t.triangles_.push_back(Triangle{s, {}});
  t.validate(expected, false);
  return t;
}

void Triangulation::validate(const std::optional<SurfaceDescriptor>& expected, bool keep_corner_labels) {
  const std::size_t edges = n_ + boundary_;
  if (n_ == 0) throw InvariantError("a triangulation needs at least one arc");
  if (boundary_ == 0) throw InvariantError("an unpunctured surface needs boundary segments");
  occurrences_.assign(edges + 1, {});
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Triangle& tri = triangles_[t];
    for (int j = 0; j < 3; ++j) {
      const int e = tri.sides[static_cast<std::size_t>(j)];
      if (e < 1 || static_cast<std::size_t>(e) > edges)
        throw InvariantError("triangle " + std::to_string(t + 1) + " uses unknown " + edge_name(e));
      if (tri.sides[static_cast<std::size_t>((j + 1) % 3)] == e)
        throw InvariantError("triangle " + std::to_string(t + 1) + " repeats " + edge_name(e));
      occurrences_[static_cast<std::size_t>(e)].push_back({t, j});
    }
  }
  for (std::size_t e = 1; e <= edges; ++e) {
    const std::size_t want = e <= n_ ? 2 : 1;
    if (occurrences_[e].size() != want)
      throw InvariantError(edge_name(static_cast<int>(e)) + " lies in " + std::to_string(occurrences_[e].size()) +
                           " triangles, expected " + std::to_string(want));
  }

  // Corners glued across arcs; shared arcs have opposite orientations.
  UnionFind uf(3 * triangles_.size());
  UnionFind faces(triangles_.size());
  for (std::size_t e = 1; e <= n_; ++e) {
    const Occurrence& o1 = occurrences_[e][0];
    const Occurrence& o2 = occurrences_[e][1];
    uf.unite(node(o1.triangle, o1.slot - 1), node(o2.triangle, o2.slot));
    uf.unite(node(o1.triangle, o1.slot), node(o2.triangle, o2.slot - 1));
    faces.unite(o1.triangle, o2.triangle);
  }
  for (std::size_t t = 1; t < triangles_.size(); ++t)
    if (faces.find(t) != faces.find(0)) throw InvariantError("triangulated surface is not connected");

  std::map<std::size_t, int> class_label;
  if (keep_corner_labels) {
    std::map<int, std::size_t> label_class;
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
      for (int j = 0; j < 3; ++j) {
        const std::size_t c = uf.find(node(t, j));
        const int label = triangles_[t].corners[static_cast<std::size_t>(j)];
        auto it = class_label.emplace(c, label).first;
        auto jt = label_class.emplace(label, c).first;
        if (it->second != label || jt->second != c) throw InvariantError("corner labels disagree with the gluing");
      }
    }
  } else {
    for (std::size_t t = 0; t < triangles_.size(); ++t)
      for (int j = 0; j < 3; ++j) {
        const std::size_t c = uf.find(node(t, j));
        if (!class_label.count(c)) class_label.emplace(c, static_cast<int>(class_label.size()) + 1);
        triangles_[t].corners[static_cast<std::size_t>(j)] = class_label[c];
      }
  }
  marked_ = class_label.size();

  // Boundary: every marked point starts one segment and ends one.
  std::map<int, int> next_segment;
  std::map<int, int> ends;
  for (std::size_t e = n_ + 1; e <= edges; ++e) {
    const Occurrence& o = occurrences_[e][0];
    const Triangle& tri = triangles_[o.triangle];
    if (!next_segment.emplace(tri.start(o.slot), static_cast<int>(e)).second)
      throw InvariantError("marked point " + std::to_string(tri.start(o.slot)) + " starts two boundary segments");
    if (++ends[tri.end(o.slot)] > 1)
      throw InvariantError("marked point " + std::to_string(tri.end(o.slot)) + " ends two boundary segments");
  }
  for (const auto& [c, label] : class_label)
    if (!next_segment.count(label))
      throw InvariantError("marked point " + std::to_string(label) + " is not on the boundary");

  SurfaceDescriptor found;
  std::set<int> visited;
  for (std::size_t e = n_ + 1; e <= edges; ++e) {
    if (visited.count(static_cast<int>(e))) continue;
    int count = 0;
    int cur = static_cast<int>(e);
    while (visited.insert(cur).second) {
      ++count;
      const Occurrence& o = occurrences_[static_cast<std::size_t>(cur)][0];
      cur = next_segment.at(triangles_[o.triangle].end(o.slot));
    }
    found.marked_counts.push_back(count);
  }
  const int f = static_cast<int>(triangles_.size());
  const int two_minus_2g = f - static_cast<int>(n_) + found.boundary_components();
  if (two_minus_2g > 2 || two_minus_2g % 2 != 0) throw InvariantError("Euler characteristic is inconsistent");
  found.genus = (2 - two_minus_2g) / 2;
  if (found.rank() != static_cast<int>(n_) || found.triangle_count() != f)
    throw InvariantError("rank or triangle count does not match the surface");
  if (expected) {
    auto a = expected->marked_counts, b = found.marked_counts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (expected->genus != found.genus || a != b)
      throw InvariantError("triangles describe a surface of genus " + std::to_string(found.genus) + " with " +
                           std::to_string(found.boundary_components()) + " boundary components, not the declared one");
  }
  surface_ = found;
}

Triangulation make_embedded(const Cover& cover, std::size_t n, const std::vector<Chord>& lifts,
                            const std::optional<SurfaceDescriptor>& expected) {
  Triangulation t;
  t.n_ = n;
  t.boundary_ = lifts.size() - n;
  t.cover_ = cover;
  t.lifts_.assign(1, Chord{});
  for (std::size_t e = 1; e <= lifts.size(); ++e) {
    const Chord& c = lifts[e - 1];
    if (e <= n && !cover.is_arc(c)) throw InvariantError(edge_name(static_cast<int>(e)) + " is not an arc");
    if (e > n && !cover.is_boundary(c)) throw InvariantError(edge_name(static_cast<int>(e)) + " is not a boundary segment");
    t.lifts_.push_back(cover.normalize(c));
  }
  for (std::size_t e = 1; e < t.lifts_.size(); ++e) {
    for (std::size_t f = e; f < t.lifts_.size(); ++f) {
      if (e != f && t.lifts_[e] == t.lifts_[f])
        throw InvariantError(edge_name(static_cast<int>(e)) + " and " + edge_name(static_cast<int>(f)) + " coincide");
      const std::int64_t r = cover.kind() == Cover::Kind::polygon ? 0 : translate_bound(t.lifts_[e], t.lifts_[f]);
      for (std::int64_t k = -r; k <= r; ++k)
        if (cover.crosses(t.lifts_[e], cover.translate(t.lifts_[f], k)))
          throw InvariantError(edge_name(static_cast<int>(e)) + " crosses " + edge_name(static_cast<int>(f)));
    }
  }
  t.triangles_ = derive_triangles(cover, t.lifts_);
  std::sort(t.triangles_.begin(), t.triangles_.end(), [](const Triangle& x, const Triangle& y) {
    auto a = x.corners, b = y.corners;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::tie(a, x.sides) < std::tie(b, y.sides);
  });
  t.validate(expected, true);
  return t;
}

Triangulation build_polygon(int m, const std::vector<std::pair<int, int>>& diagonals) {
  const Cover cover = Cover::polygon(m);
  if (static_cast<int>(diagonals.size()) != m - 3)
    throw DomainError("a triangulation of a " + std::to_string(m) + "-gon has " + std::to_string(m - 3) + " diagonals");
  std::vector<Chord> lifts;
  for (const auto& [a, b] : diagonals) {
    if (a < 1 || a > m || b < 1 || b > m) throw DomainError("diagonal endpoint out of range");
    lifts.push_back({cover.lift(a), cover.lift(b)});
  }
  for (int k = 1; k <= m; ++k) lifts.push_back({cover.lift(k), cover.lift(k % m + 1)});
  try {
    return make_embedded(cover, diagonals.size(), lifts, SurfaceDescriptor{0, {m}});
  } catch (const InvariantError& e) {
    throw DomainError(std::string("invalid diagonals: ") + e.what());
  }
}

Triangulation build_annulus(int p, int q, const std::vector<AnnulusArcSpec>& arcs) {
  const Cover cover = Cover::annulus(p, q);
  if (static_cast<int>(arcs.size()) != p + q)
    throw DomainError("a triangulation of this annulus has " + std::to_string(p + q) + " arcs");
  std::vector<Chord> lifts;
  for (const auto& a : arcs) lifts.push_back({cover.lift(a.from, 0), cover.lift(a.to, a.winding)});
  for (int r = 0; r < p; ++r) lifts.push_back({{0, r}, {0, r + 1}});
  for (int s = 0; s < q; ++s) lifts.push_back({{1, s}, {1, s + 1}});
  try {
    return make_embedded(cover, arcs.size(), lifts, SurfaceDescriptor{0, {p, q}});
  } catch (const InvariantError& e) {
    throw DomainError(std::string("invalid annulus arcs: ") + e.what());
  }
}

ExtendedMatrix build_BT(const Triangulation& t) {
  const std::size_t n = t.n();
  ExtendedMatrix b(n, n);
  for (const Triangle& tri : t.triangles()) {
    for (std::size_t j = 0; j < 3; ++j) {
      const int e = tri.sides[j];
      const int f = tri.sides[(j + 1) % 3];
      if (!t.is_interior(e) || !t.is_interior(f)) continue;
      // f follows e clockwise
      b(static_cast<std::size_t>(e), static_cast<std::size_t>(f)) -= 1;
      b(static_cast<std::size_t>(f), static_cast<std::size_t>(e)) += 1;
    }
  }
  for (std::size_t i = 1; i <= n; ++i) b(n + i, i) = 1;
  return b;
}

Triangulation flip(const Triangulation& t, int k) {
  t.check_edge(k);
  if (!t.is_interior(k)) throw DomainError("cannot flip boundary " + edge_name(k));
  const Occurrence o1 = t.occurrences(k)[0];
  const Occurrence o2 = t.occurrences(k)[1];
  auto rotated = [&](const Occurrence& o) {
    const Triangle& tri = t.triangles()[o.triangle];
    Triangle r;
    for (int j = 0; j < 3; ++j) {
      r.sides[static_cast<std::size_t>(j)] = tri.sides[static_cast<std::size_t>((o.slot + j) % 3)];
      r.corners[static_cast<std::size_t>(j)] = tri.corners[static_cast<std::size_t>((o.slot + j) % 3)];
    }
    return r;
  };
  const Triangle t1 = rotated(o1);
  const Triangle t2 = rotated(o2);
  const int a1 = t1.sides[1], b1 = t1.sides[2], a2 = t2.sides[1], b2 = t2.sides[2];
  if (b1 == a2 || b2 == a1) throw InvariantError("flipping " + edge_name(k) + " would fold a triangle");

  Triangulation r = t;
  r.triangles_[o1.triangle] = Triangle{{k, b1, a2}, {t1.corners[1], t1.corners[2], t2.corners[1]}};
  r.triangles_[o2.triangle] = Triangle{{k, b2, a1}, {t2.corners[1], t1.corners[0], t1.corners[1]}};
  if (r.cover_) {
    const auto third = common_neighbours(*t.cover_, t.lifts_, t.lifts_[static_cast<std::size_t>(k)]);
    if (third.size() != 2) throw InvariantError("flipped arc does not bound two cover triangles");
    r.lifts_[static_cast<std::size_t>(k)] = r.cover_->normalize({third[0], third[1]});
  }
  r.validate(t.surface(), true);
  r.check_geometry();
  if (!r.cover_) return r;

  // Re-derive from the lifts so that triangle order matches a fresh read.
  Triangulation e = make_embedded(*r.cover_, r.n_, std::vector<Chord>(r.lifts_.begin() + 1, r.lifts_.end()), r.surface_);
  auto side_sets = [](const Triangulation& x) {
    std::vector<std::array<int, 3>> out;
    for (const auto& tri : x.triangles_) {
      auto s = tri.sides;
      std::rotate(s.begin(), std::min_element(s.begin(), s.end()), s.end());
      out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  if (side_sets(e) != side_sets(r)) throw InvariantError("flip of " + edge_name(k) + " disagrees with its lift");
  return e;
}

}  // namespace cck
