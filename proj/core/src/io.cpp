#include "cck/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cck/error.hpp"

namespace cck {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    std::string text = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream tok(text);
    Line line{number, {}, text};
    for (std::string t; tok >> t;) line.tokens.push_back(t);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty() || lines.front().tokens != std::vector<std::string>{"cck/1"})
    throw ParseError(lines.empty() ? 1 : lines.front().number, "expected version line 'cck/1'");
  lines.erase(lines.begin());
  return lines;
}

long to_long(const Line& line, std::size_t i, const std::string& what) {
  if (i >= line.tokens.size()) throw ParseError(line.number, "missing " + what);
  const std::string& s = line.tokens[i];
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError(line.number, "expected an integer for " + what + ", got '" + s + "'");
  return v;
}

void expect_count(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(count - 1) + " values");
}

std::array<int, 3> rotate_min(std::array<int, 3> s) {
  const auto it = std::min_element(s.begin(), s.end());
  std::rotate(s.begin(), it, s.end());
  return s;
}

}  // namespace

SurfaceFile read_surface(std::istream& in) {
  const auto lines = read_lines(in);
  std::optional<SurfaceDescriptor> declared;
  long n = -1, m = -1;
  int edges_line = 0;
  std::vector<std::pair<int, std::array<int, 3>>> tris;
  enum class Geometry { none, polygon, annulus } geometry = Geometry::none;
  long gp = 0, gq = 0;
  int geometry_line = 0;
  std::map<long, std::pair<int, Chord>> lifts;
  std::vector<Arc> arcs;

  for (const Line& line : lines) {
    const std::string& key = line.tokens[0];
    if (key == "surface") {
      if (declared) throw ParseError(line.number, "duplicate 'surface' line");
      const long g = to_long(line, 1, "genus");
      const long b = to_long(line, 2, "boundary component count");
      if (g < 0 || b < 1) throw ParseError(line.number, "need genus >= 0 and at least one boundary component");
      expect_count(line, static_cast<std::size_t>(3 + b));
      SurfaceDescriptor s{static_cast<int>(g), {}};
      for (long i = 0; i < b; ++i) {
        const long mi = to_long(line, static_cast<std::size_t>(3 + i), "marked point count");
        if (mi < 1) throw ParseError(line.number, "every boundary component needs a marked point");
        s.marked_counts.push_back(static_cast<int>(mi));
      }
      declared = s;
    } else if (key == "edges") {
      if (edges_line) throw ParseError(line.number, "duplicate 'edges' line");
      expect_count(line, 3);
      n = to_long(line, 1, "arc count");
      m = to_long(line, 2, "boundary segment count");
      if (n < 1 || m < 1) throw ParseError(line.number, "need at least one arc and one boundary segment");
      edges_line = line.number;
    } else if (key == "tri") {
      if (!edges_line) throw ParseError(line.number, "'tri' before 'edges'");
      expect_count(line, 4);
      std::array<int, 3> sides{};
      for (std::size_t j = 0; j < 3; ++j) {
        std::string tok = line.tokens[j + 1];
        const bool flagged = !tok.empty() && tok.back() == 'b';
        if (flagged) tok.pop_back();
        Line single{line.number, {key, tok}, ""};
        const long e = to_long(single, 1, "edge id");
        if (e < 1 || e > n + m) throw ParseError(line.number, "edge id " + std::to_string(e) + " out of range");
        if (flagged && e <= n) throw ParseError(line.number, "edge " + std::to_string(e) + " is flagged boundary but is an arc");
        sides[j] = static_cast<int>(e);
      }
      tris.emplace_back(line.number, sides);
    } else if (key == "polygon" || key == "annulus") {
      if (geometry != Geometry::none) throw ParseError(line.number, "duplicate geometry line");
      if (key == "polygon") {
        expect_count(line, 2);
        geometry = Geometry::polygon;
        gp = to_long(line, 1, "vertex count");
        if (gp < 4) throw ParseError(line.number, "a polygon needs at least 4 vertices");
      } else {
        expect_count(line, 3);
        geometry = Geometry::annulus;
        gp = to_long(line, 1, "outer count");
        gq = to_long(line, 2, "inner count");
        if (gp < 1 || gq < 1) throw ParseError(line.number, "an annulus needs marked points on both boundaries");
      }
      geometry_line = line.number;
    } else if (key == "diag") {
      if (geometry != Geometry::polygon) throw ParseError(line.number, "'diag' needs a preceding 'polygon' line");
      expect_count(line, 4);
      const long e = to_long(line, 1, "edge id");
      const long a = to_long(line, 2, "vertex");
      const long b = to_long(line, 3, "vertex");
      if (a < 1 || a > gp || b < 1 || b > gp) throw ParseError(line.number, "vertex out of range");
      if (!lifts.emplace(e, std::make_pair(line.number, Chord{{0, a - 1}, {0, b - 1}})).second)
        throw ParseError(line.number, "edge " + std::to_string(e) + " placed twice");
    } else if (key == "lift") {
      if (geometry != Geometry::annulus) throw ParseError(line.number, "'lift' needs a preceding 'annulus' line");
      expect_count(line, 5);
      const long e = to_long(line, 1, "edge id");
      const long w = to_long(line, 4, "winding");
      try {
        const Cover cover = Cover::annulus(static_cast<int>(gp), static_cast<int>(gq));
        const Chord c{cover.lift(parse_annulus_point(line.tokens[2]), 0), cover.lift(parse_annulus_point(line.tokens[3]), w)};
        if (!lifts.emplace(e, std::make_pair(line.number, c)).second)
          throw ParseError(line.number, "edge " + std::to_string(e) + " placed twice");
      } catch (const DomainError& err) {
        throw ParseError(line.number, err.what());
      }
    } else if (key == "chord" || key == "annarc" || key == "band" || key == "edge") {
      try {
        arcs.push_back(parse_arc(line.text));
      } catch (const ParseError& err) {
        throw ParseError(line.number, err.what());
      }
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }
  if (!declared) throw ParseError(0, "missing 'surface' line");
  if (!edges_line) throw ParseError(0, "missing 'edges' line");
  if (m != declared->marked_points())
    throw ParseError(edges_line, "an unpunctured surface has as many boundary segments as marked points");
  if (n != declared->rank())
    throw ParseError(edges_line, "this surface has rank " + std::to_string(declared->rank()) + ", not " + std::to_string(n));

  auto build = [&]() -> Triangulation {
    const std::size_t un = static_cast<std::size_t>(n);
    if (geometry == Geometry::none) {
      if (tris.empty()) throw ParseError(edges_line, "no triangles and no geometry");
      std::vector<std::array<int, 3>> sides;
      for (const auto& [no, s] : tris) sides.push_back(s);
      try {
        return Triangulation::from_triangles(un, static_cast<std::size_t>(m), sides, declared);
      } catch (const Error& err) {
        throw ParseError(tris.front().first, err.what());
      }
    }
    const Cover cover = geometry == Geometry::polygon ? Cover::polygon(static_cast<int>(gp))
                                                      : Cover::annulus(static_cast<int>(gp), static_cast<int>(gq));
    if (cover.marked_count() != m) throw ParseError(geometry_line, "geometry and 'edges' disagree on the marked points");
    std::vector<Chord> all;
    for (long e = 1; e <= n; ++e) {
      auto it = lifts.find(e);
      if (it == lifts.end()) throw ParseError(geometry_line, "no placement for arc " + std::to_string(e));
      all.push_back(it->second.second);
    }
    if (lifts.size() != un) throw ParseError(lifts.rbegin()->second.first, "placement for an edge that is not an arc");
    if (geometry == Geometry::polygon) {
      for (long k = 0; k < gp; ++k) all.push_back({{0, k}, {0, (k + 1) % gp}});
    } else {
      for (long r = 0; r < gp; ++r) all.push_back({{0, r}, {0, r + 1}});
      for (long s = 0; s < gq; ++s) all.push_back({{1, s}, {1, s + 1}});
    }
    try {
      return make_embedded(cover, un, all, declared);
    } catch (const Error& err) {
      throw ParseError(geometry_line, err.what());
    }
  };
  Triangulation t = build();

  if (geometry != Geometry::none && !tris.empty()) {
    std::vector<std::array<int, 3>> given, derived;
    for (const auto& [no, s] : tris) given.push_back(rotate_min(s));
    for (const auto& tri : t.triangles()) derived.push_back(rotate_min(tri.sides));
    std::sort(given.begin(), given.end());
    std::sort(derived.begin(), derived.end());
    if (given != derived) throw ParseError(tris.front().first, "'tri' lines disagree with the geometry");
  }
  return SurfaceFile{std::move(t), std::move(arcs)};
}

SurfaceFile read_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_surface(in);
}

void write_surface(std::ostream& out, const Triangulation& t, const std::vector<Arc>& arcs) {
  const auto& s = t.surface();
  out << "cck/1\nsurface " << s.genus << ' ' << s.boundary_components();
  for (int m : s.marked_counts) out << ' ' << m;
  out << "\nedges " << t.n() << ' ' << t.boundary_count() << '\n';
  if (const Cover* cover = t.cover()) {
    if (cover->kind() == Cover::Kind::polygon) {
      out << "polygon " << cover->outer_count() << '\n';
      for (int e = 1; e <= static_cast<int>(t.n()); ++e)
        out << "diag " << e << ' ' << cover->label(t.lift(e).a) << ' ' << cover->label(t.lift(e).b) << '\n';
    } else {
      out << "annulus " << cover->outer_count() << ' ' << cover->inner_count() << '\n';
      auto point = [&](const CoverPoint& x) {
        const int per = cover->period(x.side);
        const std::int64_t r = ((x.index % per) + per) % per;
        return std::make_pair(AnnulusPoint{x.side == 1, static_cast<int>(r) + 1}, (x.index - r) / per);
      };
      for (int e = 1; e <= static_cast<int>(t.n()); ++e) {
        const auto [x, cx] = point(t.lift(e).a);
        const auto [y, cy] = point(t.lift(e).b);
        out << "lift " << e << ' ' << to_string(x) << ' ' << to_string(y) << ' ' << (cy - cx) << '\n';
      }
    }
  }
  for (const auto& tri : t.triangles()) {
    out << "tri";
    for (int e : tri.sides) out << ' ' << e << (t.is_boundary(e) ? "b" : "");
    out << '\n';
  }
  for (const auto& a : arcs) out << to_string(a) << '\n';
}

std::vector<TropicalSemifield::Element> read_coefficients(std::istream& in, std::size_t n) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(0, "missing coefficient count");
  expect_count(lines[0], 1);
  const long ell = to_long(lines[0], 0, "coefficient count");
  if (ell < 0) throw ParseError(lines[0].number, "coefficient count must be non-negative");
  if (lines.size() != n + 1)
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " coefficient rows, found " +
                                              std::to_string(lines.size() - 1));
  std::vector<TropicalSemifield::Element> rows;
  for (std::size_t i = 1; i <= n; ++i) {
    expect_count(Line{lines[i].number, std::vector<std::string>(lines[i].tokens.size() + 1), ""}, static_cast<std::size_t>(ell + 1));
    TropicalSemifield::Element row;
    for (long j = 0; j < ell; ++j) row.push_back(to_long(lines[i], static_cast<std::size_t>(j), "exponent"));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TropicalSemifield::Element> read_coefficients_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_coefficients(in, n);
}

ExtendedMatrix coefficient_matrix(const Triangulation& t, const std::vector<TropicalSemifield::Element>& yhat) {
  const ExtendedMatrix bt = build_BT(t);
  const std::size_t n = t.n();
  if (yhat.size() != n) throw DomainError("one coefficient row per initial variable expected");
  const std::size_t ell = n == 0 ? 0 : yhat[0].size();
  std::vector<std::vector<int>> rows(ell, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (yhat[i].size() != ell) throw DomainError("coefficient rows have different lengths");
    for (std::size_t j = 0; j < ell; ++j) rows[j][i] = static_cast<int>(yhat[i][j]);
  }
  return bt.with_coefficient_rows(rows);
}

std::string gvector_json(const Arc& arc, const GVector& g) {
  nlohmann::ordered_json j;
  j["arc"] = to_string(arc);
  j["g"] = g.entries;
  j["I+"] = g.plus;
  j["I-"] = g.minus;
  return j.dump();
}

std::string chi_json(const Arc& arc, const ChiTable& table) {
  nlohmann::ordered_json j;
  j["arc"] = to_string(arc);
  j["theorem"] = table.theorem;
  j["paths"] = table.path_count;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& entry : table.entries) {
    nlohmann::ordered_json r;
    r["e"] = entry.e;
    r["chi"] = entry.count;
    rows.push_back(r);
  }
  j["table"] = rows;
  return j.dump();
}

}  // namespace cck
