#include "cck/corpus.hpp"

#include <map>
#include <set>
#include <sstream>

#include "cck/error.hpp"
#include "cck/fixtures.hpp"
#include "cck/io.hpp"

namespace cck {

namespace {

using Diagonals = std::vector<std::pair<int, int>>;

// Triangulations of the sub-polygon on vertices i..j (1-based, i < j).
const std::vector<Diagonals>& sub_triangulations(int i, int j, std::map<std::pair<int, int>, std::vector<Diagonals>>& memo) {
  auto it = memo.find({i, j});
  if (it != memo.end()) return it->second;
  std::vector<Diagonals> out;
  if (j - i < 2) {
    out.push_back({});
  } else {
    for (int k = i + 1; k < j; ++k) {
      const auto left = sub_triangulations(i, k, memo);
      const auto right = sub_triangulations(k, j, memo);
      for (const auto& l : left)
        for (const auto& r : right) {
          Diagonals d = l;
          d.insert(d.end(), r.begin(), r.end());
          if (k - i >= 2) d.emplace_back(i, k);
          if (j - k >= 2) d.emplace_back(k, j);
          out.push_back(std::move(d));
        }
    }
  }
  return memo.emplace(std::make_pair(i, j), std::move(out)).first->second;
}

void add_flips(std::vector<CorpusSurface>& out, const std::string& name, const Triangulation& t,
               const std::vector<Arc>& arcs) {
  for (int k = 1; k <= static_cast<int>(t.n()); ++k) {
    try {
      out.push_back({name + " flip " + std::to_string(k), flip(t, k), arcs});
    } catch (const Error&) {
      // arc k borders the same triangle twice; it has no flip
    }
  }
}

void add_annulus(std::vector<CorpusSurface>& out, int p, int q, int max_winding) {
  const std::string name = "annulus " + std::to_string(p) + " " + std::to_string(q);
  const auto arcs = annulus_arcs(p, q, max_winding);
  const Triangulation t = build_standard_annulus(p, q);
  out.push_back({name, t, arcs});
  add_flips(out, name, t, arcs);
}

}  // namespace

std::vector<Diagonals> polygon_triangulations(int m) {
  if (m < 3) throw DomainError("a polygon needs at least 3 vertices");
  std::map<std::pair<int, int>, std::vector<Diagonals>> memo;
  return sub_triangulations(1, m, memo);
}

std::vector<Arc> polygon_chords(int m) {
  std::vector<Arc> out;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 2; b <= m; ++b)
      if (!(a == 1 && b == m)) out.push_back(Arc::make_chord(a, b));
  return out;
}

Triangulation build_standard_annulus(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("an annulus needs marked points on both boundaries");
  const Cover cover = Cover::annulus(p, q);
  std::vector<Chord> lifts;
  for (int i = 0; i <= p; ++i) lifts.push_back({{0, i}, {1, 0}});
  for (int j = 1; j < q; ++j) lifts.push_back({{0, p}, {1, j}});
  for (int r = 0; r < p; ++r) lifts.push_back({{0, r}, {0, r + 1}});
  for (int s = 0; s < q; ++s) lifts.push_back({{1, s}, {1, s + 1}});
  return make_embedded(cover, static_cast<std::size_t>(p + q), lifts, SurfaceDescriptor{0, {p, q}});
}

std::vector<Arc> annulus_arcs(int p, int q, int max_winding) {
  const Cover cover = Cover::annulus(p, q);
  std::vector<AnnulusPoint> points;
  for (int r = 1; r <= p; ++r) points.push_back({false, r});
  for (int s = 1; s <= q; ++s) points.push_back({true, s});
  std::set<Chord> seen;
  std::vector<Arc> out;
  for (const auto& x : points)
    for (const auto& y : points)
      for (int w = -max_winding; w <= max_winding; ++w) {
        const Chord c{cover.lift(x, 0), cover.lift(y, w)};
        if (!cover.is_arc(c)) continue;
        if (seen.insert(cover.normalize(c)).second) out.push_back(Arc::make_annulus(x, y, w));
      }
  return out;
}

std::vector<CorpusSurface> generate_corpus(int max_m, int max_pq, int max_winding) {
  std::vector<CorpusSurface> out;
  for (int m = 4; m <= max_m; ++m) {
    const auto chords = polygon_chords(m);
    const auto all = polygon_triangulations(m);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.push_back({"polygon " + std::to_string(m) + " #" + std::to_string(i + 1), build_polygon(m, all[i]), chords});
  }
  for (int p = 1; p < max_pq; ++p)
    for (int q = 1; p + q <= max_pq; ++q) add_annulus(out, p, q, max_winding);
  return out;
}

std::vector<CorpusSurface> acceptance_corpus() {
  std::vector<CorpusSurface> out = generate_corpus(8, 0, 0);
  std::istringstream in(annulus_fixture().surface_text);
  SurfaceFile f = read_surface(in);
  const auto arcs = annulus_arcs(2, 2, 2);
  out.push_back({"annulus fixture", f.triangulation, arcs});
  add_annulus(out, 2, 2, 2);
  return out;
}

std::vector<CorpusSurface> full_corpus() { return generate_corpus(10, 6, 2); }

std::size_t case_count(const std::vector<CorpusSurface>& corpus) {
  std::size_t n = 0;
  for (const auto& s : corpus) n += s.arcs.size();
  return n;
}

}  // namespace cck
