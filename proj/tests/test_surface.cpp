#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cck/corpus.hpp"
#include "cck/error.hpp"
#include "cck/seeds.hpp"
#include "cck/surface.hpp"

using namespace cck;

namespace {

std::set<std::array<int, 3>> side_sets(const Triangulation& t) {
  std::set<std::array<int, 3>> out;
  for (const auto& tri : t.triangles()) {
    auto s = tri.sides;
    std::rotate(s.begin(), std::min_element(s.begin(), s.end()), s.end());
    out.insert(s);
  }
  return out;
}

std::vector<std::vector<int>> exchange_block(const ExtendedMatrix& b) {
  std::vector<std::vector<int>> out(b.n(), std::vector<int>(b.n()));
  for (std::size_t i = 1; i <= b.n(); ++i)
    for (std::size_t j = 1; j <= b.n(); ++j) out[i - 1][j - 1] = b(i, j);
  return out;
}

}  // namespace

TEST(Surface, DescriptorCounts) {
  EXPECT_EQ((SurfaceDescriptor{0, {8}}).rank(), 5);
  EXPECT_EQ((SurfaceDescriptor{0, {8}}).triangle_count(), 6);
  EXPECT_EQ((SurfaceDescriptor{0, {2, 2}}).rank(), 4);
  EXPECT_EQ((SurfaceDescriptor{0, {2, 2}}).triangle_count(), 4);
  EXPECT_EQ((SurfaceDescriptor{1, {1}}).rank(), 4);
  EXPECT_EQ((SurfaceDescriptor{1, {1}}).triangle_count(), 3);
}

TEST(Surface, PolygonFan) {
  const auto t = build_polygon(6, {{1, 3}, {1, 4}, {1, 5}});
  EXPECT_EQ(t.n(), 3u);
  EXPECT_EQ(t.boundary_count(), 6u);
  EXPECT_EQ(t.triangles().size(), 4u);
  EXPECT_TRUE(t.simply_connected());
  EXPECT_NO_THROW(t.check_geometry());
}

TEST(Surface, PolygonRejectsBadDiagonals) {
  EXPECT_THROW(build_polygon(6, {{1, 3}, {1, 4}}), DomainError);
  EXPECT_THROW(build_polygon(6, {{1, 4}, {2, 5}, {1, 3}}), Error);
  EXPECT_THROW(build_polygon(6, {{1, 2}, {1, 4}, {1, 5}}), Error);
}

TEST(Surface, OneHoledTorusFromTriangles) {
  const auto t = Triangulation::from_triangles(4, 1, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}, SurfaceDescriptor{1, {1}});
  EXPECT_EQ(t.surface().genus, 1);
  EXPECT_EQ(t.surface().marked_counts, std::vector<int>{1});
  EXPECT_EQ(t.marked_point_count(), 1u);
  EXPECT_FALSE(t.simply_connected());
  EXPECT_EQ(t.cover(), nullptr);
}

TEST(Surface, FromTrianglesRejectsWrongSurface) {
  EXPECT_THROW(
      Triangulation::from_triangles(4, 1, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}, SurfaceDescriptor{0, {1, 1, 1}}),
      InvariantError);
  EXPECT_THROW(Triangulation::from_triangles(2, 3, {{1, 2, 3}, {1, 2, 4}}), Error);
}

TEST(Surface, CorpusSurfacesSatisfyCountFormulas) {
  for (const auto& s : generate_corpus(7, 5, 0)) {
    const auto& t = s.triangulation;
    const auto& d = t.surface();
    const int g = d.genus, b = d.boundary_components(), m = d.marked_points();
    EXPECT_EQ(static_cast<int>(t.n()), 6 * g + 3 * b + m - 6) << s.name;
    EXPECT_EQ(static_cast<int>(t.triangles().size()), static_cast<int>(t.n()) - 2 * (g - 1) - b) << s.name;
  }
}

TEST(Surface, CatalanCounts) {
  const std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132, 429, 1430};
  for (int m = 3; m <= 10; ++m) EXPECT_EQ(polygon_triangulations(m).size(), catalan[static_cast<std::size_t>(m - 3)]);
}

TEST(Surface, KroneckerAnnulusHasDoubleEntry) {
  const auto t = build_standard_annulus(1, 1);
  const auto b = build_BT(t);
  EXPECT_EQ(std::abs(b(1, 2)), 2);
  EXPECT_EQ(b(1, 2), -b(2, 1));
}

TEST(Surface, BTHasIdentityBelow) {
  const auto t = build_polygon(8, {{2, 4}, {4, 6}, {2, 6}, {2, 8}, {6, 8}});
  const auto b = build_BT(t);
  ASSERT_EQ(b.ell(), 5u);
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = 1; j <= 5; ++j) EXPECT_EQ(b(5 + i, j), i == j ? 1 : 0);
  EXPECT_TRUE(b.top_skew_symmetric());
}

TEST(Surface, FlipIsAnInvolution) {
  for (const auto& s : generate_corpus(7, 5, 0)) {
    const auto& t = s.triangulation;
    for (int k = 1; k <= static_cast<int>(t.n()); ++k) {
      Triangulation once = t;
      try {
        once = flip(t, k);
      } catch (const Error&) {
        continue;
      }
      EXPECT_NE(once.lift(k), t.lift(k)) << s.name << " flip " << k;
      const auto twice = flip(once, k);
      EXPECT_EQ(twice.lift(k), t.lift(k)) << s.name << " flip " << k;
      EXPECT_EQ(side_sets(twice), side_sets(t)) << s.name << " flip " << k;
    }
  }
}

TEST(Surface, FlipMatchesMatrixMutation) {
  const auto corpus = generate_corpus(9, 6, 0);
  std::mt19937 rng(20240611);
  int checked = 0;
  while (checked < 200) {
    const auto& s = corpus[rng() % corpus.size()];
    const int k = static_cast<int>(1 + rng() % s.triangulation.n());
    Triangulation flipped = s.triangulation;
    try {
      flipped = flip(s.triangulation, k);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(exchange_block(build_BT(flipped)),
              exchange_block(mutate_matrix(build_BT(s.triangulation), static_cast<std::size_t>(k))))
        << s.name << " flip " << k;
    ++checked;
  }
}

TEST(Surface, StandardAnnulusIsEmbedded) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      const auto t = build_standard_annulus(p, q);
      EXPECT_EQ(static_cast<int>(t.n()), p + q);
      EXPECT_EQ(t.surface(), (SurfaceDescriptor{0, {p, q}}));
      EXPECT_NO_THROW(t.check_geometry());
    }
}
