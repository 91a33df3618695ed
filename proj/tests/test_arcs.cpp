#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cck/arcs.hpp"
#include "cck/corpus.hpp"
#include "cck/error.hpp"
#include "cck/expansion.hpp"

using namespace cck;

namespace {

Triangulation octagon() { return build_polygon(8, {{2, 4}, {4, 6}, {2, 6}, {2, 8}, {6, 8}}); }

}  // namespace

TEST(Arcs, ParseAndPrint) {
  for (const std::string text : {"chord 3 7", "annarc o2 i2 -2", "annarc i1 i1 1", "band 2 1 3 / 4", "edge 5"})
    EXPECT_EQ(to_string(parse_arc(text)), text);
  EXPECT_EQ(to_string(parse_arc("  chord   3\t7 ")), "chord 3 7");
}

TEST(Arcs, ParseRejectsMalformed) {
  for (const std::string text : {"", "chord 3", "chord a b", "annarc o2 x2 0", "band 2 1 / 4", "band 1 1", "curve 1 2",
                                 "edge 1 2", "chord 3 7 9"})
    EXPECT_THROW(parse_arc(text), ParseError) << text;
}

TEST(Arcs, OctagonBand) {
  const auto t = octagon();
  const auto band = crossing_band(t, Arc::make_chord(3, 7));
  EXPECT_EQ(band.crossed, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(band.third, (std::vector<int>{7, 8, 2, 4, 12, 11}));
  EXPECT_EQ(to_string(alpha_zero(band)), "(7,1,1,3,5,5,11)");
}

TEST(Arcs, EdgeOfTriangulationHasTrivialBand) {
  const auto t = octagon();
  const auto band = crossing_band(t, Arc::make_chord(2, 6));
  EXPECT_EQ(band.d(), 0u);
  EXPECT_EQ(band.gamma_edge, 3);
  const auto paths = enumerate_paths(band);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(to_string(paths[0]), "(3)");
}

TEST(Arcs, ExplicitBandMatchesChord) {
  const auto t = octagon();
  const auto geometric = crossing_band(t, Arc::make_chord(3, 7));
  const auto explicit_band =
      crossing_band(t, Arc::make_band(geometric.crossed, geometric.triangles.front() + 1));
  EXPECT_EQ(explicit_band.crossed, geometric.crossed);
  EXPECT_EQ(explicit_band.third, geometric.third);
}

TEST(Arcs, BandRejectsNonAdjacentCrossing) {
  const auto t = octagon();
  EXPECT_THROW(build_band(t, 0, {5, 1}), DomainError);
}

TEST(Arcs, BoundarySegmentIsNotAnArc) {
  const auto t = octagon();
  EXPECT_THROW(crossing_band(t, Arc::make_chord(3, 4)), DomainError);
  EXPECT_THROW(crossing_band(t, Arc::make_edge(9)), DomainError);
}

TEST(Arcs, PathShape) {
  for (const auto& s : acceptance_corpus()) {
    for (const auto& arc : s.arcs) {
      const auto band = crossing_band(s.triangulation, arc);
      const auto paths = enumerate_paths(band);
      ASSERT_FALSE(paths.empty()) << s.name << " " << to_string(arc);
      EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end(),
                                 [](const auto& a, const auto& b) { return a.key() < b.key(); }));
      for (const auto& p : paths) {
        ASSERT_EQ(p.steps.size(), 2 * band.d() + 1);
        for (std::size_t k = 1; k <= band.d(); ++k) EXPECT_EQ(p.steps[2 * k - 1].edge, band.crossed[k - 1]);
        for (std::size_t j = 0; j + 1 < p.steps.size(); ++j) EXPECT_EQ(p.steps[j].to, p.steps[j + 1].from);
      }
      const auto a0 = to_string(alpha_zero(band));
      EXPECT_TRUE(std::any_of(paths.begin(), paths.end(), [&](const auto& p) { return to_string(p) == a0; }))
          << s.name << " " << to_string(arc);
    }
  }
}

TEST(Arcs, ReversalGivesSamePaths) {
  const auto t = octagon();
  for (const auto& arc : polygon_chords(8)) {
    const auto forward = enumerate_paths(crossing_band(t, arc));
    const auto backward = enumerate_paths(crossing_band(t, Arc::make_chord(arc.b, arc.a)));
    std::vector<std::string> f, b;
    for (const auto& p : forward) f.push_back(to_string(p));
    for (const auto& p : backward) b.push_back(to_string(p.reversed()));
    std::sort(f.begin(), f.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(f, b) << to_string(arc);
  }
}

TEST(Arcs, ReversedBandKeepsCrossings) {
  const auto t = octagon();
  const auto band = crossing_band(t, Arc::make_chord(3, 7));
  const auto rev = reversed_band(t, band);
  EXPECT_EQ(rev.crossed, (std::vector<int>{5, 3, 1}));
  EXPECT_EQ(enumerate_paths(rev).size(), enumerate_paths(band).size());
}

TEST(Arcs, AnnulusArcsAreDistinctAndCrossingCountsFinite) {
  const auto arcs = annulus_arcs(2, 2, 2);
  const auto t = build_standard_annulus(2, 2);
  std::set<Chord> chords;
  for (const auto& arc : arcs) {
    EXPECT_TRUE(chords.insert(t.cover()->normalize(arc_chord(t, arc))).second) << to_string(arc);
    EXPECT_EQ(crossing_band(t, arc).d(), geometric_crossings(t, arc_chord(t, arc)).size());
  }
  EXPECT_GT(arcs.size(), 20u);
}
