#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cck/corpus.hpp"
#include "cck/error.hpp"
#include "cck/fixtures.hpp"
#include "cck/io.hpp"

using namespace cck;

namespace {

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_surface(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Io, FixtureFilesMatchEmbeddedText) {
  for (const ReferenceFixture* f : reference_fixtures())
    EXPECT_EQ(slurp(std::string(CCK_FIXTURE_DIR) + "/" + f->name + ".cck"), f->surface_text) << f->name;
}

TEST(Io, RoundTripCorpus) {
  for (const auto& s : generate_corpus(7, 5, 1)) {
    std::ostringstream out;
    write_surface(out, s.triangulation, s.arcs);
    std::istringstream in(out.str());
    const SurfaceFile f = read_surface(in);
    std::ostringstream again;
    write_surface(again, f.triangulation, f.arcs);
    EXPECT_EQ(out.str(), again.str()) << s.name;
  }
}

TEST(Io, TrianglesOnly) {
  std::istringstream in("cck/1\n# one-holed torus\nsurface 1 1 1\nedges 4 1\ntri 1 2 3\ntri 1 2 4\ntri 3 4 5b\n");
  const SurfaceFile f = read_surface(in);
  EXPECT_EQ(f.triangulation.surface().genus, 1);
  EXPECT_EQ(f.triangulation.cover(), nullptr);
}

TEST(Io, ParseErrorsCarryLines) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("cck/2\n"), 1);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 0 1 5\nedges 2 5\nwibble\n"), 4);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 0 1 5\nedges 3 5\n"), 3);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 0 1 5\nedges 2 5\npolygon 5\ndiag 1 1 3\ndiag 2 2 4\n"), 4);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 0 1 5\nedges 2 5\npolygon 5\ndiag 1 1 3\ndiag 2 1 9\n"), 6);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 0 1 5\nedges 2 5\npolygon 5\ndiag 1 1 3\ndiag 2 1 4\nchord 1\n"), 7);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 0 1 5\nedges 2 5\npolygon 5\ndiag 1 1 3\ndiag 2 1 4\ntri 1 2 3\n"), 7);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 1 1 1\nedges 4 1\ntri 1 2 3\ntri 1 2 4\ntri 3 4 x\n"), 6);
  EXPECT_EQ(parse_error_line("cck/1\nsurface 1 1 1\nedges 4 1\ntri 1 2 3\ntri 1 2 4\ntri 3 4 5\ntri 1 2 3\n"), 4);
}

TEST(Io, Coefficients) {
  std::istringstream in("cck/1\n2\n1 0\n0 1\n");
  const auto rows = read_coefficients(in, 2);
  EXPECT_EQ(rows, (std::vector<TropicalSemifield::Element>{{1, 0}, {0, 1}}));
  std::istringstream short_row("cck/1\n2\n1 0\n0\n");
  EXPECT_THROW(read_coefficients(short_row, 2), ParseError);
  std::istringstream few_rows("cck/1\n2\n1 0\n");
  EXPECT_THROW(read_coefficients(few_rows, 2), ParseError);
}

TEST(Io, CoefficientMatrix) {
  const auto t = build_standard_annulus(1, 1);
  const auto b = coefficient_matrix(t, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(b.ell(), 3u);
  EXPECT_EQ(b(3, 1), 1);
  EXPECT_EQ(b(5, 1), 3);
  EXPECT_EQ(b(4, 2), 5);
}

TEST(Io, JsonRecords) {
  std::istringstream in(octagon_fixture().surface_text);
  const SurfaceFile f = read_surface(in);
  EXPECT_EQ(gvector_json(f.arcs[0], g_vector(f.triangulation, f.arcs[0])),
            R"({"arc":"chord 3 7","g":[0,0,-1,0,0],"I+":[7,11],"I-":[3]})");
  const auto chi = chi_json(f.arcs[0], chi_table(f.triangulation, f.arcs[0]));
  EXPECT_EQ(chi.rfind(R"({"arc":"chord 3 7","theorem":true,"paths":5,"table":[{"e":[0,0,0,0,0],"chi":1},)", 0), 0u);
}
