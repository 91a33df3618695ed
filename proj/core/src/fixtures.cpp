#include "cck/fixtures.hpp"

#include <utility>

namespace cck {

namespace {

using Term = std::pair<std::vector<int>, std::vector<int>>;

LaurentPolynomial from_terms(const std::vector<int>& denominator, const std::vector<Term>& numerators) {
  const std::size_t n = denominator.size();
  LaurentPolynomial p(n, n);
  for (const auto& [x, y] : numerators) {
    ExponentVector e(x, y);
    for (std::size_t i = 0; i < n; ++i) e.x()[i] -= denominator[i];
    p.add_term(e, 1);
  }
  return p;
}

ReferenceFixture make_octagon() {
  ReferenceFixture f;
  f.name = "octagon";
  f.surface_text =
      "cck/1\n"
      "surface 0 1 8\n"
      "edges 5 8\n"
      "polygon 8\n"
      "diag 1 2 4\n"
      "diag 2 4 6\n"
      "diag 3 2 6\n"
      "diag 4 2 8\n"
      "diag 5 6 8\n"
      "tri 13b 4 6b\n"
      "tri 1 8b 7b\n"
      "tri 3 2 1\n"
      "tri 4 5 3\n"
      "tri 2 10b 9b\n"
      "tri 5 12b 11b\n"
      "chord 3 7\n";
  f.paths = {"(8,1,3,3,3,5,12)", "(8,1,3,3,4,5,11)", "(7,1,2,3,3,5,12)", "(7,1,2,3,4,5,11)",
             "(7,1,1,3,5,5,11)"};
  f.expansion = from_terms({1, 0, 1, 0, 1}, {{{0, 0, 2, 0, 0}, {1, 0, 1, 0, 1}},
                                             {{0, 0, 1, 1, 0}, {1, 0, 1, 0, 0}},
                                             {{0, 1, 1, 0, 0}, {0, 0, 1, 0, 1}},
                                             {{0, 1, 0, 1, 0}, {0, 0, 1, 0, 0}},
                                             {{1, 0, 0, 0, 1}, {0, 0, 0, 0, 0}}});
  f.g = {0, 0, -1, 0, 0};
  f.plus = {7, 12};
  f.minus = {3};
  return f;
}

ReferenceFixture make_annulus() {
  ReferenceFixture f;
  f.name = "annulus";
  f.surface_text =
      "cck/1\n"
      "surface 0 2 2 2\n"
      "edges 4 4\n"
      "annulus 2 2\n"
      "lift 1 o1 i1 0\n"
      "lift 2 o1 i2 -1\n"
      "lift 3 o2 i2 0\n"
      "lift 4 o2 i1 0\n"
      "tri 1 4 5b\n"
      "tri 3 2 6b\n"
      "tri 2 8b 1\n"
      "tri 4 7b 3\n"
      "annarc o2 i2 -2\n";
  f.paths = {"(4,1,2,2,2,3,4,4,4,1,2)", "(4,1,2,2,2,3,4,4,5,1,8)", "(4,1,2,2,6,3,7,4,4,1,2)",
             "(4,1,2,2,6,3,7,4,5,1,8)", "(4,1,2,2,6,3,3,4,1,1,8)", "(5,1,8,2,2,3,4,4,4,1,2)",
             "(5,1,8,2,2,3,4,4,5,1,8)", "(5,1,8,2,6,3,7,4,4,1,2)", "(5,1,8,2,6,3,7,4,5,1,8)",
             "(5,1,8,2,6,3,3,4,1,1,8)", "(5,1,1,2,3,3,7,4,4,1,2)", "(5,1,1,2,3,3,7,4,5,1,8)",
             "(5,1,1,2,3,3,3,4,1,1,8)"};
  f.expansion = from_terms({2, 1, 1, 1}, {{{0, 3, 0, 3}, {2, 1, 1, 1}},
                                          {{0, 2, 0, 2}, {1, 1, 1, 1}},
                                          {{0, 2, 0, 2}, {2, 1, 0, 1}},
                                          {{0, 1, 0, 1}, {1, 1, 0, 1}},
                                          {{1, 1, 1, 1}, {1, 1, 0, 0}},
                                          {{0, 2, 0, 2}, {1, 1, 1, 1}},
                                          {{0, 1, 0, 1}, {0, 1, 1, 1}},
                                          {{0, 1, 0, 1}, {1, 1, 0, 1}},
                                          {{0, 0, 0, 0}, {0, 1, 0, 1}},
                                          {{1, 0, 1, 0}, {0, 1, 0, 0}},
                                          {{1, 1, 1, 1}, {1, 0, 0, 1}},
                                          {{1, 0, 1, 0}, {0, 0, 0, 1}},
                                          {{2, 0, 2, 0}, {0, 0, 0, 0}}});
  f.g = {0, -1, 1, -1};
  f.plus = {3, 5, 8};
  f.minus = {2, 4};
  return f;
}

}  // namespace

const ReferenceFixture& octagon_fixture() {
  static const ReferenceFixture f = make_octagon();
  return f;
}

const ReferenceFixture& annulus_fixture() {
  static const ReferenceFixture f = make_annulus();
  return f;
}

const std::vector<const ReferenceFixture*>& reference_fixtures() {
  static const std::vector<const ReferenceFixture*> all{&octagon_fixture(), &annulus_fixture()};
  return all;
}

}  // namespace cck
