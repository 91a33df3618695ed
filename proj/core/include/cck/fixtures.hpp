#pragma once

// Bundled reference examples: an octagon and an annulus with two marked
// points on each boundary, each with one arc and its known results.

#include <string>
#include <vector>

#include "cck/algebra.hpp"

namespace cck {

struct ReferenceFixture {
  std::string name;
  std::string surface_text;         // surface file with one arc line
  std::vector<std::string> paths;   // complete paths, as to_string prints them
  LaurentPolynomial expansion;      // principal coefficients
  std::vector<int> g;
  std::vector<int> plus;            // I+ as published
  std::vector<int> minus;           // I-
};

const ReferenceFixture& octagon_fixture();
const ReferenceFixture& annulus_fixture();
const std::vector<const ReferenceFixture*>& reference_fixtures();

}  // namespace cck
