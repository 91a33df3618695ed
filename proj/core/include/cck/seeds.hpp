#pragma once

// Seeds of geometric type and their mutations.
//
// Indices are 1-based throughout, matching edge ids of triangulations:
// rows 1..n are the exchange part, rows n+1..n+ell the coefficient part.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cck/algebra.hpp"

namespace cck {

class ExtendedMatrix {
 public:
  ExtendedMatrix() = default;
  ExtendedMatrix(std::size_t n, std::size_t ell);

  /// n x n exchange block with the identity appended below.
  static ExtendedMatrix principal(const std::vector<std::vector<int>>& exchange);

  std::size_t n() const noexcept { return n_; }
  std::size_t ell() const noexcept { return ell_; }

  int operator()(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }
  int& operator()(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }

  bool top_skew_symmetric() const;

  /// Replaces the coefficient rows; `rows` is ell x n.
  ExtendedMatrix with_coefficient_rows(const std::vector<std::vector<int>>& rows) const;

  friend bool operator==(const ExtendedMatrix&, const ExtendedMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::size_t ell_ = 0;
  std::vector<int> entries_;
};

/// Matrix mutation in direction k, applied to all n+ell rows.
ExtendedMatrix mutate_matrix(const ExtendedMatrix& b, std::size_t k);

/// A seed whose cluster is stored symbolically in the initial variables:
/// cluster_values[i-1] is a Laurent polynomial in x_1..x_n and u_1..u_ell.
struct Seed {
  ExtendedMatrix matrix;
  std::vector<std::string> cluster_labels;
  std::vector<LaurentPolynomial> cluster_values;

  /// The initial seed: cluster_values are the variables x_1..x_n.
  static Seed initial(const ExtendedMatrix& matrix, std::vector<std::string> labels = {});
};

/// Exchange relation followed by matrix mutation. Throws InvariantError if the
/// exchange binomial is not divisible by the old value in the Laurent ring.
Seed mutate_seed(const Seed& s, std::size_t k);

/// Quiver with vertices 1..n (mutable) and n+1..n+ell (frozen).
struct QuiverView {
  std::size_t n = 0;
  std::size_t ell = 0;
  /// arrows[{i, j}] = number of arrows i -> j; only positive counts stored.
  std::map<std::pair<std::size_t, std::size_t>, int> arrows;

  std::size_t vertex_count() const noexcept { return n + ell; }
  int arrow_count(std::size_t from, std::size_t to) const;

  friend bool operator==(const QuiverView&, const QuiverView&) = default;
};

QuiverView quiver_of(const ExtendedMatrix& b);
ExtendedMatrix matrix_of(const QuiverView& q);

/// Quiver mutation at a mutable vertex k: compose paths through k, reverse
/// the arrows at k, cancel 2-cycles. Arrows between frozen vertices are dropped.
QuiverView mutate_quiver(const QuiverView& q, std::size_t k);

/// "cck/1" header, then "n ell", then n+ell rows of n integers.
void write_matrix(std::ostream& os, const ExtendedMatrix& b);
ExtendedMatrix read_matrix(std::istream& is);

}  // namespace cck
