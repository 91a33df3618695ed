#pragma once

// Combinatorial model of the universal cover of a polygon or an annulus.
//
// The cover is a disc whose boundary carries the lifted marked points. For a
// polygon with m vertices the points are (0, i), 0 <= i < m, for vertex i+1.
// For an annulus with p outer and q inner marked points the cover is a strip:
// outer points (0, i) and inner points (1, j) for all integers i, j, where
// (0, i) lies over o_{(i mod p)+1} and (1, j) over i_{(j mod q)+1}. Both
// boundary components are numbered counterclockwise in the annulus picture.
//
// Walking counterclockwise around the cover disc meets the outer points by
// increasing index and then the inner points by decreasing index; `key` is
// that linear order. Two chords cross iff their endpoints interleave.
//
// The deck translation by k adds k*p to outer indices and k*q to inner ones.
// Copy 0 of a marked point is the lift with index in [0, period); an annulus
// arc "x y w" runs from copy 0 of x to copy w of y.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace cck {

struct CoverPoint {
  int side = 0;  // 0: polygon or outer boundary, 1: inner boundary
  std::int64_t index = 0;

  friend auto operator<=>(const CoverPoint&, const CoverPoint&) = default;
};

struct Chord {
  CoverPoint a;
  CoverPoint b;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// A marked point of an annulus, "o3" or "i1" in text.
struct AnnulusPoint {
  bool inner = false;
  int index = 1;  // 1-based
};

AnnulusPoint parse_annulus_point(const std::string& token);
std::string to_string(const AnnulusPoint& point);

class Cover {
 public:
  enum class Kind { polygon, annulus };

  static Cover polygon(int m);
  static Cover annulus(int p, int q);

  Kind kind() const noexcept { return kind_; }
  int outer_count() const noexcept { return p_; }
  int inner_count() const noexcept { return q_; }
  int marked_count() const noexcept { return p_ + q_; }
  int period(int side) const { return side == 0 ? p_ : q_; }

  /// 1-based marked point label: polygon vertex, or o_r -> r, i_s -> p+s.
  int label(const CoverPoint& x) const;
  /// The lift of a polygon vertex (copy must be 0) or annulus point.
  CoverPoint lift(int polygon_vertex) const;
  CoverPoint lift(const AnnulusPoint& x, std::int64_t copy) const;

  std::pair<int, std::int64_t> key(const CoverPoint& x) const;
  bool key_less(const CoverPoint& x, const CoverPoint& y) const { return key(x) < key(y); }

  CoverPoint translate(const CoverPoint& x, std::int64_t k) const;
  Chord translate(const Chord& c, std::int64_t k) const;

  /// Endpoints ordered by key, then translated so that the first endpoint is
  /// a copy-0 point. Equal results <=> same arc in the surface.
  Chord normalize(const Chord& c) const;

  /// Strict interleaving of endpoints; chords sharing an endpoint do not cross.
  bool crosses(const Chord& c, const Chord& d) const;

  bool is_boundary(const Chord& c) const;
  /// Not a boundary segment, not contractible, no self-crossing in the surface.
  bool is_arc(const Chord& c) const;

  /// If some translate of x equals y, returns the translation amount.
  bool translation_between(const CoverPoint& x, const CoverPoint& y, std::int64_t& k) const;

 private:
  Cover(Kind kind, int p, int q) : kind_(kind), p_(p), q_(q) {}

  Kind kind_;
  int p_;
  int q_;
};

}  // namespace cck
