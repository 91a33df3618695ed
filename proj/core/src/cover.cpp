#include "cck/cover.hpp"

#include <algorithm>
#include <cstdlib>

#include "cck/error.hpp"

namespace cck {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m) { return (a - floor_mod(a, m)) / m; }

}  // namespace

AnnulusPoint parse_annulus_point(const std::string& token) {
  if (token.size() < 2 || (token[0] != 'o' && token[0] != 'i'))
    throw DomainError("annulus point must look like o1 or i1: '" + token + "'");
  AnnulusPoint x;
  x.inner = token[0] == 'i';
  std::size_t used = 0;
  try {
    x.index = std::stoi(token.substr(1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used + 1 != token.size() || x.index < 1) throw DomainError("bad annulus point '" + token + "'");
  return x;
}

std::string to_string(const AnnulusPoint& point) { return (point.inner ? "i" : "o") + std::to_string(point.index); }

Cover Cover::polygon(int m) {
  if (m < 4) throw DomainError("a polygon needs at least 4 marked points");
  return Cover(Kind::polygon, m, 0);
}

Cover Cover::annulus(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("an annulus needs marked points on both boundary components");
  return Cover(Kind::annulus, p, q);
}

int Cover::label(const CoverPoint& x) const {
  if (x.side == 0) return static_cast<int>(floor_mod(x.index, p_)) + 1;
  return p_ + static_cast<int>(floor_mod(x.index, q_)) + 1;
}

CoverPoint Cover::lift(int polygon_vertex) const {
  if (kind_ != Kind::polygon) throw DomainError("vertex lift needs a polygon");
  if (polygon_vertex < 1 || polygon_vertex > p_) throw DomainError("polygon vertex out of range");
  return {0, polygon_vertex - 1};
}

CoverPoint Cover::lift(const AnnulusPoint& x, std::int64_t copy) const {
  if (kind_ != Kind::annulus) throw DomainError("annulus point lift needs an annulus");
  const int per = x.inner ? q_ : p_;
  if (x.index > per) throw DomainError("annulus point " + to_string(x) + " out of range");
  return {x.inner ? 1 : 0, x.index - 1 + copy * per};
}

std::pair<int, std::int64_t> Cover::key(const CoverPoint& x) const { return {x.side, x.side == 0 ? x.index : -x.index}; }

CoverPoint Cover::translate(const CoverPoint& x, std::int64_t k) const {
  if (k == 0) return x;
  if (kind_ == Kind::polygon) throw DomainError("a polygon has no deck translations");
  return {x.side, x.index + k * period(x.side)};
}

Chord Cover::translate(const Chord& c, std::int64_t k) const { return {translate(c.a, k), translate(c.b, k)}; }

Chord Cover::normalize(const Chord& c) const {
  Chord r = key_less(c.b, c.a) ? Chord{c.b, c.a} : c;
  if (kind_ == Kind::annulus) r = translate(r, -floor_div(r.a.index, period(r.a.side)));
  return r;
}

bool Cover::crosses(const Chord& c, const Chord& d) const {
  auto a = key(c.a), b = key(c.b), x = key(d.a), y = key(d.b);
  if (b < a) std::swap(a, b);
  if (y < x) std::swap(x, y);
  return (a < x && x < b && b < y) || (x < a && a < y && y < b);
}

bool Cover::is_boundary(const Chord& c) const {
  if (c.a.side != c.b.side) return false;
  const std::int64_t delta = std::llabs(c.a.index - c.b.index);
  if (kind_ == Kind::polygon) return delta == 1 || delta == p_ - 1;
  return delta == 1;
}

bool Cover::is_arc(const Chord& c) const {
  if (c.a == c.b || is_boundary(c)) return false;
  if (kind_ == Kind::polygon) {
    auto inside = [&](const CoverPoint& x) { return x.side == 0 && x.index >= 0 && x.index < p_; };
    return inside(c.a) && inside(c.b);
  }
  if (c.a.side != c.b.side) return true;
  const std::int64_t delta = std::llabs(c.a.index - c.b.index);
  return delta >= 2 && delta <= period(c.a.side);
}

bool Cover::translation_between(const CoverPoint& x, const CoverPoint& y, std::int64_t& k) const {
  if (x.side != y.side) return false;
  if (kind_ == Kind::polygon) {
    k = 0;
    return x.index == y.index;
  }
  const std::int64_t diff = y.index - x.index;
  if (floor_mod(diff, period(x.side)) != 0) return false;
  k = diff / period(x.side);
  return true;
}

}  // namespace cck
