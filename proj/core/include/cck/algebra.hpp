#pragma once

// Exact arithmetic for cluster expansions.
//
// A LaurentPolynomial lives in Z[x_1^{+-1}, ..., x_n^{+-1}; y_1, ..., y_l]:
// x-exponents are arbitrary integers, y-exponents are non-negative, and the
// coefficients are arbitrary-precision integers. The y-block doubles as the
// coefficient block u_1..u_l of a geometric-type seed, so its rank may differ
// from the x-rank.
//
// Canonical text form (used for all output and fixtures):
//
//   poly   := "0" | term (sep term)*
//   sep    := " + " | " - "          (" - " negates the following term)
//   term   := ["-"] (coef | [coef " * "] factor (" * " factor)*)
//   factor := name index ["^" exponent]
//
// Terms appear in ascending lexicographic order of (y-exponents, x-exponents).
// Inside a term the y-factors come first, then the x-factors, each by
// ascending index. A coefficient of 1 and an exponent of 1 are omitted.
// Example: "x3^-1 + y3 * x1^-1 * x2 * x3^-1 * x4 * x5^-1".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cck {

using Integer = mpz_class;

/// Exponents of one monomial. Arithmetic may produce negative y-entries;
/// LaurentPolynomial rejects those when a term is stored.
class ExponentVector {
 public:
  ExponentVector() = default;
  ExponentVector(std::size_t x_rank, std::size_t y_rank) : x_(x_rank, 0), y_(y_rank, 0) {}
  ExponentVector(std::vector<int> x, std::vector<int> y) : x_(std::move(x)), y_(std::move(y)) {}

  /// e_i in the x-block (1-based index).
  static ExponentVector unit_x(std::size_t x_rank, std::size_t y_rank, std::size_t i);
  /// e_i in the y-block (1-based index).
  static ExponentVector unit_y(std::size_t x_rank, std::size_t y_rank, std::size_t i);

  std::size_t x_rank() const noexcept { return x_.size(); }
  std::size_t y_rank() const noexcept { return y_.size(); }

  const std::vector<int>& x() const noexcept { return x_; }
  const std::vector<int>& y() const noexcept { return y_; }
  std::vector<int>& x() noexcept { return x_; }
  std::vector<int>& y() noexcept { return y_; }

  bool x_is_zero() const noexcept;
  bool y_is_zero() const noexcept;
  bool y_nonnegative() const noexcept;

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Lexicographic on (y, x); the canonical term order.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  std::vector<int> x_;
  std::vector<int> y_;
};

struct VariableNames {
  std::string x = "x";
  std::string y = "y";
};

class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::size_t x_rank, std::size_t y_rank) : x_rank_(x_rank), y_rank_(y_rank) {}

  static LaurentPolynomial constant(std::size_t x_rank, std::size_t y_rank, const Integer& c);
  static LaurentPolynomial monomial(const ExponentVector& e, const Integer& c = 1);
  /// The initial cluster variable x_i (1-based).
  static LaurentPolynomial x_variable(std::size_t x_rank, std::size_t y_rank, std::size_t i);

  std::size_t x_rank() const noexcept { return x_rank_; }
  std::size_t y_rank() const noexcept { return y_rank_; }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of the monomial `e`, zero if absent.
  Integer coefficient(const ExponentVector& e) const;

  /// Adds c * x^e, dropping the term if the result cancels.
  /// Throws InvariantError on a rank mismatch or a negative y-exponent.
  void add_term(const ExponentVector& e, const Integer& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.x_rank_ == b.x_rank_ && a.y_rank_ == b.y_rank_ && a.terms_ == b.terms_;
  }

  /// Multiplies every term by x^e (e may have negative y-entries as long as
  /// the result does not).
  LaurentPolynomial shifted(const ExponentVector& e) const;

  /// Componentwise minimum / maximum exponent over all terms. Requires a
  /// non-zero polynomial.
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  /// True when every coefficient is a positive integer.
  bool coefficients_positive() const;

 private:
  void check_rank(const LaurentPolynomial& other) const;

  std::size_t x_rank_ = 0;
  std::size_t y_rank_ = 0;
  TermMap terms_;
};

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Division by the unit monomial x^b: shifts every exponent down by b.
LaurentPolynomial poly_divide_exact(const LaurentPolynomial& a, const ExponentVector& b_monomial);

/// Exact division by an arbitrary Laurent polynomial. Returns nullopt when
/// the quotient is not a Laurent polynomial with integer coefficients and
/// non-negative y-exponents.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Sets all x_i = 1: the result has zero x-exponents.
LaurentPolynomial substitute_x_one(const LaurentPolynomial& p);

/// Sets all y_i = 1: the result has y-rank 0.
LaurentPolynomial substitute_y_one(const LaurentPolynomial& p);

/// Trop(u_1..u_l): elements are integer exponent vectors, multiplication is
/// addition of exponents and the semifield sum is the componentwise minimum.
class TropicalSemifield {
 public:
  using Element = std::vector<std::int64_t>;

  explicit TropicalSemifield(std::size_t generator_count) : generators_(generator_count) {}

  std::size_t generator_count() const noexcept { return generators_; }

  Element identity() const { return Element(generators_, 0); }
  Element generator(std::size_t i) const;  // 1-based
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, std::int64_t k) const;
  Element add(const Element& a, const Element& b) const;

 private:
  void check(const Element& a) const;

  std::size_t generators_;
};

/// Evaluates a subtraction-free coefficient polynomial (all x-exponents zero)
/// in the semifield after substituting assignment[i-1] for y_i.
/// Throws DomainError if x-exponents are present, a coefficient is not
/// positive, the polynomial is zero, or the assignment is incomplete.
TropicalSemifield::Element tropical_eval(const LaurentPolynomial& p, const TropicalSemifield& semifield,
                                         std::span<const TropicalSemifield::Element> assignment);

std::string to_string(const LaurentPolynomial& p, const VariableNames& names = {});

/// Parses the canonical text form (whitespace-tolerant). Throws ParseError.
LaurentPolynomial parse_polynomial(std::string_view text, std::size_t x_rank, std::size_t y_rank,
                                   const VariableNames& names = {});

}  // namespace cck
