#include "cck/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cck/error.hpp"

namespace cck {

// ---------------------------------------------------------------- exponents

ExponentVector ExponentVector::unit_x(std::size_t x_rank, std::size_t y_rank, std::size_t i) {
  if (i == 0 || i > x_rank) throw DomainError("x-variable index out of range");
  ExponentVector e(x_rank, y_rank);
  e.x_[i - 1] = 1;
  return e;
}

ExponentVector ExponentVector::unit_y(std::size_t x_rank, std::size_t y_rank, std::size_t i) {
  if (i == 0 || i > y_rank) throw DomainError("y-variable index out of range");
  ExponentVector e(x_rank, y_rank);
  e.y_[i - 1] = 1;
  return e;
}

bool ExponentVector::x_is_zero() const noexcept {
  return std::all_of(x_.begin(), x_.end(), [](int v) { return v == 0; });
}

bool ExponentVector::y_is_zero() const noexcept {
  return std::all_of(y_.begin(), y_.end(), [](int v) { return v == 0; });
}

bool ExponentVector::y_nonnegative() const noexcept {
  return std::all_of(y_.begin(), y_.end(), [](int v) { return v >= 0; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (x_.size() != other.x_.size() || y_.size() != other.y_.size())
    throw InvariantError("exponent vector rank mismatch");
  for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += other.x_[i];
  for (std::size_t i = 0; i < y_.size(); ++i) y_[i] += other.y_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  if (x_.size() != other.x_.size() || y_.size() != other.y_.size())
    throw InvariantError("exponent vector rank mismatch");
  for (std::size_t i = 0; i < x_.size(); ++i) x_[i] -= other.x_[i];
  for (std::size_t i = 0; i < y_.size(); ++i) y_[i] -= other.y_[i];
  return *this;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.y_ <=> b.y_; c != 0) return c;
  return a.x_ <=> b.x_;
}

// -------------------------------------------------------------- polynomials

LaurentPolynomial LaurentPolynomial::constant(std::size_t x_rank, std::size_t y_rank, const Integer& c) {
  LaurentPolynomial p(x_rank, y_rank);
  p.add_term(ExponentVector(x_rank, y_rank), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e, const Integer& c) {
  LaurentPolynomial p(e.x_rank(), e.y_rank());
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::x_variable(std::size_t x_rank, std::size_t y_rank, std::size_t i) {
  return monomial(ExponentVector::unit_x(x_rank, y_rank, i));
}

Integer LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Integer& c) {
  if (e.x_rank() != x_rank_ || e.y_rank() != y_rank_) throw InvariantError("polynomial rank mismatch");
  if (!e.y_nonnegative()) throw InvariantError("negative y-exponent in a polynomial term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::check_rank(const LaurentPolynomial& other) const {
  if (x_rank_ != other.x_rank_ || y_rank_ != other.y_rank_) throw InvariantError("polynomial rank mismatch");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_rank(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_rank(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_rank(b);
  LaurentPolynomial r(a.x_rank_, a.y_rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& e) const {
  LaurentPolynomial r(x_rank_, y_rank_);
  for (const auto& [t, c] : terms_) r.add_term(t + e, c);
  return r;
}

ExponentVector LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) throw DomainError("min_exponents of the zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < x_rank_; ++i) m.x()[i] = std::min(m.x()[i], e.x()[i]);
    for (std::size_t i = 0; i < y_rank_; ++i) m.y()[i] = std::min(m.y()[i], e.y()[i]);
  }
  return m;
}

ExponentVector LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) throw DomainError("max_exponents of the zero polynomial");
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < x_rank_; ++i) m.x()[i] = std::max(m.x()[i], e.x()[i]);
    for (std::size_t i = 0; i < y_rank_; ++i) m.y()[i] = std::max(m.y()[i], e.y()[i]);
  }
  return m;
}

bool LaurentPolynomial::coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + b; }

LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; }

LaurentPolynomial poly_divide_exact(const LaurentPolynomial& a, const ExponentVector& b_monomial) {
  ExponentVector neg(a.x_rank(), a.y_rank());
  neg -= b_monomial;
  return a.shifted(neg);
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.x_rank() != b.x_rank() || a.y_rank() != b.y_rank()) throw InvariantError("polynomial rank mismatch");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPolynomial(a.x_rank(), a.y_rank());

  // Move both operands into the polynomial ring so that the lex order is a
  // well-order; the lowest exponent in each variable is additive under
  // multiplication, so an exact quotient becomes a polynomial as well.
  const ExponentVector a_min = a.min_exponents();
  const ExponentVector b_min = b.min_exponents();
  ExponentVector zero(a.x_rank(), a.y_rank());
  LaurentPolynomial rem = a.shifted(zero - a_min);
  const LaurentPolynomial divisor = b.shifted(zero - b_min);
  const auto& [lead_exp, lead_coef] = *divisor.terms().rbegin();

  LaurentPolynomial quotient(a.x_rank(), a.y_rank());
  while (!rem.is_zero()) {
    const auto& [exp, coef] = *rem.terms().rbegin();
    ExponentVector q_exp = exp - lead_exp;
    const bool divisible =
        q_exp.y_nonnegative() && std::all_of(q_exp.x().begin(), q_exp.x().end(), [](int v) { return v >= 0; });
    if (!divisible || !mpz_divisible_p(coef.get_mpz_t(), lead_coef.get_mpz_t())) return std::nullopt;
    Integer q_coef = coef / lead_coef;
    LaurentPolynomial step = LaurentPolynomial::monomial(q_exp, q_coef);
    quotient += step;
    rem -= step * divisor;
  }

  ExponentVector back = a_min - b_min;
  for (const auto& [e, c] : quotient.terms())
    if (!(e + back).y_nonnegative()) return std::nullopt;
  return quotient.shifted(back);
}

LaurentPolynomial substitute_x_one(const LaurentPolynomial& p) {
  LaurentPolynomial r(p.x_rank(), p.y_rank());
  for (const auto& [e, c] : p.terms()) r.add_term(ExponentVector(std::vector<int>(p.x_rank(), 0), e.y()), c);
  return r;
}

LaurentPolynomial substitute_y_one(const LaurentPolynomial& p) {
  LaurentPolynomial r(p.x_rank(), 0);
  for (const auto& [e, c] : p.terms()) r.add_term(ExponentVector(e.x(), {}), c);
  return r;
}

// ------------------------------------------------------------------ tropical

void TropicalSemifield::check(const Element& a) const {
  if (a.size() != generators_) throw DomainError("tropical element has the wrong number of generators");
}

TropicalSemifield::Element TropicalSemifield::generator(std::size_t i) const {
  if (i == 0 || i > generators_) throw DomainError("generator index out of range");
  Element e = identity();
  e[i - 1] = 1;
  return e;
}

TropicalSemifield::Element TropicalSemifield::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r(generators_);
  for (std::size_t i = 0; i < generators_; ++i) r[i] = a[i] + b[i];
  return r;
}

TropicalSemifield::Element TropicalSemifield::power(const Element& a, std::int64_t k) const {
  check(a);
  Element r(generators_);
  for (std::size_t i = 0; i < generators_; ++i) r[i] = a[i] * k;
  return r;
}

TropicalSemifield::Element TropicalSemifield::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r(generators_);
  for (std::size_t i = 0; i < generators_; ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

TropicalSemifield::Element tropical_eval(const LaurentPolynomial& p, const TropicalSemifield& semifield,
                                         std::span<const TropicalSemifield::Element> assignment) {
  if (assignment.size() != p.y_rank()) throw DomainError("tropical_eval: every y-variable needs a value");
  if (p.is_zero()) throw DomainError("tropical_eval: the zero polynomial has no semifield value");
  std::optional<TropicalSemifield::Element> acc;
  for (const auto& [e, c] : p.terms()) {
    if (!e.x_is_zero()) throw DomainError("tropical_eval: polynomial has x-exponents");
    if (c <= 0) throw DomainError("tropical_eval: polynomial is not subtraction-free");
    TropicalSemifield::Element term = semifield.identity();
    for (std::size_t i = 0; i < e.y().size(); ++i)
      if (e.y()[i] != 0) term = semifield.multiply(term, semifield.power(assignment[i], e.y()[i]));
    acc = acc ? semifield.add(*acc, term) : term;
  }
  return *acc;
}

// ---------------------------------------------------------------- text form

namespace {

void write_factor(std::ostream& os, bool& first, const std::string& name, std::size_t index, int exponent) {
  if (exponent == 0) return;
  if (!first) os << " * ";
  first = false;
  os << name << index;
  if (exponent != 1) os << '^' << exponent;
}

}  // namespace

std::string to_string(const LaurentPolynomial& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : p.terms()) {
    Integer magnitude = abs(c);
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    bool first = true;
    const bool unit_monomial = e.x_is_zero() && e.y_is_zero();
    if (magnitude != 1 || unit_monomial) {
      os << magnitude.get_str();
      first = false;
    }
    for (std::size_t i = 0; i < e.y().size(); ++i) write_factor(os, first, names.y, i + 1, e.y()[i]);
    for (std::size_t i = 0; i < e.x().size(); ++i) write_factor(os, first, names.x, i + 1, e.x()[i]);
  }
  return os.str();
}

namespace {

class PolyScanner {
 public:
  PolyScanner(std::string_view text, std::size_t x_rank, std::size_t y_rank, const VariableNames& names)
      : text_(text), x_rank_(x_rank), y_rank_(y_rank), names_(names) {}

  LaurentPolynomial parse() {
    LaurentPolynomial result(x_rank_, y_rank_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    parse_term(result, negate);
    for (;;) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_space();
      parse_term(result, op == '-');
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool match_name(const std::string& name) {
    if (text_.substr(pos_, name.size()) == name && pos_ + name.size() < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + name.size()]))) {
      pos_ += name.size();
      return true;
    }
    return false;
  }

  void parse_term(LaurentPolynomial& result, bool negate) {
    Integer coef = 1;
    ExponentVector e(x_rank_, y_rank_);
    bool seen_coef = false;
    for (;;) {
      skip_space();
      if (at_end()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        if (seen_coef) fail("repeated coefficient");
        coef = Integer(digits());
        seen_coef = true;
      } else {
        // Longer prefixes first so that e.g. "u" and "uu" do not shadow each other.
        bool is_y;
        if (names_.y.size() >= names_.x.size()) {
          if (match_name(names_.y)) is_y = true;
          else if (match_name(names_.x)) is_y = false;
          else fail("expected a coefficient or a variable");
        } else {
          if (match_name(names_.x)) is_y = false;
          else if (match_name(names_.y)) is_y = true;
          else fail("expected a coefficient or a variable");
        }
        unsigned long index = std::stoul(digits());
        int exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          bool neg = false;
          if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
          }
          exponent = std::stoi(digits());
          if (neg) exponent = -exponent;
        }
        auto& block = is_y ? e.y() : e.x();
        if (index == 0 || index > block.size()) fail("variable index out of range");
        block[index - 1] += exponent;
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!e.y_nonnegative()) fail("negative y-exponent");
    result.add_term(e, negate ? Integer(-coef) : coef);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t x_rank_;
  std::size_t y_rank_;
  const VariableNames& names_;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, std::size_t x_rank, std::size_t y_rank,
                                   const VariableNames& names) {
  PolyScanner scanner(text, x_rank, y_rank, names);
  return scanner.parse();
}

}  // namespace cck
