#pragma once

#include "newton_sobolev/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newton_sobolev {

// Exponent pair of the monomial x^a y^b.
struct Exponent {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  auto operator<=>(const Exponent&) const = default;
};

enum class Var { x, y };

// Direction of a polynomial shear: y_by_x substitutes y -> y + c x^m,
// x_by_y substitutes x -> x + c y^m.
enum class ShearAxis { y_by_x, x_by_y };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ExponentError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Sparse bivariate polynomial with exact rational coefficients.
// No stored coefficient is zero; the zero polynomial has no terms.
class Poly2 {
 public:
  using Terms = std::map<Exponent, Rat>;

  Poly2() = default;
  explicit Poly2(const Rat& constant);
  static Poly2 monomial(const Rat& coeff, std::uint32_t a, std::uint32_t b);
  static Poly2 variable(Var v);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Coefficient of x^a y^b (zero when absent).
  Rat coeff(std::uint32_t a, std::uint32_t b) const;
  std::vector<Exponent> support() const;

  // Smallest a + b over the support. Requires !is_zero().
  std::uint32_t min_total_degree() const;
  std::uint32_t max_degree(Var v) const;

  Poly2& operator+=(const Poly2& q);
  Poly2& operator-=(const Poly2& q);
  Poly2& operator*=(const Poly2& q);
  Poly2& operator*=(const Rat& c);

  friend Poly2 operator+(Poly2 p, const Poly2& q) { return p += q; }
  friend Poly2 operator-(Poly2 p, const Poly2& q) { return p -= q; }
  friend Poly2 operator*(Poly2 p, const Poly2& q) { return p *= q; }
  friend Poly2 operator*(Poly2 p, const Rat& c) { return p *= c; }
  friend Poly2 operator*(const Rat& c, Poly2 p) { return p *= c; }
  Poly2 operator-() const;
  Poly2 pow(unsigned n) const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

  Rat evaluate(const Rat& x, const Rat& y) const;
  double evaluate(double x, double y) const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  Terms terms_;
};

enum class ArithOp { add, sub, mul };
Poly2 arith(const Poly2& p, const Poly2& q, ArithOp op);

Poly2 parse_poly(std::string_view text);
std::string to_string(const Poly2& p);

Poly2 partial(const Poly2& p, Var v, unsigned order = 1);

// p_xx * p_yy - p_xy^2
Poly2 hessian_det(const Poly2& p);

Poly2 shear(const Poly2& p, const Rat& c, unsigned m, ShearAxis axis);

// Exchanges the roles of x and y.
Poly2 swap_xy(const Poly2& p);

}  // namespace newton_sobolev
