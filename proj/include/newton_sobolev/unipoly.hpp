#pragma once

#include "newton_sobolev/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace newton_sobolev {

class NotSquareFree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense univariate polynomial over Q, coefficient i multiplies y^i.
// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat evaluate(const Rat& y) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const UniPoly& p, const Rat& c);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Quotient and remainder of p by nonzero d.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

// Divides out the factor y^k with k maximal; returns (k, quotient).
std::pair<unsigned, UniPoly> strip_zero_root(const UniPoly& p);

// Yun's algorithm: factors[i] is the monic square-free product of the
// irreducible factors of multiplicity i + 1. Requires p nonzero.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

// Bound of a real interval for root counting; nullopt means infinite.
using Bound = std::optional<Rat>;

// Number of distinct real roots of a square-free p in (lo, hi], counted with
// a Sturm sequence. lo = nullopt is -inf, hi = nullopt is +inf.
int real_root_count(const UniPoly& p, const Bound& lo, const Bound& hi);

// Rational roots of p found by the rational root theorem (distinct, sorted).
// Returns nullopt when the coefficients are too large to enumerate divisors.
std::optional<std::vector<Rat>> rational_roots(const UniPoly& p);

// Multiplicity of r as a root of p (0 when not a root). Requires p nonzero.
unsigned root_multiplicity(const UniPoly& p, const Rat& r);

std::string to_string(const UniPoly& p, char var = 'y');

}  // namespace newton_sobolev
