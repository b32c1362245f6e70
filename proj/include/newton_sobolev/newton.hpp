#pragma once

#include "newton_sobolev/poly.hpp"
#include "newton_sobolev/rational.hpp"
#include "newton_sobolev/unipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace newton_sobolev {

class ZeroPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EdgeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AssumptionViolated : public std::domain_error {
 public:
  AssumptionViolated(const std::string& what, std::vector<std::string> flags)
      : std::domain_error(what), flags_(std::move(flags)) {}
  const std::vector<std::string>& flags() const noexcept { return flags_; }

 private:
  std::vector<std::string> flags_;
};

struct Point {
  Rat a;
  Rat b;
  friend bool operator==(const Point&, const Point&) = default;
};

// Whether edge orders count complex zeros or only real ones.
enum class RootField { complex, real };

struct Edge {
  Point lo;  // larger a, smaller b
  Point hi;  // smaller a, larger b
  Rat m;     // the edge has slope -1/m
  UniPoly edge_poly;  // g_e(1, y)
  unsigned order = 0;       // complex zeros
  unsigned order_real = 0;  // real zeros only

  unsigned order_in(RootField f) const { return f == RootField::complex ? order : order_real; }
};

struct NewtonPolygon {
  std::vector<Point> vertices;  // strictly increasing b
  std::vector<Edge> compact_edges;  // edge i joins vertices[i] and vertices[i + 1]
  Point vertical_ray_base;    // vertex with maximal b
  Point horizontal_ray_base;  // vertex with maximal a
  Rat d;                      // Newton distance
};

struct DiagonalHit {
  enum class Kind { Vertex, CompactEdgeInterior, VerticalRayInterior, HorizontalRayInterior };
  Kind kind = Kind::Vertex;
  std::optional<std::size_t> edge;  // index into compact_edges
};

std::string to_string(DiagonalHit::Kind k);
DiagonalHit::Kind parse_hit_kind(const std::string& s);

NewtonPolygon newton_polygon(const Poly2& p);
Rat newton_distance(const NewtonPolygon& np);
DiagonalHit diagonal_classification(const NewtonPolygon& np);

// g_e(1, y) of an edge of newton_polygon(p).
UniPoly edge_polynomial(const Poly2& p, const Edge& e);

// Maximum multiplicity of a zero y != 0 of u (0 when there is none).
unsigned edge_order(const UniPoly& u, RootField field);

struct ShearStep {
  Rat c;
  unsigned m = 1;
  ShearAxis axis = ShearAxis::y_by_x;
  friend bool operator==(const ShearStep&, const ShearStep&) = default;
};

struct GrowthConfig {
  RootField field = RootField::complex;
  unsigned max_shears = 32;
};

enum class GrowthMethod { NewtonDistance, ShearAdapted, Undetermined };
std::string to_string(GrowthMethod m);
GrowthMethod parse_growth_method(const std::string& s);

// Growth index of g: the exponent of the sublevel measure m{|g| < delta}.
struct GrowthIndex {
  std::optional<Rat> value;
  GrowthMethod method = GrowthMethod::Undetermined;
  // Newton distance and diagonal hit of the polynomial the value was read
  // from (after shears, when any were applied).
  Rat distance;
  DiagonalHit::Kind hit = DiagonalHit::Kind::Vertex;
  std::vector<ShearStep> shears;
  // Present when the hit is a compact edge interior.
  std::optional<unsigned> edge_order;
  std::optional<bool> condition_oe_le_d;
  Poly2 adapted;
};

GrowthIndex growth_index(const Poly2& p, const GrowthConfig& cfg = {});

// True when the diagonal meets N(p) at a vertex, on a ray, or inside a
// compact edge e with o(e) <= d(p).
struct PolygonCondition {
  DiagonalHit::Kind hit;
  Rat distance;
  std::optional<unsigned> edge_order;
  bool holds;
};
PolygonCondition polygon_condition(const Poly2& p, RootField field);

}  // namespace newton_sobolev
