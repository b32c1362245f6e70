#pragma once

#include "newton_sobolev/exponents.hpp"
#include "newton_sobolev/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace newton_sobolev {

struct RPoint {
  Rat x;
  Rat y;
  friend bool operator==(const RPoint&, const RPoint&) = default;
};

enum class Theorem { T11, T12c1, T12c2, T13, T14, ISaSe };
// (1/p, s) or (1/p, 1/q)
enum class Plane { SobolevPlane, LebesguePlane };

std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& s);
std::string to_string(Plane p);
Plane parse_plane(const std::string& s);

// Convex polygon, vertices in theorem order starting at (0,0). Sobolev-plane
// regions run left to right across the top (clockwise); their images in the
// Lebesgue plane are counterclockwise.
struct RegionPolygon {
  std::vector<RPoint> vertices;
  Theorem theorem = Theorem::T11;
  Plane plane = Plane::SobolevPlane;
  bool interior_only = true;
};

class UndeterminedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class InvalidExponents : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NonConvexRegion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Trapezoid under y = eta1 between y = 2x and y = 2 - 2x.
RegionPolygon theorem11_region(const Rat& eta1);
// Polygon for 2eta'/(1+2eta') < eta; the case follows eta <= 1/2.
RegionPolygon theorem12_region(const Rat& eta, const Rat& eta_prime);
// Trapezoid bounded by y = x, y = x - eta/(eta+1), y = x/3, y = 3x - 2.
RegionPolygon theorem13_region(const Rat& eta);
RegionPolygon theorem14_region(const Rat& eta, const Rat& eta_prime);

RegionPolygon sobolev_region(const AnalysisReport& report);
RegionPolygon lebesgue_region(const AnalysisReport& report);

// (x, y) -> ((x + y)/(y + 1), x/(y + 1))
RPoint projective_map(const RPoint& pt);
RegionPolygon projective_image(const RegionPolygon& sobolev, Theorem as);

// Comparison polygon for convex finite-line-type surfaces with Newton
// vertices (a, 0) and (0, b); a, b even with 2 <= b <= a.
RegionPolygon isase_region(long a, long b);

// closed = false tests the open interior.
bool contains(const RegionPolygon& region, const RPoint& pt, bool closed = false);

// Twice the signed area (positive for counterclockwise).
Rat signed_area2(const RegionPolygon& region);
bool is_strictly_convex(const RegionPolygon& region);

}  // namespace newton_sobolev
