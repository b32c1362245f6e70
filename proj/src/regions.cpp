#include "newton_sobolev/regions.hpp"

namespace newton_sobolev {

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T11: return "T11";
    case Theorem::T12c1: return "T12c1";
    case Theorem::T12c2: return "T12c2";
    case Theorem::T13: return "T13";
    case Theorem::T14: return "T14";
    case Theorem::ISaSe: return "ISaSe";
  }
  return "?";
}

Theorem parse_theorem(const std::string& s) {
  for (auto t : {Theorem::T11, Theorem::T12c1, Theorem::T12c2, Theorem::T13, Theorem::T14, Theorem::ISaSe})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown theorem '" + s + "'");
}

std::string to_string(Plane p) { return p == Plane::SobolevPlane ? "SobolevPlane" : "LebesguePlane"; }

Plane parse_plane(const std::string& s) {
  if (s == "SobolevPlane") return Plane::SobolevPlane;
  if (s == "LebesguePlane") return Plane::LebesguePlane;
  throw std::invalid_argument("unknown plane '" + s + "'");
}

namespace {

Rat cross(const RPoint& o, const RPoint& a, const RPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Merges repeated vertices, drops collinear ones, and insists on convexity.
RegionPolygon finish(std::vector<RPoint> pts, Theorem t, Plane plane) {
  std::vector<RPoint> dedup;
  for (auto& p : pts)
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();

  bool changed = true;
  while (changed && dedup.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < dedup.size(); ++i) {
      const std::size_t n = dedup.size();
      if (cross(dedup[(i + n - 1) % n], dedup[i], dedup[(i + 1) % n]) == 0) {
        dedup.erase(dedup.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  RegionPolygon r{std::move(dedup), t, plane, true};
  if (r.vertices.size() < 3 || !is_strictly_convex(r))
    throw NonConvexRegion("region " + to_string(t) + " is not a convex polygon");
  return r;
}

}  // namespace

Rat signed_area2(const RegionPolygon& region) {
  const auto& v = region.vertices;
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

bool is_strictly_convex(const RegionPolygon& region) {
  const auto& v = region.vertices;
  const std::size_t n = v.size();
  if (n < 3) return false;
  int orient = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int s = sgn(cross(v[i], v[(i + 1) % n], v[(i + 2) % n]));
    if (s == 0) return false;
    if (orient == 0) orient = s;
    if (s != orient) return false;
  }
  // a star polygon could still turn consistently; its winding exceeds one
  return sgn(signed_area2(region)) == orient;
}

RegionPolygon theorem11_region(const Rat& eta1) {
  if (eta1 <= 0 || eta1 > 1) throw UndeterminedRegime("trapezoid height eta1 must lie in (0, 1]");
  return finish({{0, 0}, {eta1 / 2, eta1}, {1 - eta1 / 2, eta1}, {1, 0}}, Theorem::T11, Plane::SobolevPlane);
}

RegionPolygon theorem12_region(const Rat& eta, const Rat& eta_prime) {
  const Rat h = hessian_height(eta_prime);
  if (!(h < eta)) throw UndeterminedRegime("the two-index polygon needs 2eta'/(1+2eta') < eta");
  const RPoint left{h / 2, h}, right{1 - h / 2, h};
  if (eta <= make_rat(1, 2)) {
    // the upper edge sits at height eta, where s <= eta caps the region
    return finish({{0, 0}, left, {eta, eta}, {1 - eta, eta}, right, {1, 0}}, Theorem::T12c1, Plane::SobolevPlane);
  }
  return finish({{0, 0}, left, {make_rat(1, 2), eta}, right, {1, 0}}, Theorem::T12c2, Plane::SobolevPlane);
}

RegionPolygon theorem13_region(const Rat& eta) {
  if (eta <= 0) throw UndeterminedRegime("the Lebesgue trapezoid needs eta > 0");
  const Rat c = eta / (eta + 1);
  // y = x - c meets y = x/3 and y = 3x - 2
  RPoint lower{3 * c / 2, c / 2};
  RPoint upper{1 - c / 2, 1 - 3 * c / 2};
  return finish({{0, 0}, lower, upper, {1, 1}}, Theorem::T13, Plane::LebesguePlane);
}

RPoint projective_map(const RPoint& pt) {
  const Rat den = pt.y + 1;
  if (den == 0) throw PoleError("projective map has a pole at y = -1");
  return {(pt.x + pt.y) / den, pt.x / den};
}

RegionPolygon projective_image(const RegionPolygon& sobolev, Theorem as) {
  std::vector<RPoint> pts;
  for (const auto& v : sobolev.vertices) pts.push_back(projective_map(v));
  return finish(std::move(pts), as, Plane::LebesguePlane);
}

RegionPolygon theorem14_region(const Rat& eta, const Rat& eta_prime) {
  return projective_image(theorem12_region(eta, eta_prime), Theorem::T14);
}

RegionPolygon sobolev_region(const AnalysisReport& report) {
  switch (report.regime) {
    case Regime::Thm11Sharp: return theorem11_region(*report.eta1);
    case Regime::Thm12Case1:
    case Regime::Thm12Case2: return theorem12_region(*report.eta.value, *report.eta_prime.value);
    case Regime::Undetermined: break;
  }
  throw UndeterminedRegime("no Sobolev region: regime undetermined");
}

RegionPolygon lebesgue_region(const AnalysisReport& report) {
  switch (report.regime) {
    case Regime::Thm11Sharp: return theorem13_region(*report.eta.value);
    case Regime::Thm12Case1:
    case Regime::Thm12Case2: return theorem14_region(*report.eta.value, *report.eta_prime.value);
    case Regime::Undetermined: break;
  }
  throw UndeterminedRegime("no Lebesgue region: regime undetermined");
}

RegionPolygon isase_region(long a, long b) {
  if (a % 2 != 0 || b % 2 != 0 || b < 2 || b > a)
    throw InvalidExponents("isase exponents need even a, b with 2 <= b <= a (got " + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
  const Rat ia = make_rat(1, a), ib = make_rat(1, b);
  return finish({{0, 0}, {ia, 2 * ia}, {ib, ia + ib}, {1 - ib, ia + ib}, {1 - ia, 2 * ia}, {1, 0}},
                Theorem::ISaSe, Plane::SobolevPlane);
}

bool contains(const RegionPolygon& region, const RPoint& pt, bool closed) {
  const auto& v = region.vertices;
  const int orient = sgn(signed_area2(region));
  for (std::size_t i = 0; i < v.size(); ++i) {
    int s = sgn(cross(v[i], v[(i + 1) % v.size()], pt)) * orient;
    if (s < 0 || (s == 0 && !closed)) return false;
  }
  return true;
}

}  // namespace newton_sobolev
