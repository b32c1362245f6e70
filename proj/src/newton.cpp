#include "newton_sobolev/newton.hpp"

#include <algorithm>

namespace newton_sobolev {

std::string to_string(DiagonalHit::Kind k) {
  switch (k) {
    case DiagonalHit::Kind::Vertex: return "Vertex";
    case DiagonalHit::Kind::CompactEdgeInterior: return "CompactEdgeInterior";
    case DiagonalHit::Kind::VerticalRayInterior: return "VerticalRayInterior";
    case DiagonalHit::Kind::HorizontalRayInterior: return "HorizontalRayInterior";
  }
  return "?";
}

DiagonalHit::Kind parse_hit_kind(const std::string& s) {
  for (auto k : {DiagonalHit::Kind::Vertex, DiagonalHit::Kind::CompactEdgeInterior,
                 DiagonalHit::Kind::VerticalRayInterior, DiagonalHit::Kind::HorizontalRayInterior})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown diagonal hit kind '" + s + "'");
}

std::string to_string(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::NewtonDistance: return "NewtonDistance";
    case GrowthMethod::ShearAdapted: return "ShearAdapted";
    case GrowthMethod::Undetermined: return "Undetermined";
  }
  return "?";
}

GrowthMethod parse_growth_method(const std::string& s) {
  for (auto m : {GrowthMethod::NewtonDistance, GrowthMethod::ShearAdapted, GrowthMethod::Undetermined})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown growth method '" + s + "'");
}

namespace {

// Cross product of (q - o) and (r - o).
Rat cross(const Point& o, const Point& q, const Point& r) {
  return (q.a - o.a) * (r.b - o.b) - (q.b - o.b) * (r.a - o.a);
}

// Lattice-supported part of p on the segment lo--hi, read as g_e(1, y).
UniPoly restrict_to_edge(const Poly2& p, const Point& lo, const Point& hi, const Rat& m) {
  const Rat level = lo.a + m * lo.b;
  std::vector<Rat> coeffs(to_int64(hi.b) + 1);
  for (const auto& [e, c] : p.terms()) {
    Rat a(e.a), b(e.b);
    if (b < lo.b || b > hi.b) continue;
    if (a + m * b != level) continue;
    coeffs[e.b] = c;
  }
  return UniPoly(std::move(coeffs));
}

// Same edge read as g_e(x, 1).
UniPoly restrict_to_edge_in_x(const Poly2& p, const Point& lo, const Point& hi, const Rat& m) {
  const Rat level = lo.a + m * lo.b;
  std::vector<Rat> coeffs(to_int64(lo.a) + 1);
  for (const auto& [e, c] : p.terms()) {
    Rat a(e.a), b(e.b);
    if (b < lo.b || b > hi.b) continue;
    if (a + m * b != level) continue;
    coeffs[e.a] = c;
  }
  return UniPoly(std::move(coeffs));
}

struct DiagonalLocation {
  Rat d;
  DiagonalHit hit;
};

DiagonalLocation locate_diagonal(const std::vector<Point>& v) {
  using K = DiagonalHit::Kind;
  const Point& first = v.front();  // minimal b
  const Point& last = v.back();    // minimal a
  if (first.a <= first.b) {
    if (first.a == first.b) return {first.a, {K::Vertex, std::nullopt}};
    return {first.b, {K::HorizontalRayInterior, std::nullopt}};
  }
  if (last.b <= last.a) {
    if (last.a == last.b) return {last.a, {K::Vertex, std::nullopt}};
    return {last.a, {K::VerticalRayInterior, std::nullopt}};
  }
  // first lies below the diagonal, last above: walk the chain.
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Point& p = v[i + 1];
    if (p.a == p.b) return {p.a, {K::Vertex, std::nullopt}};
    if (p.a < p.b) {
      const Point& q = v[i];
      Rat gap_q = q.a - q.b;  // > 0
      Rat gap_p = p.a - p.b;  // < 0
      Rat t = gap_q / (gap_q - gap_p);
      return {q.a + t * (p.a - q.a), {K::CompactEdgeInterior, i}};
    }
  }
  throw std::logic_error("diagonal does not cross the Newton boundary");
}

}  // namespace

NewtonPolygon newton_polygon(const Poly2& p) {
  if (p.is_zero()) throw ZeroPolynomial("Newton polygon of the zero polynomial");
  // support is sorted by (a, b); keep the staircase of strictly decreasing b
  std::vector<Point> stair;
  for (const auto& e : p.support()) {
    Rat a(e.a), b(e.b);
    if (!stair.empty() && b >= stair.back().b) continue;
    stair.push_back({a, b});
  }
  // lower convex hull, left to right
  std::vector<Point> hull;
  for (const auto& pt : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  NewtonPolygon np;
  np.vertices.assign(hull.rbegin(), hull.rend());
  for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    Edge e;
    e.lo = np.vertices[i];
    e.hi = np.vertices[i + 1];
    e.m = (e.lo.a - e.hi.a) / (e.hi.b - e.lo.b);
    e.edge_poly = restrict_to_edge(p, e.lo, e.hi, e.m);
    e.order = edge_order(e.edge_poly, RootField::complex);
    e.order_real = edge_order(e.edge_poly, RootField::real);
    np.compact_edges.push_back(std::move(e));
  }
  np.horizontal_ray_base = np.vertices.front();
  np.vertical_ray_base = np.vertices.back();
  np.d = locate_diagonal(np.vertices).d;
  return np;
}

Rat newton_distance(const NewtonPolygon& np) { return locate_diagonal(np.vertices).d; }

DiagonalHit diagonal_classification(const NewtonPolygon& np) {
  return locate_diagonal(np.vertices).hit;
}

UniPoly edge_polynomial(const Poly2& p, const Edge& e) {
  NewtonPolygon np = newton_polygon(p);
  for (const auto& own : np.compact_edges)
    if (own.lo == e.lo && own.hi == e.hi) return restrict_to_edge(p, e.lo, e.hi, own.m);
  throw EdgeMismatch("edge (" + to_string(e.lo.a) + "," + to_string(e.lo.b) + ")-(" + to_string(e.hi.a) +
                     "," + to_string(e.hi.b) + ") is not an edge of N(" + to_string(p) + ")");
}

unsigned edge_order(const UniPoly& u, RootField field) {
  if (u.is_zero()) throw ZeroPolynomial("edge_order of the zero polynomial");
  UniPoly core = strip_zero_root(u).second;
  auto classes = squarefree_decomposition(core);
  for (std::size_t i = classes.size(); i-- > 0;) {
    const UniPoly& f = classes[i];
    if (f.degree() <= 0) continue;
    if (field == RootField::complex) return static_cast<unsigned>(i + 1);
    if (real_root_count(f, std::nullopt, std::nullopt) > 0) return static_cast<unsigned>(i + 1);
  }
  return 0;
}

namespace {

// Picks the nonzero rational root of u with the largest multiplicity, if that
// multiplicity exceeds d.
std::optional<Rat> offending_root(const UniPoly& u, const Rat& d) {
  auto roots = rational_roots(u);
  if (!roots) return std::nullopt;
  std::optional<Rat> best;
  unsigned best_mult = 0;
  for (const auto& r : *roots) {
    if (r == 0) continue;
    unsigned k = root_multiplicity(u, r);
    if (Rat(k) > d && k > best_mult) {
      best = r;
      best_mult = k;
    }
  }
  return best;
}

}  // namespace

GrowthIndex growth_index(const Poly2& p, const GrowthConfig& cfg) {
  if (p.is_zero()) throw ZeroPolynomial("growth index of the zero polynomial");
  if (p.coeff(0, 0) != 0)
    throw AssumptionViolated("growth index requires g(0,0) = 0", {"zero_at_origin"});

  GrowthIndex out;
  Poly2 q = p;
  for (;;) {
    NewtonPolygon np = newton_polygon(q);
    DiagonalLocation loc = locate_diagonal(np.vertices);
    out.distance = loc.d;
    out.hit = loc.hit.kind;
    out.adapted = q;
    out.edge_order.reset();
    out.condition_oe_le_d.reset();
    const GrowthMethod readable = out.shears.empty() ? GrowthMethod::NewtonDistance : GrowthMethod::ShearAdapted;

    if (loc.hit.kind != DiagonalHit::Kind::CompactEdgeInterior) {
      out.value = Rat(1) / loc.d;
      out.method = readable;
      return out;
    }
    const Edge& e = np.compact_edges[*loc.hit.edge];
    const unsigned o = e.order_in(cfg.field);
    out.edge_order = o;
    out.condition_oe_le_d = Rat(o) <= loc.d;
    if (*out.condition_oe_le_d) {
      out.value = Rat(1) / loc.d;
      out.method = readable;
      return out;
    }

    out.value.reset();
    out.method = GrowthMethod::Undetermined;
    if (out.shears.size() >= cfg.max_shears) return out;

    // o(e) > d only happens for slopes -1/m with m or 1/m an integer.
    ShearStep step;
    std::optional<Rat> root;
    if (is_integer(e.m)) {
      step.axis = ShearAxis::y_by_x;
      step.m = static_cast<unsigned>(to_int64(e.m));
      root = offending_root(e.edge_poly, loc.d);
    } else if (Rat inv = Rat(1) / e.m; is_integer(inv)) {
      step.axis = ShearAxis::x_by_y;
      step.m = static_cast<unsigned>(to_int64(inv));
      root = offending_root(restrict_to_edge_in_x(q, e.lo, e.hi, e.m), loc.d);
    }
    if (!root) return out;
    step.c = *root;
    q = shear(q, step.c, step.m, step.axis);
    out.shears.push_back(step);
  }
}

PolygonCondition polygon_condition(const Poly2& p, RootField field) {
  NewtonPolygon np = newton_polygon(p);
  DiagonalLocation loc = locate_diagonal(np.vertices);
  PolygonCondition pc{loc.hit.kind, loc.d, std::nullopt, true};
  if (loc.hit.kind == DiagonalHit::Kind::CompactEdgeInterior) {
    unsigned o = np.compact_edges[*loc.hit.edge].order_in(field);
    pc.edge_order = o;
    pc.holds = Rat(o) <= loc.d;
  }
  return pc;
}

}  // namespace newton_sobolev
