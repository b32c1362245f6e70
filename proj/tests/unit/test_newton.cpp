#include "generators.hpp"

#include "newton_sobolev/newton.hpp"
#include "newton_sobolev/unipoly.hpp"

#include <doctest.h>

using namespace newton_sobolev;
using Kind = DiagonalHit::Kind;

namespace {

UniPoly U(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

// Product of (y - r)^k over the given roots.
UniPoly from_roots(const std::vector<std::pair<Rat, unsigned>>& roots) {
  UniPoly p(std::vector<Rat>{1});
  for (const auto& [r, k] : roots)
    for (unsigned i = 0; i < k; ++i) p = p * UniPoly(std::vector<Rat>{-r, 1});
  return p;
}

}  // namespace

TEST_CASE("univariate division, gcd and square-free parts") {
  UniPoly p = from_roots({{1, 2}, {-2, 1}});
  auto [q, r] = divmod(p, U({-1, 1}));
  CHECK(r.is_zero());
  CHECK(q == from_roots({{1, 1}, {-2, 1}}));
  CHECK(gcd(p, p.derivative()) == U({-1, 1}));
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());

  auto sf = squarefree_decomposition(from_roots({{3, 1}, {5, 3}}));
  REQUIRE(sf.size() == 3);
  CHECK(sf[0] == U({-3, 1}));
  CHECK(sf[1].degree() == 0);
  CHECK(sf[2] == U({-5, 1}));

  auto [k, rest] = strip_zero_root(U({0, 0, 1, 1}));
  CHECK(k == 2);
  CHECK(rest == U({1, 1}));
}

TEST_CASE("Sturm real root counts") {
  CHECK(real_root_count(U({1, 0, 1}), std::nullopt, std::nullopt) == 0);
  CHECK(real_root_count(U({-2, 0, 1}), Rat(0), std::nullopt) == 1);
  CHECK(real_root_count(U({1, 1, 1, 1}), std::nullopt, Rat(0)) == 1);
  CHECK(real_root_count(U({-2, 0, 1}), std::nullopt, std::nullopt) == 2);
  CHECK_THROWS_AS(real_root_count(U({1, 2, 1}), std::nullopt, std::nullopt), NotSquareFree);
}

TEST_CASE("rational roots") {
  auto roots = rational_roots(from_roots({{make_rat(3, 2), 1}, {-4, 2}, {0, 1}}) * U({1, 0, 1}));
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rat>{-4, 0, make_rat(3, 2)});
  CHECK(root_multiplicity(from_roots({{-4, 2}}), -4) == 2);
  CHECK(root_multiplicity(from_roots({{-4, 2}}), 4) == 0);
}

TEST_CASE("edge orders") {
  CHECK(edge_order(U({1, 1, 1, 1}), RootField::complex) == 1);
  CHECK(edge_order(U({1, 1, 1, 1}), RootField::real) == 1);
  CHECK(edge_order(U({1, 0, 2, 0, 1}), RootField::complex) == 2);
  CHECK(edge_order(U({1, 0, 2, 0, 1}), RootField::real) == 0);
  CHECK(edge_order(U({0, 0, 0, 0, 0, 1}), RootField::complex) == 0);
  CHECK(edge_order(U({0, 0, 0, 0, 0, 1}), RootField::real) == 0);
  CHECK_THROWS_AS(edge_order(UniPoly(), RootField::complex), ZeroPolynomial);
}

TEST_CASE("Newton polygons of the worked examples") {
  auto np = newton_polygon(parse_poly("y^4 + y^2*x^4 + x^8"));
  REQUIRE(np.vertices.size() == 2);
  CHECK(np.vertices[0] == Point{8, 0});
  CHECK(np.vertices[1] == Point{0, 4});
  REQUIRE(np.compact_edges.size() == 1);
  CHECK(np.compact_edges[0].m == 2);
  CHECK(np.d == make_rat(8, 3));
  CHECK(diagonal_classification(np).kind == Kind::CompactEdgeInterior);
  CHECK(edge_polynomial(parse_poly("y^4 + y^2*x^4 + x^8"), np.compact_edges[0]) == U({1, 0, 1, 0, 1}));

  auto np2 = newton_polygon(parse_poly("y^3 + y^2*x + y*x^2 + x^3"));
  REQUIRE(np2.compact_edges.size() == 1);
  CHECK(np2.compact_edges[0].m == 1);
  CHECK(np2.compact_edges[0].edge_poly == U({1, 1, 1, 1}));

  auto np3 = newton_polygon(parse_poly("y^3 + x*y^3"));
  CHECK(np3.vertices == std::vector<Point>{{0, 3}});
  CHECK(np3.compact_edges.empty());
  CHECK(np3.d == 3);
  CHECK(diagonal_classification(np3).kind == Kind::HorizontalRayInterior);

  CHECK(newton_polygon(parse_poly("y^2 - 2*x^3*y + x^6")).d == make_rat(3, 2));
  auto mono = newton_polygon(parse_poly("x^2*y^2"));
  CHECK(mono.d == 2);
  CHECK(diagonal_classification(mono).kind == Kind::Vertex);
  CHECK(diagonal_classification(newton_polygon(parse_poly("x^5*y"))).kind == Kind::VerticalRayInterior);

  Poly2 xy = parse_poly("x^3*y + x*y^3");
  CHECK(edge_polynomial(xy, newton_polygon(xy).compact_edges[0]) == U({0, 1, 0, 1}));
  CHECK_THROWS_AS(edge_polynomial(parse_poly("x^4 + y^4"), newton_polygon(xy).compact_edges[0]), EdgeMismatch);
  CHECK_THROWS_AS(newton_polygon(Poly2()), ZeroPolynomial);
}

TEST_CASE("growth index") {
  auto g1 = growth_index(parse_poly("y^4 + y^2*x^4 + x^8"));
  CHECK(g1.value == make_rat(3, 8));
  CHECK(g1.method == GrowthMethod::NewtonDistance);
  CHECK(g1.condition_oe_le_d == true);

  auto g4 = growth_index(parse_poly("y^2 - 2*x^2*y + x^4"));
  CHECK(g4.value == make_rat(1, 2));
  CHECK(g4.method == GrowthMethod::ShearAdapted);
  REQUIRE(g4.shears.size() == 1);
  CHECK(g4.shears[0] == ShearStep{1, 2, ShearAxis::y_by_x});
  CHECK(g4.adapted == parse_poly("y^2"));

  auto gx = growth_index(parse_poly("x^3 - 9*x^2*y^2 + 27*x*y^4 - 27*y^6"));
  CHECK(gx.value == make_rat(1, 3));
  CHECK(gx.method == GrowthMethod::ShearAdapted);
  REQUIRE(gx.shears.size() == 1);
  CHECK(gx.shears[0].axis == ShearAxis::x_by_y);

  // (y - x)^2 (y - 2x)^3: the order-3 edge root needs a shear
  Poly2 y = Poly2::variable(Var::y), x = Poly2::variable(Var::x);
  auto g5 = growth_index((y - x).pow(2) * (y - Rat(2) * x).pow(3) + Poly2::monomial(1, 9, 0));
  REQUIRE(g5.value);
  CHECK(g5.method == GrowthMethod::ShearAdapted);

  // ((1 - x) y - x)^2: the adapted coordinate y = x / (1 - x) is not a
  // polynomial, so every shear leaves another one to do
  auto gi = growth_index(parse_poly("y^2 + x^2*y^2 + x^2 - 2*x*y^2 - 2*x*y + 2*x^2*y"));
  CHECK(gi.shears.size() == 32);
  // o(e) = 2 = d: determined without a shear even though the roots are irrational
  CHECK(growth_index(parse_poly("y^4 - 4*x^2*y^2 + 4*x^4")).value == make_rat(1, 2));
  CHECK(gi.method == GrowthMethod::Undetermined);
  CHECK_FALSE(gi.value);

  CHECK(growth_index(parse_poly("y^3 + x*y^3")).value == make_rat(1, 3));
  CHECK_THROWS_AS(growth_index(parse_poly("1 + x")), AssumptionViolated);
  CHECK_THROWS_AS(growth_index(Poly2()), ZeroPolynomial);
}

TEST_CASE("property: edge_order complex >= real") {
  testgen::Gen g(201);
  for (int i = 0; i < testgen::kCases; ++i) {
    std::vector<std::pair<Rat, unsigned>> roots;
    int n = static_cast<int>(g.integer(0, 3));
    for (int k = 0; k < n; ++k) roots.emplace_back(g.rat(5, 3), static_cast<unsigned>(g.integer(1, 3)));
    UniPoly p = from_roots(roots) * g.nonzero_rat();
    // irreducible quadratics y^2 + c, c > 0, raised to random powers
    int q = static_cast<int>(g.integer(0, 2));
    for (int k = 0; k < q; ++k) {
      UniPoly quad(std::vector<Rat>{make_rat(g.integer(1, 9), g.integer(1, 4)), 0, 1});
      for (long e = g.integer(1, 3); e > 0; --e) p = p * quad;
    }
    unsigned c = edge_order(p, RootField::complex), r = edge_order(p, RootField::real);
    REQUIRE(c >= r);
    // oracle: the largest multiplicity among the planted nonzero roots
    unsigned planted_real = 0;
    std::map<Rat, unsigned> mult;
    for (const auto& [root, k] : roots) mult[root] += k;
    for (const auto& [root, k] : mult)
      if (root != 0) planted_real = std::max(planted_real, k);
    REQUIRE(r == planted_real);
  }
}

TEST_CASE("property: polygon invariants and eta <= 2/o") {
  testgen::Gen g(202);
  for (int i = 0; i < testgen::kCases; ++i) {
    auto o = static_cast<std::uint32_t>(g.integer(2, 6));
    Poly2 p = g.singular_poly(o);
    auto np = newton_polygon(p);
    // vertices come from the support, with strictly increasing b
    for (std::size_t v = 0; v < np.vertices.size(); ++v) {
      const auto& pt = np.vertices[v];
      REQUIRE(p.coeff(static_cast<std::uint32_t>(pt.a.get_num().get_ui()),
                      static_cast<std::uint32_t>(pt.b.get_num().get_ui())) != 0);
      if (v > 0) REQUIRE(np.vertices[v - 1].b < pt.b);
    }
    for (std::size_t e = 1; e < np.compact_edges.size(); ++e)
      REQUIRE(np.compact_edges[e - 1].m > np.compact_edges[e].m);
    // every support point lies on or above each edge line and inside the rays
    for (const auto& ex : p.support()) {
      REQUIRE(Rat(ex.b) >= np.vertices.front().b);
      REQUIRE(Rat(ex.a) >= np.vertices.back().a);
      for (const auto& e : np.compact_edges)
        REQUIRE(Rat(ex.a) + e.m * Rat(ex.b) >= e.lo.a + e.m * e.lo.b);
    }
    // (d, d) is on the boundary: inside every half plane, tight for one
    bool tight = false;
    for (const auto& e : np.compact_edges) {
      Rat lhs = np.d + e.m * np.d, rhs = e.lo.a + e.m * e.lo.b;
      REQUIRE(lhs >= rhs);
      tight = tight || lhs == rhs;
    }
    tight = tight || np.d == np.vertices.front().b || np.d == np.vertices.back().a;
    REQUIRE(tight);
    REQUIRE(np.d >= np.vertices.front().b);
    REQUIRE(np.d >= np.vertices.back().a);

    // coefficient scaling invariance
    auto scaled = newton_polygon(p * g.nonzero_rat());
    REQUIRE(scaled.vertices == np.vertices);
    REQUIRE(scaled.d == np.d);

    auto gi = growth_index(p);
    if (gi.value) REQUIRE(*gi.value <= Rat(2) / Rat(p.min_total_degree()));
    if (gi.method == GrowthMethod::NewtonDistance) REQUIRE(*gi.value == 1 / np.d);
    if (gi.method == GrowthMethod::Undetermined) REQUIRE_FALSE(gi.value);
  }
}

TEST_CASE("property: shear soundness") {
  testgen::Gen g(203);
  int adapted = 0;
  for (int i = 0; i < testgen::kCases; ++i) {
    // Q(x, y) = y^n + x^k + higher terms, then hide the adapted coordinate
    auto n = static_cast<std::uint32_t>(g.integer(2, 4));
    auto m = static_cast<unsigned>(g.integer(1, 4));
    auto k = static_cast<std::uint32_t>(m * n + g.integer(1, 5));
    Poly2 q = Poly2::monomial(g.nonzero_rat(), 0, n) + Poly2::monomial(g.nonzero_rat(), k, 0);
    q += Poly2::monomial(g.rat(), k, n);
    Rat c = g.nonzero_rat(5, 3);
    Poly2 s = shear(q, -c, m, ShearAxis::y_by_x);
    if (g.coin()) s = swap_xy(s);
    auto gi = growth_index(s);
    REQUIRE(gi.value);
    REQUIRE(*gi.value == growth_index(q).value);
    if (gi.method == GrowthMethod::ShearAdapted) {
      ++adapted;
      auto again = growth_index(gi.adapted);
      REQUIRE(again.method == GrowthMethod::NewtonDistance);
      REQUIRE(again.value == gi.value);
    }
  }
  CHECK(adapted > testgen::kCases / 2);
}
