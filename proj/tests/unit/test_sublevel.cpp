#include "generators.hpp"

#include "newton_sobolev/exponents.hpp"
#include "newton_sobolev/sublevel.hpp"
#include "sublevel/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace newton_sobolev;

namespace {

// Closed-form measures of {|g| < delta} on [-r, r]^2.
double band_measure(double delta, double r) { return 4.0 * r * std::sqrt(delta); }                       // y^2
double product_measure(double delta, double r) { return 4.0 * (delta + delta * std::log(r * r / delta)); }  // xy
double xy2_measure(double delta, double r) { return 4.0 * (2.0 * std::sqrt(delta * r) - delta / r); }       // x y^2

SublevelConfig small_config(std::uint64_t samples = std::uint64_t{1} << 18) {
  SublevelConfig cfg;
  cfg.samples_per_rung = samples;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  SublevelConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.delta_min_exp = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.delta_max_exp = cfg.delta_min_exp;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.half_width = 2;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(parse_sampler("halton") == Sampler::halton);
  CHECK_THROWS(parse_sampler("sobol"));
}

TEST_CASE("serial and OpenMP kernels count identically") {
  for (const char* text : {"y^4 + y^2*x^4 + x^8", "x*y", "-8*y + 8*x^2", "y^3 + x*y^3"}) {
    kernels::CompiledPoly g(parse_poly(text));
    for (Sampler s : {Sampler::prng, Sampler::halton, Sampler::grid}) {
      for (int j : {4, 9, 15}) {
        kernels::RungTask task{std::ldexp(1.0, -j), 0.25, (std::uint64_t{1} << 17) + 12345, s, 7,
                               static_cast<std::uint64_t>(j)};
        CHECK(kernels::count_hits_serial(g, task) == kernels::count_hits_omp(g, task));
      }
    }
  }
  kernels::RungTask grid{0.1, 0.25, 1000, Sampler::grid, 7, 0};
  CHECK(kernels::effective_samples(grid) == 961);
}

TEST_CASE("compiled evaluation matches the exact polynomial") {
  Poly2 p = parse_poly("3/2*x^3*y - y^4 + 7*x^2 - 1/3");
  kernels::CompiledPoly c(p);
  std::vector<double> xp(c.max_a + 1), yp(c.max_b + 1);
  for (double x : {-0.2, 0.0, 0.13})
    for (double y : {-0.24, 0.05})
      CHECK(c.eval(x, y, xp.data(), yp.data()) == doctest::Approx(p.evaluate(x, y)).epsilon(1e-12));
}

TEST_CASE("seeds are deterministic and select streams") {
  Poly2 g = parse_poly("y^2 - x^3");
  auto cfg = small_config();
  auto a = sublevel_measure(g, 1e-3, cfg, 5);
  auto b = sublevel_measure(g, 1e-3, cfg, 5);
  CHECK(a.hits == b.hits);
  CHECK(a.estimate == b.estimate);
  CHECK(sublevel_measure(g, 1e-3, cfg, 6).hits != a.hits);
  cfg.seed = 8;
  CHECK(sublevel_measure(g, 1e-3, cfg, 5).hits != a.hits);
}

TEST_CASE("grid measures are nested") {
  Poly2 g = parse_poly("y^4 + y^2*x^4 + x^8");
  auto cfg = small_config(1 << 16);
  cfg.sampler = Sampler::grid;
  double prev = 1e300;
  for (int j = 4; j <= 20; ++j) {
    auto m = sublevel_measure(g, std::ldexp(1.0, -j), cfg);
    CHECK(m.estimate <= prev);
    CHECK(m.estimate >= 0);
    CHECK(m.estimate <= 0.25);
    prev = m.estimate;
  }
}

TEST_CASE("prng measures agree with closed forms within 3 standard errors") {
  struct Oracle {
    const char* poly;
    std::function<double(double, double)> measure;
    int j_lo, j_hi;
  };
  const double r = 0.25;
  const double area = 4 * r * r;
  auto cfg = small_config();
  for (const auto& o : {Oracle{"y^2", band_measure, 5, 20}, Oracle{"x*y", product_measure, 5, 20},
                        Oracle{"x*y^2", xy2_measure, 7, 20}}) {
    Poly2 g = parse_poly(o.poly);
    for (int j = o.j_lo; j <= o.j_hi; ++j) {
      double delta = std::ldexp(1.0, -j);
      double exact = o.measure(delta, r);
      double p = exact / area;
      double sigma = area * std::sqrt(p * (1 - p) / static_cast<double>(cfg.samples_per_rung));
      auto m = sublevel_measure(g, delta, cfg, static_cast<std::uint64_t>(j));
      INFO(o.poly << " j=" << j);
      CHECK(std::abs(m.estimate - exact) <= 3 * sigma);
    }
  }
}

TEST_CASE("fit recovers exponents from closed-form ladders") {
  std::vector<std::pair<double, double>> band, product;
  for (int j = 4; j <= 20; ++j) band.emplace_back(std::ldexp(1.0, -j), band_measure(std::ldexp(1.0, -j), 0.25));
  for (int j = 40; j <= 100; ++j)
    product.emplace_back(std::ldexp(1.0, -j), product_measure(std::ldexp(1.0, -j), 0.25));
  auto fb = fit_growth(band);
  CHECK(fb.eta_hat == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(fb.k_hat) < 1e-9);
  CHECK(fb.k_rounded == 0);
  auto fp = fit_growth(product);
  CHECK(std::abs(fp.eta_hat - 1) < 0.03);
  CHECK(std::abs(fp.k_hat - 1) < 0.15);
  CHECK(fp.k_rounded == 1);

  std::vector<std::pair<double, double>> few(band.begin(), band.begin() + 3);
  CHECK_THROWS_AS(fit_growth(few), DegenerateFit);
  auto bad = band;
  bad[0].second = 0;
  CHECK_THROWS_AS(fit_growth(bad), DegenerateFit);
}

TEST_CASE("estimated exponents") {
  auto cfg = small_config();
  auto band = estimate_growth(parse_poly("y^2"), cfg);
  CHECK(std::abs(band.fit.eta_hat - 0.5) < 0.05);
  CHECK(band.rungs.size() == 17);

  // scaling g by 2 only shifts the constant
  auto g = estimate_growth(parse_poly("y^3 + x*y^3"), cfg);
  auto g2 = estimate_growth(parse_poly("2*y^3 + 2*x*y^3"), cfg);
  CHECK(std::abs(g.fit.eta_hat - 1.0 / 3) < 0.05);
  CHECK(std::abs(g.fit.eta_hat - g2.fit.eta_hat) < 0.05);

  // too few populated rungs
  auto tiny = cfg;
  tiny.samples_per_rung = 64;
  CHECK_THROWS_AS(estimate_growth(parse_poly("x^6*y^6"), tiny), DegenerateFit);
}

TEST_CASE("verification reports both targets") {
  Poly2 s = parse_poly("y^3 + x*y^3");
  auto report = analyze(s);
  auto v = verify_indices(s, report, small_config());
  REQUIRE(v.targets.size() == 2);
  CHECK(v.targets[0].target == "S");
  CHECK(v.targets[1].target == "H");
  CHECK(v.targets[0].exact == make_rat(1, 3));
  CHECK(v.targets[0].pass);
  CHECK(v.all_pass() == (v.targets[0].pass && v.targets[1].pass));
}
