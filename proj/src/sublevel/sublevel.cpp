#include "newton_sobolev/sublevel.hpp"

#include "kernels.hpp"

#include <cmath>

namespace newton_sobolev {

std::string to_string(Sampler s) {
  switch (s) {
    case Sampler::grid: return "grid";
    case Sampler::halton: return "halton";
    case Sampler::prng: return "prng";
  }
  return "?";
}

Sampler parse_sampler(const std::string& s) {
  for (auto v : {Sampler::grid, Sampler::halton, Sampler::prng})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown sampler '" + s + "'");
}

void SublevelConfig::validate() const {
  if (!(half_width > 0 && half_width <= 1)) throw std::invalid_argument("half_width must lie in (0, 1]");
  if (delta_min_exp < 2) throw std::invalid_argument("delta exponents must be >= 2 so that delta < 1/2");
  if (delta_min_exp >= delta_max_exp) throw std::invalid_argument("need delta_min_exp < delta_max_exp");
  if (delta_max_exp > 1000) throw std::invalid_argument("delta_max_exp too large");
  if (samples_per_rung == 0) throw std::invalid_argument("samples_per_rung must be positive");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!(fill_limit > 0 && fill_limit <= 1)) throw std::invalid_argument("fill_limit must lie in (0, 1]");
}

Measure sublevel_measure(const Poly2& g, double delta, const SublevelConfig& cfg, std::uint64_t stream) {
  if (!(delta > 0)) throw std::invalid_argument("sublevel_measure needs delta > 0");
  if (g.is_zero()) throw std::invalid_argument("sublevel_measure of the zero polynomial");
  kernels::CompiledPoly compiled(g);
  kernels::RungTask task{delta, cfg.half_width, cfg.samples_per_rung, cfg.sampler, cfg.seed, stream};
  Measure m;
  m.samples = kernels::effective_samples(task);
  m.hits = cfg.parallel ? kernels::count_hits_omp(compiled, task) : kernels::count_hits_serial(compiled, task);
  const double area = 4.0 * cfg.half_width * cfg.half_width;
  const double p = static_cast<double>(m.hits) / static_cast<double>(m.samples);
  m.estimate = area * p;
  m.standard_error = area * std::sqrt(p * (1.0 - p) / static_cast<double>(m.samples));
  return m;
}

SublevelEstimate estimate_growth(const Poly2& g, const SublevelConfig& cfg) {
  cfg.validate();
  SublevelEstimate est;
  const double area = 4.0 * cfg.half_width * cfg.half_width;
  for (int j = cfg.delta_min_exp; j <= cfg.delta_max_exp; ++j) {
    const double delta = std::ldexp(1.0, -j);
    Measure m = sublevel_measure(g, delta, cfg, static_cast<std::uint64_t>(j));
    Rung r{j, delta, m.estimate, m.standard_error, m.hits, false};
    r.used_in_fit = m.hits >= cfg.min_hits && m.estimate <= cfg.fill_limit * area;
    est.rungs.push_back(r);
  }

  auto collect = [&] {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : est.rungs)
      if (r.used_in_fit) pts.emplace_back(r.delta, r.measure);
    return pts;
  };
  auto pts = collect();
  if (pts.size() < 4) {
    // nothing left once the filled rungs drop out: fall back to every rung
    // that is populated but not saturated
    for (auto& r : est.rungs) r.used_in_fit = r.hits >= cfg.min_hits && r.measure < area;
    pts = collect();
  }
  est.fit = fit_growth(pts);
  return est;
}

bool VerificationReport::all_pass() const {
  for (const auto& t : targets)
    if (!t.pass) return false;
  return !targets.empty();
}

VerificationReport verify_indices(const Poly2& s, const AnalysisReport& report, const SublevelConfig& cfg) {
  cfg.validate();
  VerificationReport out;
  auto run = [&](const std::string& name, const Poly2& g, const std::optional<Rat>& exact) {
    TargetVerification t;
    t.target = name;
    t.exact = exact;
    try {
      t.detail = estimate_growth(g, cfg);
      t.estimate = t.detail.fit.eta_hat;
      if (exact) {
        t.deviation = std::abs(*t.estimate - to_double(*exact));
        t.pass = *t.deviation < cfg.tolerance;
      }
    } catch (const DegenerateFit& e) {
      t.error = e.what();
    }
    out.targets.push_back(std::move(t));
  };
  run("S", s, report.eta.value);
  run("H", report.hessian.is_zero() ? hessian_det(s) : report.hessian, report.eta_prime.value);
  return out;
}

}  // namespace newton_sobolev
