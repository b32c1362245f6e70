#pragma once

#include "newton_sobolev/exponents.hpp"
#include "newton_sobolev/poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace newton_sobolev {

enum class Sampler { grid, halton, prng };
std::string to_string(Sampler s);
Sampler parse_sampler(const std::string& s);

struct SublevelConfig {
  double half_width = 0.25;  // V = [-r, r]^2
  int delta_min_exp = 4;     // delta = 2^-j for j in [delta_min_exp, delta_max_exp]
  int delta_max_exp = 20;
  std::uint64_t samples_per_rung = std::uint64_t{1} << 22;
  Sampler sampler = Sampler::prng;
  std::uint64_t seed = 7;
  double tolerance = 0.1;
  // Rungs whose sublevel set fills more than this share of V, or that
  // collect fewer than min_hits samples, stay out of the fit.
  double fill_limit = 0.25;
  std::uint64_t min_hits = 64;
  bool parallel = true;

  // Throws std::invalid_argument.
  void validate() const;
};

struct Measure {
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

struct Rung {
  int j = 0;
  double delta = 0;
  double measure = 0;
  double standard_error = 0;
  std::uint64_t hits = 0;
  bool used_in_fit = false;
};

class DegenerateFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GrowthFit {
  double eta_hat = 0;
  double k_hat = 0;
  // k_hat rounded to 0 or 1; empty when k_hat is too close to 1/2 to call.
  std::optional<int> k_rounded;
  double fit_residual = 0;  // RMS residual of log m
};

struct SublevelEstimate {
  std::vector<Rung> rungs;
  GrowthFit fit;
};

// Lebesgue measure of {(x, y) in V : |g(x, y)| < delta}. The stream index
// selects an independent deterministic substream of the seed.
Measure sublevel_measure(const Poly2& g, double delta, const SublevelConfig& cfg, std::uint64_t stream = 0);

// Least squares for log m = eta log(delta) + k log|log delta| + c over
// (delta, measure) pairs with 0 < delta < 1.
GrowthFit fit_growth(std::span<const std::pair<double, double>> rungs);

// Runs the delta ladder for g and fits the growth exponent.
SublevelEstimate estimate_growth(const Poly2& g, const SublevelConfig& cfg);

struct TargetVerification {
  std::string target;  // "S" or "H"
  std::optional<Rat> exact;
  std::optional<double> estimate;
  std::optional<double> deviation;
  bool pass = false;
  std::optional<std::string> error;
  SublevelEstimate detail;
};

struct VerificationReport {
  std::vector<TargetVerification> targets;
  bool all_pass() const;
};

VerificationReport verify_indices(const Poly2& s, const AnalysisReport& report, const SublevelConfig& cfg);

}  // namespace newton_sobolev
