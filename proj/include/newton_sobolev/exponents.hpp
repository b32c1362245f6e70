#pragma once

#include "newton_sobolev/newton.hpp"
#include "newton_sobolev/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace newton_sobolev {

// Standing hypotheses on the surface S: S(0,0) = 0, grad S(0,0) = 0,
// H(0,0) = 0, and neither S nor H identically zero.
struct Assumptions {
  bool s_zero_at_origin = false;
  bool gradient_zero = false;
  bool hessian_zero_at_origin = false;
  bool hessian_not_identically_zero = false;
  bool s_not_identically_zero = false;

  bool all() const {
    return s_zero_at_origin && gradient_zero && hessian_zero_at_origin && hessian_not_identically_zero &&
           s_not_identically_zero;
  }
  // Names of the failing flags, in declaration order.
  std::vector<std::string> failed() const;
  friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

Assumptions check_assumptions(const Poly2& s);

enum class Regime { Thm11Sharp, Thm12Case1, Thm12Case2, Undetermined };
std::string to_string(Regime r);
Regime parse_regime(const std::string& s);

enum class TriState { Yes, No, Unknown };
std::string to_string(TriState t);
TriState parse_tristate(const std::string& s);

struct SharpnessVerdict {
  TriState thm11_sharp = TriState::Unknown;
  TriState thm13_sharp = TriState::Unknown;
  std::vector<std::string> reasons;
};

struct AnalysisConfig {
  GrowthConfig growth;
};

struct AnalysisReport {
  Poly2 s;
  Poly2 hessian;
  GrowthIndex eta;
  GrowthIndex eta_prime;
  // Newton data of S and H themselves, before any adapted shear.
  PolygonCondition s_polygon;
  PolygonCondition h_polygon;
  std::optional<Rat> eta1;
  Regime regime = Regime::Undetermined;
  Assumptions assumptions;
  SharpnessVerdict sharpness;
  RootField field = RootField::complex;
};

class UndeterminedIndex : public std::runtime_error {
 public:
  UndeterminedIndex(const std::string& what, AnalysisReport partial)
      : std::runtime_error(what), report_(std::move(partial)) {}
  const AnalysisReport& report() const noexcept { return report_; }

 private:
  AnalysisReport report_;
};

class HessianIdenticallyZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// 2x / (1 + 2x): the Sobolev height contributed by the Hessian index.
Rat hessian_height(const Rat& eta_prime);

GrowthIndex hessian_index(const Poly2& s, const AnalysisConfig& cfg = {});

// Throws AssumptionViolated when a hypothesis fails, and UndeterminedIndex
// (carrying the partial report) when either growth index is undetermined.
AnalysisReport analyze(const Poly2& s, const AnalysisConfig& cfg = {});

// Same as analyze but returns the partial report instead of throwing
// UndeterminedIndex.
AnalysisReport analyze_partial(const Poly2& s, const AnalysisConfig& cfg = {});

SharpnessVerdict sharpness_verdict(const Poly2& s, const AnalysisReport& report);

}  // namespace newton_sobolev
