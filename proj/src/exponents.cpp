#include "newton_sobolev/exponents.hpp"

#include <algorithm>

namespace newton_sobolev {

std::vector<std::string> Assumptions::failed() const {
  std::vector<std::string> out;
  if (!s_zero_at_origin) out.emplace_back("s_zero_at_origin");
  if (!gradient_zero) out.emplace_back("gradient_zero");
  if (!hessian_zero_at_origin) out.emplace_back("hessian_zero_at_origin");
  if (!hessian_not_identically_zero) out.emplace_back("hessian_not_identically_zero");
  if (!s_not_identically_zero) out.emplace_back("s_not_identically_zero");
  return out;
}

Assumptions check_assumptions(const Poly2& s) {
  Assumptions a;
  const Rat zero = 0;
  a.s_not_identically_zero = !s.is_zero();
  a.s_zero_at_origin = s.evaluate(zero, zero) == 0;
  a.gradient_zero = partial(s, Var::x).evaluate(zero, zero) == 0 && partial(s, Var::y).evaluate(zero, zero) == 0;
  Poly2 h = hessian_det(s);
  a.hessian_zero_at_origin = h.evaluate(zero, zero) == 0;
  a.hessian_not_identically_zero = !h.is_zero();
  return a;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Thm11Sharp: return "Thm11Sharp";
    case Regime::Thm12Case1: return "Thm12Case1";
    case Regime::Thm12Case2: return "Thm12Case2";
    case Regime::Undetermined: return "Undetermined";
  }
  return "?";
}

Regime parse_regime(const std::string& s) {
  for (auto r : {Regime::Thm11Sharp, Regime::Thm12Case1, Regime::Thm12Case2, Regime::Undetermined})
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown regime '" + s + "'");
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "Yes";
    case TriState::No: return "No";
    case TriState::Unknown: return "Unknown";
  }
  return "?";
}

TriState parse_tristate(const std::string& s) {
  for (auto t : {TriState::Yes, TriState::No, TriState::Unknown})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Rat hessian_height(const Rat& eta_prime) { return 2 * eta_prime / (1 + 2 * eta_prime); }

GrowthIndex hessian_index(const Poly2& s, const AnalysisConfig& cfg) {
  Poly2 h = hessian_det(s);
  if (h.is_zero()) throw HessianIdenticallyZero("Hessian determinant of " + to_string(s) + " vanishes identically");
  return growth_index(h, cfg.growth);
}

SharpnessVerdict sharpness_verdict(const Poly2& s, const AnalysisReport& report) {
  SharpnessVerdict v;
  if (!report.eta.value || !report.eta_prime.value) {
    v.reasons.emplace_back("growth index undetermined");
    return v;
  }
  const Rat& eta = *report.eta.value;
  const Rat height = hessian_height(*report.eta_prime.value);
  const bool thm11 = eta <= height;
  v.thm11_sharp = thm11 ? TriState::Yes : TriState::No;
  v.reasons.push_back("eta = " + to_string(eta) + (thm11 ? " <= " : " > ") +
                      "2eta'/(1+2eta') = " + to_string(height));

  PolygonCondition pc = polygon_condition(s, report.field);
  std::string where = "diagonal meets N(S) at " + to_string(pc.hit);
  if (pc.edge_order) {
    where += ", o(e) = " + std::to_string(*pc.edge_order) + (pc.holds ? " <= " : " > ") + "d(S) = " +
             to_string(pc.distance);
  }
  v.reasons.push_back(where);
  v.thm13_sharp = thm11 && pc.holds ? TriState::Yes : TriState::No;

  // reported only; the verdict is taken from N(S)
  if (report.h_polygon.edge_order) {
    v.reasons.push_back("informational: o(e') = " + std::to_string(*report.h_polygon.edge_order) +
                        (report.h_polygon.holds ? " <= " : " > ") + "d(H) = " + to_string(report.h_polygon.distance));
  }
  return v;
}

AnalysisReport analyze_partial(const Poly2& s, const AnalysisConfig& cfg) {
  AnalysisReport r;
  r.s = s;
  r.field = cfg.growth.field;
  r.assumptions = check_assumptions(s);
  if (!r.assumptions.all()) {
    auto failed = r.assumptions.failed();
    std::string names;
    for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
    throw AssumptionViolated("assumption violated: " + names, failed);
  }
  r.hessian = hessian_det(s);
  r.eta = growth_index(s, cfg.growth);
  r.eta_prime = growth_index(r.hessian, cfg.growth);
  r.s_polygon = polygon_condition(s, cfg.growth.field);
  r.h_polygon = polygon_condition(r.hessian, cfg.growth.field);

  if (r.eta.value && r.eta_prime.value) {
    const Rat& eta = *r.eta.value;
    const Rat height = hessian_height(*r.eta_prime.value);
    r.eta1 = std::min(eta, height);
    if (eta <= height)
      r.regime = Regime::Thm11Sharp;
    else if (eta <= make_rat(1, 2))
      r.regime = Regime::Thm12Case1;
    else
      r.regime = Regime::Thm12Case2;
  }
  r.sharpness = sharpness_verdict(s, r);
  return r;
}

AnalysisReport analyze(const Poly2& s, const AnalysisConfig& cfg) {
  AnalysisReport r = analyze_partial(s, cfg);
  if (r.regime == Regime::Undetermined) {
    std::string which = !r.eta.value ? (!r.eta_prime.value ? "eta and eta'" : "eta") : "eta'";
    throw UndeterminedIndex("growth index undetermined: " + which, std::move(r));
  }
  return r;
}

}  // namespace newton_sobolev
