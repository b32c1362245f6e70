#include "newton_sobolev/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace newton_sobolev {

namespace {

Json rat_or_null(const std::optional<Rat>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

std::optional<Rat> opt_rat(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_rat(j.get<std::string>());
}

template <typename T>
Json opt_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> opt_get(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

std::string field_name(RootField f) { return f == RootField::complex ? "complex" : "real"; }
RootField parse_field(const std::string& s) {
  if (s == "complex") return RootField::complex;
  if (s == "real") return RootField::real;
  throw std::invalid_argument("unknown root field '" + s + "'");
}

std::string axis_name(ShearAxis a) { return a == ShearAxis::y_by_x ? "y_by_x" : "x_by_y"; }
ShearAxis parse_axis(const std::string& s) {
  if (s == "y_by_x") return ShearAxis::y_by_x;
  if (s == "x_by_y") return ShearAxis::x_by_y;
  throw std::invalid_argument("unknown shear axis '" + s + "'");
}

Json growth_to_json(const GrowthIndex& g) {
  Json shears = Json::array();
  for (const auto& s : g.shears) shears.push_back(Json{{"c", to_string(s.c)}, {"m", s.m}, {"axis", axis_name(s.axis)}});
  return Json{{"value", rat_or_null(g.value)},
              {"method", to_string(g.method)},
              {"distance", to_string(g.distance)},
              {"hit", to_string(g.hit)},
              {"edge_order", opt_value(g.edge_order)},
              {"condition_oe_le_d", opt_value(g.condition_oe_le_d)},
              {"shears", shears},
              {"adapted", to_string(g.adapted)}};
}

GrowthIndex growth_from_json(const Json& j) {
  GrowthIndex g;
  g.value = opt_rat(j.at("value"));
  g.method = parse_growth_method(j.at("method").get<std::string>());
  g.distance = parse_rat(j.at("distance").get<std::string>());
  g.hit = parse_hit_kind(j.at("hit").get<std::string>());
  g.edge_order = opt_get<unsigned>(j.at("edge_order"));
  g.condition_oe_le_d = opt_get<bool>(j.at("condition_oe_le_d"));
  for (const auto& s : j.at("shears"))
    g.shears.push_back({parse_rat(s.at("c").get<std::string>()), s.at("m").get<unsigned>(),
                        parse_axis(s.at("axis").get<std::string>())});
  g.adapted = parse_poly(j.at("adapted").get<std::string>());
  return g;
}

Json polygon_to_json(const PolygonCondition& p) {
  return Json{{"hit", to_string(p.hit)},
              {"distance", to_string(p.distance)},
              {"edge_order", opt_value(p.edge_order)},
              {"holds", p.holds}};
}

PolygonCondition polygon_from_json(const Json& j) {
  return {parse_hit_kind(j.at("hit").get<std::string>()), parse_rat(j.at("distance").get<std::string>()),
          opt_get<unsigned>(j.at("edge_order")), j.at("holds").get<bool>()};
}

std::string decimal12(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
  return buf;
}

}  // namespace

Json to_json(const AnalysisReport& r) {
  const auto& a = r.assumptions;
  return Json{{"s", to_string(r.s)},
              {"hessian", to_string(r.hessian)},
              {"field", field_name(r.field)},
              {"assumptions",
               {{"s_zero_at_origin", a.s_zero_at_origin},
                {"gradient_zero", a.gradient_zero},
                {"hessian_zero_at_origin", a.hessian_zero_at_origin},
                {"hessian_not_identically_zero", a.hessian_not_identically_zero},
                {"s_not_identically_zero", a.s_not_identically_zero}}},
              {"eta", growth_to_json(r.eta)},
              {"eta_prime", growth_to_json(r.eta_prime)},
              {"s_polygon", polygon_to_json(r.s_polygon)},
              {"h_polygon", polygon_to_json(r.h_polygon)},
              {"eta1", rat_or_null(r.eta1)},
              {"regime", to_string(r.regime)},
              {"sharpness",
               {{"thm11_sharp", to_string(r.sharpness.thm11_sharp)},
                {"thm13_sharp", to_string(r.sharpness.thm13_sharp)},
                {"reasons", r.sharpness.reasons}}}};
}

AnalysisReport analysis_report_from_json(const Json& j) {
  AnalysisReport r;
  r.s = parse_poly(j.at("s").get<std::string>());
  r.hessian = parse_poly(j.at("hessian").get<std::string>());
  r.field = parse_field(j.at("field").get<std::string>());
  const auto& a = j.at("assumptions");
  r.assumptions.s_zero_at_origin = a.at("s_zero_at_origin").get<bool>();
  r.assumptions.gradient_zero = a.at("gradient_zero").get<bool>();
  r.assumptions.hessian_zero_at_origin = a.at("hessian_zero_at_origin").get<bool>();
  r.assumptions.hessian_not_identically_zero = a.at("hessian_not_identically_zero").get<bool>();
  r.assumptions.s_not_identically_zero = a.at("s_not_identically_zero").get<bool>();
  r.eta = growth_from_json(j.at("eta"));
  r.eta_prime = growth_from_json(j.at("eta_prime"));
  r.s_polygon = polygon_from_json(j.at("s_polygon"));
  r.h_polygon = polygon_from_json(j.at("h_polygon"));
  r.eta1 = opt_rat(j.at("eta1"));
  r.regime = parse_regime(j.at("regime").get<std::string>());
  const auto& s = j.at("sharpness");
  r.sharpness.thm11_sharp = parse_tristate(s.at("thm11_sharp").get<std::string>());
  r.sharpness.thm13_sharp = parse_tristate(s.at("thm13_sharp").get<std::string>());
  r.sharpness.reasons = s.at("reasons").get<std::vector<std::string>>();
  return r;
}

Json to_json(const RegionPolygon& r) {
  Json verts = Json::array();
  for (const auto& v : r.vertices) verts.push_back(Json::array({to_string(v.x), to_string(v.y)}));
  return Json{{"theorem", to_string(r.theorem)},
              {"plane", to_string(r.plane)},
              {"interior_only", r.interior_only},
              {"vertices", verts}};
}

RegionPolygon region_from_json(const Json& j) {
  RegionPolygon r;
  r.theorem = parse_theorem(j.at("theorem").get<std::string>());
  r.plane = parse_plane(j.at("plane").get<std::string>());
  r.interior_only = j.at("interior_only").get<bool>();
  for (const auto& v : j.at("vertices"))
    r.vertices.push_back({parse_rat(v.at(0).get<std::string>()), parse_rat(v.at(1).get<std::string>())});
  return r;
}

std::string to_csv(const RegionPolygon& r) {
  std::string out = "x,y\n";
  for (const auto& v : r.vertices) out += decimal12(v.x) + "," + decimal12(v.y) + "\n";
  return out;
}

Json to_json(const TargetVerification& t) {
  Json rungs = Json::array();
  for (const auto& r : t.detail.rungs)
    rungs.push_back(Json{{"j", r.j},
                         {"delta", r.delta},
                         {"measure", r.measure},
                         {"standard_error", r.standard_error},
                         {"hits", r.hits},
                         {"used_in_fit", r.used_in_fit}});
  Json j{{"target", t.target},
         {"exact", rat_or_null(t.exact)},
         {"estimate", opt_value(t.estimate)},
         {"deviation", opt_value(t.deviation)},
         {"pass", t.pass},
         {"rungs", rungs}};
  if (t.estimate) {
    j["k_hat"] = t.detail.fit.k_hat;
    j["k_rounded"] = opt_value(t.detail.fit.k_rounded);
    j["fit_residual"] = t.detail.fit.fit_residual;
  }
  if (t.error) j["error"] = *t.error;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json out = Json::array();
  for (const auto& t : r.targets) out.push_back(to_json(t));
  return out;
}

std::string to_text(const AnalysisReport& r) {
  // render from the JSON form so both modes agree on every value
  const Json j = to_json(r);
  auto str = [](const Json& v) { return v.is_null() ? std::string("undetermined") : v.get<std::string>(); };
  std::ostringstream os;
  os << "S = " << j["s"].get<std::string>() << "\n";
  os << "H = " << j["hessian"].get<std::string>() << "\n";
  os << "d(S) = " << j["s_polygon"]["distance"].get<std::string>() << " (" << j["s_polygon"]["hit"].get<std::string>()
     << ")\n";
  os << "d(H) = " << j["h_polygon"]["distance"].get<std::string>() << " (" << j["h_polygon"]["hit"].get<std::string>()
     << ")\n";
  os << "eta = " << str(j["eta"]["value"]) << " [" << j["eta"]["method"].get<std::string>() << "]\n";
  os << "eta' = " << str(j["eta_prime"]["value"]) << " [" << j["eta_prime"]["method"].get<std::string>() << "]\n";
  os << "eta1 = " << str(j["eta1"]) << "\n";
  os << "regime = " << j["regime"].get<std::string>() << "\n";
  os << "thm11_sharp = " << j["sharpness"]["thm11_sharp"].get<std::string>() << "\n";
  os << "thm13_sharp = " << j["sharpness"]["thm13_sharp"].get<std::string>() << "\n";
  for (const auto& reason : j["sharpness"]["reasons"]) os << "  - " << reason.get<std::string>() << "\n";
  os << "assumptions:";
  for (const auto& [k, v] : j["assumptions"].items()) os << " " << k << "=" << (v.get<bool>() ? "ok" : "FAIL");
  os << "\n";
  return os.str();
}

}  // namespace newton_sobolev
