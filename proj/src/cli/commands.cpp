#include "newton_sobolev/cli.hpp"

#include "newton_sobolev/exponents.hpp"
#include "newton_sobolev/regions.hpp"
#include "newton_sobolev/report_io.hpp"
#include "newton_sobolev/sublevel.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace newton_sobolev::cli {

namespace {

// Carries an exit code out of a command.
struct Exit {
  int code;
};

struct Options {
  std::string poly;
  std::string theorem;
  std::string point;
  std::string field = "complex";
  unsigned max_shears = 32;
  bool json = false;
  bool csv = false;
  bool closed = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = std::uint64_t{1} << 22;
  std::string half_width = "1/4";
  int delta_min = 4;
  int delta_max = 20;
  double tolerance = 0.1;
  std::string sampler = "prng";
};

AnalysisConfig analysis_config(const Options& o) {
  AnalysisConfig cfg;
  cfg.growth.field = o.field == "real" ? RootField::real : RootField::complex;
  cfg.growth.max_shears = o.max_shears;
  return cfg;
}

Poly2 parse_or_exit(const std::string& text, std::ostream& err) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    throw Exit{kUsage};
  }
}

// Full analysis; assumption failures map to exit 3. With allow_partial the
// report of an undetermined index is returned rather than exiting 4.
AnalysisReport analyze_or_exit(const Poly2& s, const Options& o, std::ostream& err, bool allow_partial) {
  try {
    return analyze(s, analysis_config(o));
  } catch (const AssumptionViolated& e) {
    err << e.what() << "\n";
    for (const auto& f : e.flags()) err << "failed: " << f << "\n";
    throw Exit{kAssumption};
  } catch (const UndeterminedIndex& e) {
    err << e.what() << "\n";
    if (allow_partial) return e.report();
    throw Exit{kUndetermined};
  }
}

RegionPolygon select_region(const Options& o, std::ostream& err) {
  const std::string& t = o.theorem;
  if (t.rfind("isase:", 0) == 0) {
    std::string rest = t.substr(6);
    auto comma = rest.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("expected isase:a,b");
      std::size_t used = 0;
      long a = std::stol(rest.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("bad a");
      std::string bs = rest.substr(comma + 1);
      long b = std::stol(bs, &used);
      if (used != bs.size()) throw std::invalid_argument("bad b");
      return isase_region(a, b);
    } catch (const std::exception& e) {
      err << "invalid isase selector '" << t << "': " << e.what() << "\n";
      throw Exit{kUsage};
    }
  }
  if (t != "1.1" && t != "1.2" && t != "1.3" && t != "1.4") {
    err << "unknown theorem selector '" << t << "'\n";
    throw Exit{kUsage};
  }
  AnalysisReport r = analyze_or_exit(parse_or_exit(o.poly, err), o, err, false);
  const bool sharp = r.regime == Regime::Thm11Sharp;
  auto inapplicable = [&] {
    err << "selector " << t << " does not apply in regime " << to_string(r.regime) << "\n";
    throw Exit{kUndetermined};
  };
  if (t == "1.1") return theorem11_region(*r.eta1);
  if (t == "1.3") {
    if (!sharp) inapplicable();
    return theorem13_region(*r.eta.value);
  }
  if (sharp) inapplicable();
  if (t == "1.2") return theorem12_region(*r.eta.value, *r.eta_prime.value);
  return theorem14_region(*r.eta.value, *r.eta_prime.value);
}

RPoint parse_point(const std::string& s, std::ostream& err) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("expected X,Y");
    return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
  } catch (const std::exception& e) {
    err << "malformed point '" << s << "': " << e.what() << "\n";
    throw Exit{kUsage};
  }
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  Poly2 s = parse_or_exit(o.poly, err);
  int code = kSuccess;
  AnalysisReport r;
  try {
    r = analyze_or_exit(s, o, err, false);
  } catch (const Exit& e) {
    if (e.code != kUndetermined) throw;
    r = analyze_partial(s, analysis_config(o));
    code = kUndetermined;
  }
  if (o.json)
    out << to_json(r).dump(2) << "\n";
  else
    out << to_text(r);
  return code;
}

int cmd_region(const Options& o, std::ostream& out, std::ostream& err) {
  RegionPolygon region = select_region(o, err);
  if (o.csv)
    out << to_csv(region);
  else if (o.json)
    out << to_json(region).dump(2) << "\n";
  else {
    out << "theorem = " << to_string(region.theorem) << "\n";
    out << "plane = " << to_string(region.plane) << "\n";
    for (const auto& v : region.vertices) out << "(" << to_string(v.x) << ", " << to_string(v.y) << ")\n";
  }
  return kSuccess;
}

std::uint64_t default_seed(std::ostream& err) {
  const char* env = std::getenv("NEWTON_SOBOLEV_SEED");
  if (!env) return 7;
  try {
    std::size_t used = 0;
    std::string s(env);
    auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    err << "NEWTON_SOBOLEV_SEED is not an unsigned integer\n";
    throw Exit{kUsage};
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SublevelConfig cfg;
  try {
    cfg.seed = o.seed ? *o.seed : default_seed(err);
    cfg.samples_per_rung = o.samples;
    cfg.half_width = to_double(parse_rat(o.half_width));
    cfg.delta_min_exp = o.delta_min;
    cfg.delta_max_exp = o.delta_max;
    cfg.tolerance = o.tolerance;
    cfg.sampler = parse_sampler(o.sampler);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "invalid verify options: " << e.what() << "\n";
    throw Exit{kUsage};
  }
  Poly2 s = parse_or_exit(o.poly, err);
  AnalysisReport r = analyze_or_exit(s, o, err, true);
  VerificationReport v = verify_indices(s, r, cfg);
  if (o.json) {
    out << to_json(v).dump(2) << "\n";
  } else {
    for (const auto& t : v.targets) {
      out << t.target << ": exact = " << (t.exact ? to_string(*t.exact) : std::string("undetermined"));
      if (t.estimate) out << ", estimate = " << *t.estimate << ", k_hat = " << t.detail.fit.k_hat;
      if (t.deviation) out << ", deviation = " << *t.deviation;
      if (t.error) out << ", error = " << *t.error;
      out << ", " << (t.pass ? "pass" : "FAIL") << "\n";
    }
  }
  return v.all_pass() ? kSuccess : kVerificationFailed;
}

int cmd_member(const Options& o, std::ostream& out, std::ostream& err) {
  RPoint pt = parse_point(o.point, err);
  RegionPolygon region = select_region(o, err);
  out << (contains(region, pt, o.closed) ? "true" : "false") << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Newton polygon growth indices and Sobolev/Lebesgue boundedness regions"};
  app.require_subcommand(1);

  auto add_analysis_flags = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "edge-order root field")->check(CLI::IsMember({"complex", "real"}));
    sub->add_option("--max-shears", o.max_shears, "adapted shear iteration cap");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "compute eta, eta', regime and sharpness");
  analyze_cmd->add_option("poly", o.poly, "polynomial S(x,y)")->required();
  analyze_cmd->add_flag("--json", o.json);
  add_analysis_flags(analyze_cmd);

  auto* region_cmd = app.add_subcommand("region", "emit a boundedness region");
  region_cmd->add_option("--theorem", o.theorem, "1.1 | 1.2 | 1.3 | 1.4 | isase:a,b")->required();
  region_cmd->add_option("poly", o.poly, "polynomial S(x,y)");
  auto* json_flag = region_cmd->add_flag("--json", o.json);
  region_cmd->add_flag("--csv", o.csv)->excludes(json_flag);
  add_analysis_flags(region_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "numerically check eta and eta'");
  verify_cmd->add_option("poly", o.poly, "polynomial S(x,y)")->required();
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--samples", o.samples, "samples per rung");
  verify_cmd->add_option("--half-width", o.half_width, "V = [-r, r]^2, as p/q");
  verify_cmd->add_option("--delta-min", o.delta_min, "first rung exponent j0 (delta = 2^-j)");
  verify_cmd->add_option("--delta-max", o.delta_max, "last rung exponent j1");
  verify_cmd->add_option("--tolerance", o.tolerance, "absolute tolerance on each index");
  verify_cmd->add_option("--sampler", o.sampler)->check(CLI::IsMember({"prng", "halton", "grid"}));
  verify_cmd->add_flag("--json", o.json);
  add_analysis_flags(verify_cmd);

  auto* member_cmd = app.add_subcommand("member", "test a point against a region");
  member_cmd->add_option("--theorem", o.theorem)->required();
  member_cmd->add_option("--point", o.point, "X,Y with rational coordinates")->required();
  member_cmd->add_flag("--closed", o.closed, "include the boundary");
  member_cmd->add_option("poly", o.poly, "polynomial S(x,y)");
  add_analysis_flags(member_cmd);

  std::vector<const char*> argv{"newton-sobolev"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out, err);
    if (region_cmd->parsed()) return cmd_region(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    return cmd_member(o, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace newton_sobolev::cli
