// Command-line front end: solve pentagons, list vertex combinations, build
// and verify tilings, realize them on the sphere and export.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pentile/pentile.hpp"

namespace {

using namespace pentile;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergence = 3;

struct Options {
  double tol = 1e-8;
  std::string format;  // per-subcommand default when empty
};

// Precedence: flags > PENTILE_TOL env > config file > defaults.
Options resolve_options(const std::string& config_path, const std::string& format_flag,
                        double tol_flag, bool tol_flag_set) {
  Options opt;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw domain_error("cannot open config file " + config_path);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
      };
      std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
      if (key == "tol") opt.tol = std::stod(value);
      if (key == "format") opt.format = value;
    }
  }
  if (const char* env = std::getenv("PENTILE_TOL")) opt.tol = std::stod(env);
  if (tol_flag_set) opt.tol = tol_flag;
  if (!format_flag.empty()) opt.format = format_flag;
  return opt;
}

PentagonSpec solve_for(int family, int f) {
  return family == 1 ? solve_family1(f) : solve_family2(f);
}

void print_pentagon(const PentagonSpec& p, const Options& opt, std::ostream& os) {
  if (opt.format == "json") {
    os << to_json(p).dump(2) << "\n";
    return;
  }
  auto line = [&](const char* name, const AngleForm& a) {
    double v = a.value_or_resolve(p.f);
    os << "  " << name << " = " << v << " rad = " << v / kPi << " pi\n";
  };
  os << "pentagon (f = " << (p.f ? std::to_string(*p.f) : std::string("?")) << ")\n";
  line("alpha  ", p.alpha);
  line("beta   ", p.beta);
  line("gamma  ", p.gamma);
  line("delta  ", p.delta);
  line("epsilon", p.epsilon);
  os << "  a = " << p.a << " rad = " << p.a / kPi << " pi\n";
  os << "  b = " << p.b << " rad = " << p.b / kPi << " pi\n";
}

AvcSet avc_for(int family, int f) {
  PentagonSpec p = solve_for(family, f);
  AvcSet s;
  s.f = f;
  s.items = enumerate_vertex_types(p.angles());
  return s;
}

void print_report(const VerifyReport& rep, const Options& opt, std::ostream& os) {
  if (opt.format == "json") {
    nlohmann::json j;
    j["census"] = rep.census_notation;
    j["all_pass"] = rep.all_pass();
    j["tolerance"] = opt.tol;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    os << j.dump(2) << "\n";
    return;
  }
  os << "  tolerance: " << opt.tol << "\n";
  for (const auto& c : rep.checks)
    os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name
       << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  os << "  census: " << rep.census_notation << "\n";
}

int run_atlas(const Options& opt, std::ostream& os) {
  bool all_ok = true;
  nlohmann::json rows = nlohmann::json::array();
  if (opt.format != "json")
    os << "variant                 family  f   F    E    V    census                     verify  "
          "closure\n";
  for (const auto& v : tiling_variants()) {
    const HalfEdgeMap& m = build_variant(v.family, v.name);
    PentagonSpec p = solve_for(v.family, v.f);
    VerifyReport rep = verify(m, p, opt.tol);
    Census c = census(m);
    // T-notation uses commas where the variant name uses underscores.
    std::string want = v.name.substr(1);
    for (auto& ch : want) ch = (ch == '_') ? ',' : ch;
    bool census_ok = c.t_notation(true) == "T(" + want + ")";
    double closure = -1;
    bool ok = rep.all_pass() && census_ok;
    try {
      RealizedTiling r = realize(m, p);
      closure = r.max_closure_error;
      ok = ok && closure < opt.tol;
    } catch (const divergence_error&) {
      ok = false;
    }
    all_ok = all_ok && ok;
    if (opt.format == "json") {
      rows.push_back({{"variant", v.name},
                      {"family", v.family},
                      {"f", v.f},
                      {"census", c.t_notation(true)},
                      {"pass", ok},
                      {"closure", closure}});
    } else {
      char buf[256];
      std::snprintf(buf, sizeof(buf), "%-23s %-7d %-3d %-4d %-4d %-4d %-26s %-7s %.3e\n",
                    v.name.c_str(), v.family, v.f, c.faces, c.edges, c.vertices,
                    c.t_notation(true).c_str(), ok ? "PASS" : "FAIL", closure);
      os << buf;
    }
  }
  if (opt.format == "json") os << rows.dump(2) << "\n";
  return all_ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pentile: pentagonal sphere tilings with edge combination a3b2"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  std::string config_path, format_flag;
  double tol_flag = 1e-8;
  bool tol_flag_set = false;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--format", format_flag, "output format: text or json");
  app.add_option("--tol", tol_flag, "verification tolerance")->each([&](const std::string&) {
    tol_flag_set = true;
  });

  int family = 1, f = 24, n = 4;
  std::string variant, fixture, out_path, export_format = "json";
  auto families = CLI::IsMember({1, 2});
  auto tile_counts = CLI::IsMember({24, 60});

  auto* solve = app.add_subcommand("solve", "solve a pentagon");
  solve->add_option("--family", family, "1 or 2")->required()->check(families);
  solve->add_option("--f", f, "24 or 60")->required()->check(tile_counts);

  auto* avc = app.add_subcommand("avc", "anglewise vertex combinations of a solved pentagon");
  avc->add_option("--family", family)->required()->check(families);
  avc->add_option("--f", f)->required()->check(tile_counts);

  auto* build = app.add_subcommand("build", "build a tiling variant and write its fixture");
  build->add_option("--family", family)->required();
  build->add_option("--variant", variant, "e.g. T4bge2_2e4 (b=beta g=gamma d=delta e=epsilon)")
      ->required();
  build->add_option("--out", out_path, "output path (default: <variant>.json)");

  auto* verify_cmd = app.add_subcommand("verify", "verify a tiling fixture against a pentagon");
  verify_cmd->add_option("--fixture", fixture)->required();
  verify_cmd->add_option("--family", family)->required();
  verify_cmd->add_option("--f", f)->required();

  auto* realize_cmd = app.add_subcommand("realize", "realize a variant on the unit sphere");
  realize_cmd->add_option("--family", family)->required();
  realize_cmd->add_option("--variant", variant)->required();

  auto* export_cmd = app.add_subcommand("export", "realize and export a variant");
  export_cmd->add_option("--family", family)->required();
  export_cmd->add_option("--variant", variant)->required();
  export_cmd->add_option("--as", export_format, "json, obj or svg_stereographic");
  export_cmd->add_option("--out", out_path, "output path (default: stdout)");

  auto* subdiv = app.add_subcommand("subdivision", "build a pentagonal subdivision");
  subdiv->add_option("--n", n, "3, 4 or 5")->required();
  subdiv->add_option("--out", out_path);

  auto* atlas = app.add_subcommand("atlas", "run every variant end to end");
  (void)atlas;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Options opt = resolve_options(config_path, format_flag, tol_flag, tol_flag_set);
    if (solve->parsed()) {
      if (opt.format.empty()) opt.format = "json";  // pentagon output is JSON by default
      print_pentagon(solve_for(family, f), opt, std::cout);
      return 0;
    }
    if (opt.format.empty()) opt.format = "text";
    if (avc->parsed()) {
      AvcSet s = avc_for(family, f);
      if (opt.format == "json") {
        std::cout << to_json(s).dump(2) << "\n";
      } else {
        bool first = true;
        for (const auto& v : s.items) {
          std::cout << (first ? "" : " ") << v.str();
          first = false;
        }
        std::cout << "\n";
      }
      return 0;
    }
    if (build->parsed()) {
      const HalfEdgeMap& m = build_variant(family, variant);
      std::string path = out_path.empty() ? variant + ".json" : out_path;
      std::ofstream os(path, std::ios::binary);
      os << canonical_fixture_bytes(m);
      if (opt.format == "json")
        std::cout << nlohmann::json{{"variant", variant},
                                    {"path", path},
                                    {"census", census(m).t_notation(true)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "wrote " << path << " (" << census(m).t_notation(true) << ")\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      std::ifstream in(fixture);
      if (!in) throw domain_error("cannot open fixture " + fixture);
      nlohmann::json j;
      in >> j;
      HalfEdgeMap m = halfedge_from_json(j);
      VerifyReport rep = verify(m, solve_for(family, f), opt.tol);
      print_report(rep, opt, std::cout);
      return rep.all_pass() ? 0 : kExitVerifyFailure;
    }
    if (realize_cmd->parsed()) {
      const HalfEdgeMap& m = build_variant(family, variant);
      PentagonSpec p = solve_for(family, f = find_variant(family, variant).f);
      RealizedTiling r = realize(m, p);
      double area = 0;
      for (int i = 0; i < m.faces(); ++i) area += face_area(r, i);
      if (opt.format == "json") {
        std::cout << nlohmann::json{{"variant", variant},
                                    {"max_closure_error", r.max_closure_error},
                                    {"holonomy", max_vertex_holonomy(m, r)},
                                    {"total_area", area}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "closure " << r.max_closure_error << ", holonomy "
                  << max_vertex_holonomy(m, r) << ", area " << area << " (4pi = " << 4 * kPi
                  << ")\n";
      }
      return 0;
    }
    if (export_cmd->parsed()) {
      const HalfEdgeMap& m = build_variant(family, variant);
      PentagonSpec p = solve_for(family, find_variant(family, variant).f);
      RealizedTiling r = realize(m, p);
      std::string payload;
      if (export_format == "json")
        payload = export_json(m, r).dump(2) + "\n";
      else if (export_format == "obj")
        payload = export_obj(m, r);
      else if (export_format == "svg_stereographic" || export_format == "svg")
        payload = export_svg(m, r);
      else
        throw domain_error("unknown export format " + export_format);
      if (out_path.empty()) {
        std::cout << payload;
      } else {
        std::ofstream os(out_path, std::ios::binary);
        os << payload;
        if (opt.format == "json")
          std::cout << nlohmann::json{{"variant", variant}, {"path", out_path}}.dump(2) << "\n";
        else
          std::cout << "wrote " << out_path << "\n";
      }
      return 0;
    }
    if (subdiv->parsed()) {
      HalfEdgeMap m = build_pentagonal_subdivision(n);
      std::string path = out_path.empty() ? "subdivision" + std::to_string(n) + ".json" : out_path;
      std::ofstream os(path, std::ios::binary);
      os << canonical_fixture_bytes(m);
      if (opt.format == "json")
        std::cout << nlohmann::json{{"n", n}, {"path", path}, {"census", census(m).t_notation(true)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "wrote " << path << " (" << census(m).t_notation(true) << ")\n";
      return 0;
    }
    if (atlas->parsed()) return run_atlas(opt, std::cout);
  } catch (const divergence_error& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
