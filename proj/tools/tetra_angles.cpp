#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tetra/angle_map.hpp"
#include "tetra/boundary.hpp"
#include "tetra/degeneracy.hpp"
#include "tetra/inverse.hpp"
#include "tetra/io.hpp"
#include "tetra/pillow.hpp"
#include "tetra/rng.hpp"
#include "tetra/verify.hpp"

namespace {

using namespace tetra;

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty())
    std::cout << payload;
  else
    write_file_atomic(out_path, payload);
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

std::string cmd_map(const BaseTriangle& base, const std::vector<double>& apex) {
  const ApexPoint d{apex[0], apex[1], apex[2]};
  const AngleCosTriple t = face_cosines(base, d);
  std::string s = "{\"cosines\":[";
  s += format_double(t.c_alpha) + "," + format_double(t.c_beta) + "," +
       format_double(t.c_gamma);
  s += "],\"pillow_value\":" + format_double(pillow_value(t));
  s += ",\"on_cylinder\":" + bool_json(on_cylinder(base, d)) + "}\n";
  return s;
}

std::string cmd_member(const BaseTriangle& base,
                       const std::vector<double>& target) {
  const AngleCosTriple t{target[0], target[1], target[2]};
  const SigmaMembership m = sigma_membership(base, t);
  const char* status = m == SigmaMembership::InSigma
                           ? "in_sigma"
                           : (m == SigmaMembership::OnClosureBoundaryOnly
                                  ? "closure_boundary"
                                  : "outside");
  return std::string("{\"status\":\"") + status + "\"}\n";
}

std::string cmd_inverse(const BaseTriangle& base,
                        const std::vector<double>& target) {
  const AngleCosTriple t{target[0], target[1], target[2]};
  const P3PSolution sol = preimages(base, t);
  std::string s =
      "{\"count\":" + std::to_string(sol.solutions.size()) +
      ",\"solutions\":[";
  for (std::size_t i = 0; i < sol.solutions.size(); ++i) {
    const P3PCandidate& c = sol.solutions[i];
    if (i) s += ",";
    s += "{\"apex\":[" + format_double(c.apex.p) + "," +
         format_double(c.apex.q) + "," + format_double(c.apex.r) + "]";
    s += ",\"residual\":" + format_double(c.residual);
    s += ",\"near_cylinder\":" + bool_json(c.near_cylinder);
    s += ",\"planar\":" + bool_json(c.planar) + "}";
  }
  std::string note = sol.note;
  std::string escaped;
  for (char ch : note) {
    if (ch == '"' || ch == '\\') escaped += '\\';
    escaped += ch;
  }
  s += "],\"note\":\"" + escaped + "\"}\n";
  return s;
}

std::string cmd_sample(const BaseTriangle& base, int samples,
                       std::uint64_t seed) {
  Rng rng(seed, 3);
  const Circumcircle& cc = base.circle();
  std::string s = "p,q,r,c_alpha,c_beta,c_gamma,pillow_value,on_cylinder\n";
  for (int i = 0; i < samples; ++i) {
    const double rho = cc.radius * 3.0 * std::sqrt(rng.unit());
    const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const ApexPoint d{cc.center.x() + rho * std::cos(th),
                      cc.center.y() + rho * std::sin(th),
                      cc.radius * rng.uniform(1e-4, 3.0)};
    const AngleCosTriple t = face_cosines(base, d);
    s += format_double(d.p) + "," + format_double(d.q) + "," +
         format_double(d.r) + "," + format_double(t.c_alpha) + "," +
         format_double(t.c_beta) + "," + format_double(t.c_gamma) + "," +
         format_double(pillow_value(t)) + "," +
         (on_cylinder(base, d) ? "1" : "0") + "\n";
  }
  return s;
}

std::string cmd_boundary(const BaseTriangle& base, int res,
                         const std::string& format) {
  const BoundaryMesh mesh = build_boundary_mesh(base, res);
  std::ostringstream out;
  if (format == "obj")
    write_obj(mesh, out);
  else
    write_ply(mesh, out);
  return out.str();
}

int cmd_verify(const BaseTriangle& base, const std::string& suite,
               const VerifyOptions& opt, const std::string& out_path) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify_suite_names();
  else
    names.push_back(suite);

  std::string payload;
  bool all_pass = true;
  for (const std::string& name : names) {
    const SuiteResult res = run_suite(name, base, opt);
    for (const CheckLine& c : res.checks) {
      payload += res.name + "/" + c.label + ": " +
                 (c.pass ? "PASS" : "FAIL") + " (" + c.detail + ")\n";
      all_pass = all_pass && c.pass;
    }
  }
  emit(out_path, payload);
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apex angle-cosine geometry over a fixed base triangle"};
  app.require_subcommand(1);

  std::string base_arg;
  std::vector<double> apex, target;
  int res = 24;
  int samples = 1000;
  std::uint64_t seed = 0;
  double tol_predicate = -1.0;
  std::string out_path;
  std::string format = "json";
  std::string suite = "all";

  auto add_base = [&](CLI::App* cmd) {
    cmd->add_option("--base", base_arg,
                    "base triangle: JSON file path or inline JSON")
        ->required();
    cmd->add_option("--tol-predicate", tol_predicate,
                    "override the sign predicate tolerance band");
    cmd->add_option("--out", out_path, "write output to this file");
  };

  CLI::App* map_cmd = app.add_subcommand("map", "apex to angle cosines");
  add_base(map_cmd);
  map_cmd->add_option("--apex", apex, "apex coordinates p q r")
      ->expected(3)
      ->required();

  CLI::App* inv_cmd =
      app.add_subcommand("inverse", "all apexes mapping to a cosine triple");
  add_base(inv_cmd);
  inv_cmd->add_option("--target", target, "cosine triple x y z")
      ->expected(3)
      ->required();

  CLI::App* mem_cmd =
      app.add_subcommand("member", "membership in the attainable set");
  add_base(mem_cmd);
  mem_cmd->add_option("--target", target, "cosine triple x y z")
      ->expected(3)
      ->required();

  CLI::App* bnd_cmd =
      app.add_subcommand("boundary", "triangulate the image closure boundary");
  add_base(bnd_cmd);
  bnd_cmd->add_option("--res", res, "mesh resolution");
  bnd_cmd->add_option("--format", format, "obj or ply")
      ->check(CLI::IsMember({"obj", "ply"}));

  CLI::App* ver_cmd =
      app.add_subcommand("verify", "run property suites against the base");
  add_base(ver_cmd);
  ver_cmd->add_option("--suite", suite, "suite name or all");
  ver_cmd->add_option("--samples", samples, "sample count per suite");
  ver_cmd->add_option("--seed", seed, "random seed");
  ver_cmd->add_option("--res", res, "mesh resolution for the mesh suite");

  CLI::App* smp_cmd =
      app.add_subcommand("sample", "random apexes and their images as CSV");
  add_base(smp_cmd);
  smp_cmd->add_option("--samples", samples, "number of rows");
  smp_cmd->add_option("--seed", seed, "random seed");
  smp_cmd->add_option("--format", format, "csv only")
      ->check(CLI::IsMember({"json", "csv", "obj", "ply"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  ToleranceConfig tol;
  if (tol_predicate > 0.0) tol.tol_predicate = tol_predicate;

  try {
    const BaseTriangle base = [&] {
      try {
        return load_base(base_arg, tol);
      } catch (const GeometryError& e) {
        std::cerr << "invalid base: " << e.what() << "\n";
        std::exit(3);
      }
    }();

    if (map_cmd->parsed()) {
      emit(out_path, cmd_map(base, apex));
    } else if (inv_cmd->parsed()) {
      emit(out_path, cmd_inverse(base, target));
    } else if (mem_cmd->parsed()) {
      emit(out_path, cmd_member(base, target));
    } else if (bnd_cmd->parsed()) {
      if (format != "obj" && format != "ply") {
        std::cerr << "boundary output needs --format obj or ply\n";
        return 1;
      }
      emit(out_path, cmd_boundary(base, res, format));
    } else if (smp_cmd->parsed()) {
      if (format == "json") format = "csv";
      if (format != "csv") {
        std::cerr << "sample output is CSV only\n";
        return 1;
      }
      emit(out_path, cmd_sample(base, samples, seed));
    } else if (ver_cmd->parsed()) {
      VerifyOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      opt.mesh_resolution = res;
      return cmd_verify(base, suite, opt, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const GeometryError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
