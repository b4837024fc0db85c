// Acceptance run: one line per criterion, nonzero exit if any fail.
// argv[1] is the path of the command line tool, used by the determinism
// criterion; everything else goes through the library directly.

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tetra/angle_map.hpp"
#include "tetra/io.hpp"
#include "tetra/verify.hpp"

namespace {

using namespace tetra;

int g_failures = 0;

struct Criterion {
  bool pass = true;
  std::string detail;

  void fold(const std::string& base_name, const SuiteResult& r) {
    for (const CheckLine& line : r.checks) {
      if (line.pass) continue;
      pass = false;
      detail += "\n      " + base_name + " " + r.name + "/" + line.label;
      if (!line.detail.empty()) detail += " (" + line.detail + ")";
    }
  }
};

void report(int index, const std::string& name, const Criterion& c) {
  std::printf("C%02d %-24s %s%s\n", index, name.c_str(),
              c.pass ? "PASS" : "FAIL", c.detail.c_str());
  if (!c.pass) ++g_failures;
}

struct Fixture {
  std::string name;
  BaseTriangle base;
  std::string json;
};

std::vector<Fixture> fixtures() {
  return {
      {"equilateral", fixture_equilateral(),
       "{\"angles\":[1.0471975511965976,1.0471975511965976,"
       "1.0471975511965979],\"circumradius\":1.0}"},
      {"right-3-4-5", fixture_right345(),
       "{\"A\":[0,0],\"B\":[3,0],\"C\":[0,4]}"},
      {"obtuse", fixture_obtuse(),
       "{\"angles\":[0.5235987755982988,0.7853981633974483,"
       "1.8325957145940461],\"circumradius\":1.0}"},
  };
}

using SuiteFn = SuiteResult (*)(const BaseTriangle&, const VerifyOptions&);

Criterion over_fixtures(SuiteFn fn, const VerifyOptions& opt) {
  Criterion c;
  for (const Fixture& f : fixtures()) c.fold(f.name, fn(f.base, opt));
  return c;
}

// Runs a shell command, captures stdout, and reports the exit status.
bool run_command(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  return pclose(pipe) == 0;
}

Criterion cli_determinism(const std::string& cli) {
  Criterion c;
  if (cli.empty()) {
    c.pass = false;
    c.detail = "\n      no tool path supplied";
    return c;
  }

  for (const Fixture& f : fixtures()) {
    const AngleCosTriple probe =
        face_cosines(f.base, ApexPoint{0.05, -0.1, 0.8});
    const std::string target = format_double(probe.c_alpha) + " " +
                               format_double(probe.c_beta) + " " +
                               format_double(probe.c_gamma);
    std::vector<std::string> commands = {
        " map --base '" + f.json + "' --apex 0.1 0.2 0.9",
        " member --base '" + f.json + "' --target " + target,
        " sample --base '" + f.json + "' --samples 500 --seed 9",
    };
    if (f.name == "equilateral") {
      commands.push_back(" inverse --base '" + f.json + "' --target " +
                         target);
      commands.push_back(" boundary --base '" + f.json +
                         "' --res 8 --format obj");
      commands.push_back(" verify --base '" + f.json +
                         "' --suite volume --samples 2000");
    }
    for (const std::string& args : commands) {
      std::string first, second;
      const bool ok1 = run_command(cli + args, first);
      const bool ok2 = run_command(cli + args, second);
      if (!ok1 || !ok2) {
        c.pass = false;
        c.detail += "\n      " + f.name + args + " exited nonzero";
      } else if (first != second) {
        c.pass = false;
        c.detail += "\n      " + f.name + args + " output differs";
      } else if (first.empty()) {
        c.pass = false;
        c.detail += "\n      " + f.name + args + " produced no output";
      }
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  VerifyOptions opt;
  opt.samples = 100000;
  report(1, "pillow containment", over_fixtures(&verify_pillow, opt));

  opt.samples = 10000;
  report(2, "volume identities", over_fixtures(&verify_volume, opt));
  report(3, "degeneracy equivalence", over_fixtures(&verify_jacobian, opt));

  opt.samples = 1000;
  report(4, "gradients", over_fixtures(&verify_gradients, opt));

  opt.samples = 10000;
  report(5, "non-smooth angles", over_fixtures(&verify_nonsmooth, opt));
  report(6, "curvature", over_fixtures(&verify_curvature, opt));

  opt.samples = 1000;
  report(7, "degenerate direction", over_fixtures(&verify_eta, opt));

  opt.samples = 10000;
  report(8, "injectivity dichotomy", over_fixtures(&verify_overlap, opt));
  report(9, "inverse solver", over_fixtures(&verify_p3p, opt));

  {
    Criterion c;
    c.fold("equilateral", verify_witness(fixture_equilateral(), opt));
    report(10, "interior witness", c);
  }

  report(11, "limit sets", over_fixtures(&verify_limits, opt));
  report(12, "octant markers", over_fixtures(&verify_markers, opt));

  {
    Criterion c;
    VerifyOptions mesh_opt;
    mesh_opt.mesh_resolution = 24;
    mesh_opt.flood_fill = true;
    mesh_opt.flood_fill_resolution = 64;
    c.fold("equilateral", verify_mesh(fixture_equilateral(), mesh_opt));
    mesh_opt.flood_fill = false;
    c.fold("right-3-4-5", verify_mesh(fixture_right345(), mesh_opt));
    c.fold("obtuse", verify_mesh(fixture_obtuse(), mesh_opt));
    report(13, "boundary mesh", c);
  }

  report(14, "cli determinism", cli_determinism(cli));

  if (g_failures > 0) {
    std::printf("%d of 14 criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all 14 criteria pass\n");
  return 0;
}
