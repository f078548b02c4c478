// Command-line frontend: GKM graphs of flag Bott towers, fans of generalized
// Bott towers / permutohedral varieties / generic orbit closures, star
// subdivision of fan files, and the verification drivers.
//
// Exit codes: 0 pass, 1 verification failed, 2 input error, 3 resource cap.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flagbott/fan.hpp"
#include "flagbott/gkm.hpp"
#include "flagbott/json_io.hpp"
#include "flagbott/orbit.hpp"
#include "flagbott/randomized.hpp"
#include "flagbott/tower.hpp"

namespace {

using namespace flagbott;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

GeneralizedBottTower load_generalized(const std::string& path) {
  TowerVariant t = load_tower_file(path);
  if (!std::holds_alternative<GeneralizedBottTower>(t))
    throw input_error(path + ": this command needs a generalized Bott tower file");
  return std::get<GeneralizedBottTower>(t);
}

struct Report {
  bool ok = true;

  void line(bool pass, const std::string& what) {
    std::cout << (pass ? "PASS" : "FAIL") << ": " << what << "\n";
    ok = ok && pass;
  }
  void note(const std::string& what) { std::cout << "----: " << what << "\n"; }
  int exit_code() const { return ok ? kExitPass : kExitVerifyFailed; }
};

int run_verify_gkm(const std::string& tower_path, long long cap) {
  const FlagBottTower t = as_flag_tower(load_tower_file(tower_path));
  const GkmGraph g = build_gkm_graph(t, Basis::effective, cap);
  Report report;

  const int d = g.degree();
  bool regular = true;
  for (const auto& out : g.out_edges) regular = regular && static_cast<int>(out.size()) == d;
  report.line(regular, "graph is " + std::to_string(d) + "-regular on " +
                           std::to_string(g.vertices.size()) + " vertices");

  bool antisym = true;
  for (size_t e = 0; e < g.edges.size() && antisym; ++e)
    antisym = g.edges[g.reverse_edge(static_cast<int>(e))].label == vec_neg(g.edges[e].label);
  report.line(antisym, "reversed edges carry negated axial functions");

  report.line(check_pairwise_independence(g), "axial functions pairwise independent at each vertex");

  if (d <= 8) {
    report.line(find_connection(g).has_value(), "a connection exists");
  } else {
    report.note("connection search skipped (degree " + std::to_string(d) + " > 8)");
  }
  return report.exit_code();
}

int run_verify_rays(const std::string& tower_path, long long cap) {
  const GeneralizedBottTower t = load_generalized(tower_path);
  Report report;
  const auto ids = orbit_ray_ids(t.dims);
  report.line(verify_rays(t, cap),
              "axial-function systems reproduce all " + std::to_string(ids.size()) +
                  " ray generators at every incident maximal cone");
  return report.exit_code();
}

int run_verify_blowup(const std::string& tower_path, long long cap) {
  const GeneralizedBottTower t = load_generalized(tower_path);
  Report report;
  report.line(verify_blowup(t, cap),
              "star subdivisions of the generalized Bott fan yield the orbit-closure fan");
  return report.exit_code();
}

int run_verify_smooth(const std::string& tower_path, const std::string& fan_path, long long cap) {
  Report report;
  if (!fan_path.empty()) {
    const Fan f = load_fan_file(fan_path);
    report.line(check_unimodular(f), "all " + std::to_string(f.max_cones.size()) +
                                         " maximal cones are unimodular");
  } else {
    const GeneralizedBottTower t = load_generalized(tower_path);
    const Fan f = orbit_fan(t, cap);
    report.line(check_unimodular(f), "orbit-closure fan is unimodular (" +
                                         std::to_string(f.max_cones.size()) + " maximal cones)");
  }
  return report.exit_code();
}

int run_verify_joinstar(unsigned long long seed) {
  Rng rng(seed);
  Report report;
  const int trials = 100;
  int bad = -1;
  for (int i = 0; i < trials; ++i)
    if (!join_star_commutes(random_join_star_sample(rng))) {
      bad = i;
      break;
    }
  report.line(bad < 0, "join and star subdivision commute on " + std::to_string(trials) +
                           " random samples (seed " + std::to_string(seed) + ")" +
                           (bad < 0 ? "" : ", first failure at sample " + std::to_string(bad)));
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag Bott tower toolkit: GKM graphs, toric fans, blow-up verification"};
  app.require_subcommand(1);

  std::string tower_path, fan_path, out_path, format = "dot", cone_spec;
  bool effective = false;
  long long cap = kDefaultCap;
  int perm_n = 0;
  unsigned long long seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    cmd->add_option("--cap", cap, "resource cap on enumerated objects");
  };

  CLI::App* gkm = app.add_subcommand("gkm", "emit the GKM graph of a tower file");
  gkm->add_option("--tower", tower_path, "tower file (either kind)")->required();
  gkm->add_flag("--effective", effective, "use the effective torus basis");
  gkm->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  add_common(gkm);

  CLI::App* fan = app.add_subcommand("fan", "emit a fan file");
  fan->require_subcommand(1);
  CLI::App* fan_gbt = fan->add_subcommand("gbt", "fan of a generalized Bott tower");
  fan_gbt->add_option("--tower", tower_path)->required();
  add_common(fan_gbt);
  CLI::App* fan_orbit = fan->add_subcommand("orbit", "fan of the generic orbit closure");
  fan_orbit->add_option("--tower", tower_path)->required();
  add_common(fan_orbit);
  CLI::App* fan_perm = fan->add_subcommand("permutohedral", "permutohedral fan");
  fan_perm->add_option("--n", perm_n, "block size parameter")->required();
  add_common(fan_perm);

  CLI::App* subdivide = app.add_subcommand("subdivide", "star-subdivide a fan file");
  subdivide->add_option("--fan", fan_path, "fan file")->required();
  subdivide->add_option("--cone", cone_spec, "comma-separated 0-based ray indices")->required();
  add_common(subdivide);

  CLI::App* verify = app.add_subcommand("verify", "run a verification check");
  verify->require_subcommand(1);
  CLI::App* v_blowup = verify->add_subcommand("blowup", "orbit fan == star subdivisions");
  v_blowup->add_option("--tower", tower_path)->required();
  add_common(v_blowup);
  CLI::App* v_smooth = verify->add_subcommand("smooth", "unimodularity of all maximal cones");
  v_smooth->add_option("--tower", tower_path, "generalized tower (checks its orbit fan)");
  v_smooth->add_option("--fan", fan_path, "fan file");
  add_common(v_smooth);
  CLI::App* v_gkm = verify->add_subcommand("gkm", "GKM graph invariants and connection");
  v_gkm->add_option("--tower", tower_path)->required();
  add_common(v_gkm);
  CLI::App* v_rays = verify->add_subcommand("rays", "axial systems vs ray generators");
  v_rays->add_option("--tower", tower_path)->required();
  add_common(v_rays);
  CLI::App* v_joinstar = verify->add_subcommand("joinstar", "join/star commutation battery");
  v_joinstar->add_option("--seed", seed, "battery seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (gkm->parsed()) {
      const FlagBottTower t = as_flag_tower(load_tower_file(tower_path));
      const GkmGraph g =
          build_gkm_graph(t, effective ? Basis::effective : Basis::full, cap);
      emit(out_path, export_gkm(g, format == "dot" ? GraphFormat::dot : GraphFormat::json));
      return kExitPass;
    }
    if (fan_gbt->parsed()) {
      const GeneralizedBottTower t = load_generalized(tower_path);
      emit(out_path, fan_to_json(gbt_fan(t, cap), gbt_ray_labels(t.dims)));
      return kExitPass;
    }
    if (fan_orbit->parsed()) {
      const GeneralizedBottTower t = load_generalized(tower_path);
      emit(out_path, fan_to_json(orbit_fan(t, cap), orbit_ray_labels(t.dims)));
      return kExitPass;
    }
    if (fan_perm->parsed()) {
      emit(out_path, fan_to_json(permutohedral_fan(perm_n, cap), permutohedral_ray_labels(perm_n)));
      return kExitPass;
    }
    if (subdivide->parsed()) {
      const Fan f = load_fan_file(fan_path);
      ConeRef tau;
      std::stringstream ss(cone_spec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          tau.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw input_error("bad --cone entry: " + item);
        }
      }
      emit(out_path, fan_to_json(star_subdivide(f, tau)));
      return kExitPass;
    }
    if (v_blowup->parsed()) return run_verify_blowup(tower_path, cap);
    if (v_smooth->parsed()) {
      if (fan_path.empty() && tower_path.empty())
        throw input_error("verify smooth needs --fan or --tower");
      return run_verify_smooth(tower_path, fan_path, cap);
    }
    if (v_gkm->parsed()) return run_verify_gkm(tower_path, cap);
    if (v_rays->parsed()) return run_verify_rays(tower_path, cap);
    if (v_joinstar->parsed()) return run_verify_joinstar(seed);
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
