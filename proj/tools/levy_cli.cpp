// Command-line front end: samples paths, computes minorants, runs the
// stick-breaking constructions and the verification suite. All outputs are
// deterministic functions of the arguments; CSV uses 17 significant digits
// and LF endings so reruns are byte-identical.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levy/checks.hpp"
#include "levy/csv.hpp"
#include "levy/intensity.hpp"
#include "levy/io.hpp"
#include "levy/minorant.hpp"
#include "levy/models.hpp"
#include "levy/report.hpp"
#include "levy/stick_breaking.hpp"
#include "levy/transforms.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LEVY_MINORANT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw CLI::ValidationError("LEVY_MINORANT_SEED is not an integer");
    }
  }
  return 20110211;  // fixed default so bare invocations reproduce
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    std::fwrite(content.data(), 1, content.size(), stdout);
  else
    levy::write_file(out_path, content);
}

std::string grid_path_json(const levy::GridPath& p) {
  nlohmann::json j;
  j["t0"] = p.t0;
  j["dt"] = p.dt;
  j["values"] = p.values;
  return j.dump() + "\n";
}

std::string faces_json(const levy::MinorantDecomposition& dec) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : dec.faces)
    arr.push_back({{"g", f.g},
                   {"d", f.d},
                   {"length", f.length},
                   {"increment", f.increment},
                   {"slope", f.slope}});
  return arr.dump() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex minorants of Levy processes: simulation and verification"};
  app.require_subcommand(1);

  std::string model_path, out_path, format = "csv";
  std::uint64_t seed = default_seed();
  std::uint64_t stream = 0;
  std::size_t n_grid = 4096;
  std::uint64_t reps = 1;
  unsigned jobs = 0;
  double horizon = 1.0;

  // sample-path ------------------------------------------------------------
  auto* sample = app.add_subcommand("sample-path", "simulate one path on a uniform grid");
  sample->add_option("--model", model_path, "model spec JSON file")->required();
  sample->add_option("--horizon", horizon, "time horizon (default 1)");
  sample->add_option("--n", n_grid, "number of grid steps");
  sample->add_option("--seed", seed, "master seed (env LEVY_MINORANT_SEED overrides default)");
  sample->add_option("--stream", stream, "stream id (replicate index)");
  sample->add_option("--out", out_path, "output file, '-' for stdout");
  sample->add_option("--format", format, "csv (time,value) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sample->callback([&] {
    const auto model = levy::load_model(model_path);
    levy::RngStream rng(seed, stream);
    const auto path = model.path_sample(horizon, n_grid, rng);
    emit(out_path, format == "csv" ? levy::grid_path_csv(path) : grid_path_json(path));
  });

  // minorant ----------------------------------------------------------------
  auto* minorant = app.add_subcommand("minorant", "faces of the convex minorant of one path");
  minorant->add_option("--model", model_path, "model spec JSON file")->required();
  minorant->add_option("--horizon", horizon, "time horizon (default 1)");
  minorant->add_option("--n", n_grid, "number of grid steps");
  minorant->add_option("--seed", seed, "master seed");
  minorant->add_option("--stream", stream, "stream id");
  minorant->add_option("--out", out_path, "output file (CSV header g,d,length,increment,slope)");
  minorant->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  minorant->callback([&] {
    const auto model = levy::load_model(model_path);
    levy::RngStream rng(seed, stream);
    const auto dec = levy::convex_minorant(model.path_sample(horizon, n_grid, rng));
    emit(out_path, format == "csv" ? levy::faces_csv(dec) : faces_json(dec));
  });

  // sticks -------------------------------------------------------------------
  double stick_t = 1.0;
  std::size_t n_sticks = 64;
  auto* sticks = app.add_subcommand(
      "sticks", "stick-breaking face samples (CSV replicate,i,length,increment,slope)");
  sticks->add_option("--model", model_path, "model spec JSON file")->required();
  sticks->add_option("--t", stick_t, "horizon of the stick-breaking (default 1)");
  sticks->add_option("--count", n_sticks, "sticks per replicate (default 64)");
  sticks->add_option("--reps", reps, "replicates");
  sticks->add_option("--seed", seed, "master seed");
  sticks->add_option("--out", out_path, "output file");
  sticks->callback([&] {
    const auto model = levy::load_model(model_path);
    std::string out = levy::face_points_csv_header();
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
      levy::RngStream rng(seed, rep);
      levy::append_face_points_csv(out, rep, levy::theorem1_sample(model, stick_t, n_sticks, rng));
    }
    emit(out_path, out);
  });

  // ppp ------------------------------------------------------------------------
  double theta = 1.0;
  auto* ppp = app.add_subcommand(
      "ppp", "face point process on an exponential horizon (CSV replicate,T,i,length,increment,slope)");
  ppp->add_option("--model", model_path, "model spec JSON file")->required();
  ppp->add_option("--theta", theta, "exponential rate of the horizon")->required();
  ppp->add_option("--count", n_sticks, "sticks per replicate (default 64)");
  ppp->add_option("--reps", reps, "replicates");
  ppp->add_option("--seed", seed, "master seed");
  ppp->add_option("--out", out_path, "output file");
  ppp->callback([&] {
    const auto model = levy::load_model(model_path);
    std::string out = "replicate,T,i,length,increment,slope\n";
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
      levy::RngStream rng(seed, rep);
      const auto [t, points] = levy::ppp_exponential_horizon(model, theta, n_sticks, rng);
      for (std::size_t i = 0; i < points.size(); ++i)
        out += std::to_string(rep) + "," + levy::fmt17(t) + "," + std::to_string(i + 1) + "," +
               levy::fmt17(points[i].length) + "," + levy::fmt17(points[i].increment) + "," +
               levy::fmt17(points[i].slope()) + "\n";
    }
    emit(out_path, out);
  });

  // transform --------------------------------------------------------------------
  std::string in_path;
  double u_point = 0.5;
  auto* transform = app.add_subcommand(
      "transform", "invariant path transformation at a point u (reads/writes time,value CSV)");
  transform->add_option("--in", in_path, "input path CSV (header time,value)")->required();
  transform->add_option("--u", u_point, "sampling point in the open time interval")->required();
  transform->add_option("--out", out_path, "output path CSV");
  transform->callback([&] {
    std::ifstream in(in_path);
    if (!in) throw CLI::ValidationError("cannot open " + in_path);
    const auto path = levy::parse_grid_path_csv(in);
    const auto r = levy::invariant_transform(path, u_point);
    std::fprintf(stderr, "face g=%s d=%s length=%s\n", levy::fmt17(r.face.g).c_str(),
                 levy::fmt17(r.face.d).c_str(), levy::fmt17(r.uniform_length).c_str());
    emit(out_path, levy::grid_path_csv(r.transformed));
  });

  // discover -----------------------------------------------------------------------
  std::size_t k_faces = 1;
  auto* discover = app.add_subcommand(
      "discover", "recursive size-biased face discovery (CSV i,v,g,d,length,increment,slope)");
  discover->add_option("--model", model_path, "model spec JSON file")->required();
  discover->add_option("--n", n_grid, "number of grid steps");
  discover->add_option("--k", k_faces, "faces to extract")->required();
  discover->add_option("--seed", seed, "master seed");
  discover->add_option("--stream", stream, "stream id");
  discover->add_option("--out", out_path, "output file");
  discover->callback([&] {
    const auto model = levy::load_model(model_path);
    levy::RngStream rng(seed, stream);
    const auto path = model.path_sample(1.0, n_grid, rng);
    const auto steps = levy::recursive_face_discovery(path, k_faces, rng);
    std::string out = "i,v,g,d,length,increment,slope\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& f = steps[i].face;
      out += std::to_string(i + 1) + "," + levy::fmt17(steps[i].v) + "," + levy::fmt17(f.g) +
             "," + levy::fmt17(f.d) + "," + levy::fmt17(f.length) + "," +
             levy::fmt17(f.increment) + "," + levy::fmt17(f.slope) + "\n";
    }
    emit(out_path, out);
  });

  // intensity ----------------------------------------------------------------------
  std::vector<double> t_range, x_range;
  std::string weight = "exp";
  double slope_cap = 0.0;
  auto* intensity = app.add_subcommand(
      "intensity", "intensity-measure mass of a rectangle (prints one number)");
  intensity->add_option("--model", model_path, "model spec JSON file")->required();
  intensity->add_option("--theta", theta, "rate for the exp weight (default 1)");
  intensity->add_option("--t", t_range, "time interval t1 t2")->expected(2)->required();
  intensity->add_option("--x", x_range, "increment interval x1 x2 (inf allowed)")
      ->expected(2)
      ->required();
  intensity->add_option("--weight", weight, "exp | cap | one")
      ->check(CLI::IsMember({"exp", "cap", "one"}));
  intensity->add_option("--cap", slope_cap, "slope cap for --weight cap");
  intensity->callback([&] {
    const auto model = levy::load_model(model_path);
    levy::IntensityWeight w = levy::ExpWeight{theta};
    if (weight == "cap") w = levy::SlopeCapWeight{slope_cap};
    if (weight == "one") w = levy::UnitWeight{};
    const double mass =
        levy::intensity_mass(model, t_range[0], t_range[1], x_range[0], x_range[1], w);
    std::printf("%s\n", levy::fmt17(mass).c_str());
  });

  // verify --------------------------------------------------------------------------
  std::string check_name = "all";
  int verify_exit = 0;
  auto* verify = app.add_subcommand("verify", "run named statistical checks (or 'all')");
  verify->add_option("check", check_name, "check name from the catalog, or 'all'");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  verify->add_option("--out", out_path, "JSON-lines report file (summary always on stdout)");
  auto* list_flag = verify->add_flag("--list", "list catalog names and exit");
  verify->callback([&] {
    if (*list_flag) {
      for (const auto& entry : levy::checks::catalog()) std::printf("%s\n", entry.name);
      return;
    }
    std::vector<levy::TestReport> reports;
    bool found = false;
    for (const auto& entry : levy::checks::catalog()) {
      if (check_name != "all" && check_name != entry.name) continue;
      found = true;
      const auto batch = entry.run(seed, jobs);
      reports.insert(reports.end(), batch.begin(), batch.end());
      for (const auto& r : batch) std::printf("%s\n", levy::summary_line(r).c_str());
    }
    if (!found) throw CLI::ValidationError("unknown check: " + check_name);
    std::string lines;
    for (const auto& r : reports) {
      lines += levy::to_json_line(r) + "\n";
      if (!r.pass) verify_exit = 1;
    }
    if (!out_path.empty()) levy::write_file(out_path, lines);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage and validation problems exit 2
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;  // runtime numeric errors
  }
  return verify_exit;
}
