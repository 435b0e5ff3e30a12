#include "polytess/constructions.hpp"
#include "polytess/decomposition.hpp"
#include "polytess/json_io.hpp"
#include "polytess/projection.hpp"
#include "polytess/scene.hpp"
#include "polytess/verification.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace polytess;

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << bytes;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  write_file(path, j.dump(2) + "\n");
}

const std::map<std::string, ProjectionKind> kProjectionNames = {
    {"roots2d", ProjectionKind::Roots2D},
    {"octahedral", ProjectionKind::Octahedral4},
    {"roots3d", ProjectionKind::Roots3D},
    {"axes3d-squash", ProjectionKind::Axes3DSquash},
    {"axes3d-favorite", ProjectionKind::Axes3DFavorite},
};

int run_tessellation(int n, long long samples, uint64_t seed,
                     const std::string& json_path) {
  const TessellationReport report = verify_tessellation(n, samples, seed);
  std::cout << "tessellation n=" << n << " dim=" << report.dim << "\n"
            << "  exact volume each: " << report.exact_volume_each
            << "  sum: " << report.volume_sum << "\n"
            << "  samples: " << report.sample_count
            << "  cover violations: " << report.cover_violations
            << "  multi assignments: " << report.multi_assignment_count << "\n";
  std::cout << "  per-region hits:";
  for (long long h : report.per_region_hits) std::cout << " " << h;
  std::cout << "\n  orbit match:";
  for (bool b : report.orbit_match) std::cout << " " << (b ? "yes" : "no");
  std::cout << "\n  " << (report.ok ? "ok" : "FAILED") << "\n";
  if (!json_path.empty()) write_json(json_path, report_json(report));
  return report.ok ? 0 : 1;
}

int run_cuboids(int n, long long samples, uint64_t seed,
                const std::string& json_path) {
  const TilingReport report = verify_cuboid_tiling(n, samples, seed);
  std::cout << "cuboid tiling n=" << n << " dim=" << report.dim << "\n"
            << "  samples: " << report.sample_count
            << "  violations: " << report.violations
            << "  skipped ties: " << report.skipped_ties << "\n"
            << "  centroid in all cuboids: "
            << (report.centroid_in_all ? "yes" : "no") << "\n"
            << "  ceiling cuboid inside region: "
            << (report.ceiling_face_in_region ? "yes" : "no") << "\n"
            << "  " << (report.ok ? "ok" : "FAILED") << "\n";
  if (!json_path.empty()) write_json(json_path, report_json(report));
  return report.ok ? 0 : 1;
}

int run_volume(const std::string& figure, int n, const std::string& method,
               long long samples, uint64_t seed) {
  if (method == "exact") {
    if (n > 8) throw std::invalid_argument("exact volume supports n <= 8");
    const Rational vol = figure == "pyramid" ? chain_volume(pyramid_chain(n))
                                             : chain_volume(cube_chain(n + 1));
    std::cout << vol << "\n";
    return 0;
  }
  MCEstimate est;
  if (figure == "pyramid") {
    est = mc_volume(n + 1, n + 1, samples, seed);
  } else {
    est = mc_fraction(n + 1, samples, seed,
                      [](const std::vector<uint64_t>&) { return true; });
  }
  std::printf("%.6f stderr %.6f (samples %lld, seed %llu)\n", est.estimate,
              est.std_error, est.samples,
              static_cast<unsigned long long>(est.seed));
  return 0;
}

int run_decompose(int n, const std::string& out_path) {
  const SimplexChain chain = cube_chain(n + 1);
  write_json(out_path, chain_json(chain));
  std::cout << "wrote " << chain.simplices.size() << " simplices to " << out_path
            << "\n";
  return 0;
}

FrameSpec frame_spec(const std::string& projection, const std::string& format,
                     double t, int size) {
  FrameSpec spec;
  spec.t = t;
  spec.kind = kProjectionNames.at(projection);
  spec.format = format == "obj" ? FrameFormat::Obj : FrameFormat::Svg;
  spec.size_px = size;
  return spec;
}

int run_render(int n, const std::string& projection, double t,
               const std::string& format, int size, const std::string& out_path) {
  const Scene scene = build_scene(n);
  write_file(out_path, render_frame(scene, frame_spec(projection, format, t, size)));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_animate(int n, const std::string& projection, int frames,
                const std::string& format, int size, const std::string& outdir) {
  const Scene scene = build_scene(n);
  std::filesystem::create_directories(outdir);
  const int m = n + 1;
  const int pair_count = m * (m - 1) / 2;
  for (int k = 0; k < frames; ++k) {
    FrameSpec spec = frame_spec(projection, format, double(k) / frames, size);
    spec.frames_per_interval = double(frames) / pair_count;
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04d.%s", k,
                  format == "obj" ? "obj" : "svg");
    write_file((std::filesystem::path(outdir) / name).string(),
               render_frame(scene, spec));
  }
  std::cout << "wrote " << frames << " frames to " << outdir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions, decompositions, and views of the cube,\n"
               "its diagonal pyramid, and the simplex tiling by cuboids"};
  app.require_subcommand(1);

  int n = 0;
  long long samples = 100000;
  uint64_t seed = 0;
  std::string json_path;
  std::string figure = "pyramid";
  std::string method = "exact";
  std::string out_path;
  std::string outdir;
  std::string projection = "roots2d";
  std::string format = "svg";
  double t = 0.0;
  int size = 640;
  int frames = 1;

  int rc = 0;

  CLI::App* verify = app.add_subcommand("verify", "run a verification report");
  verify->require_subcommand(1);

  CLI::App* tess = verify->add_subcommand(
      "tessellation", "pyramid orbit volumes, region match, partition sampling");
  tess->add_option("--n", n, "figure parameter n (ambient dimension n+1)")
      ->required()
      ->check(CLI::Range(0, 7));
  tess->add_option("--samples", samples, "sample count")->check(CLI::NonNegativeNumber);
  tess->add_option("--seed", seed, "PRNG seed");
  tess->add_option("--json", json_path, "write the report as JSON");
  tess->callback([&] { rc = run_tessellation(n, samples, seed, json_path); });

  CLI::App* cuboids = verify->add_subcommand(
      "cuboids", "cuboid tiling of the simplex via exact LP membership");
  cuboids->add_option("--n", n, "figure parameter n (ambient dimension n+1)")
      ->required()
      ->check(CLI::Range(0, 6));
  cuboids->add_option("--samples", samples, "sample count")
      ->check(CLI::NonNegativeNumber);
  cuboids->add_option("--seed", seed, "PRNG seed");
  cuboids->add_option("--json", json_path, "write the report as JSON");
  cuboids->callback([&] { rc = run_cuboids(n, samples, seed, json_path); });

  CLI::App* volume = app.add_subcommand("volume", "volume of a figure");
  volume->add_option("--figure", figure, "pyramid or cube")
      ->required()
      ->check(CLI::IsMember({"pyramid", "cube"}));
  volume->add_option("--n", n, "figure parameter n (exact: n <= 8)")
      ->required()
      ->check(CLI::Range(0, 20));
  volume->add_option("--method", method, "exact or mc")
      ->required()
      ->check(CLI::IsMember({"exact", "mc"}));
  volume->add_option("--samples", samples, "MC sample count")
      ->check(CLI::PositiveNumber);
  volume->add_option("--seed", seed, "PRNG seed");
  volume->callback([&] { rc = run_volume(figure, n, method, samples, seed); });

  CLI::App* decompose = app.add_subcommand(
      "decompose", "write the (n+1)! simplex chain of the (n+1)-cube as JSON");
  decompose->add_option("--n", n, "figure parameter n")
      ->required()
      ->check(CLI::Range(0, 7));
  decompose->add_option("--out", out_path, "output path")->required();
  decompose->callback([&] { rc = run_decompose(n, out_path); });

  const std::vector<std::string> projection_names = {
      "roots2d", "octahedral", "roots3d", "axes3d-squash", "axes3d-favorite"};

  CLI::App* render = app.add_subcommand("render", "render one projected frame");
  render->add_option("--n", n, "figure parameter n")
      ->required()
      ->check(CLI::Range(1, 12));
  render->add_option("--projection", projection, "projection kind")
      ->required()
      ->check(CLI::IsMember(projection_names));
  render->add_option("--t", t, "schedule time in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  render->add_option("--format", format, "svg (2-D) or obj (3-D)")
      ->check(CLI::IsMember({"svg", "obj"}));
  render->add_option("--size", size, "canvas size in pixels")
      ->check(CLI::PositiveNumber);
  render->add_option("--out", out_path, "output path")->required();
  render->callback(
      [&] { rc = run_render(n, projection, t, format, size, out_path); });

  CLI::App* animate = app.add_subcommand("animate", "render a frame sequence");
  animate->add_option("--n", n, "figure parameter n")
      ->required()
      ->check(CLI::Range(1, 12));
  animate->add_option("--projection", projection, "projection kind")
      ->required()
      ->check(CLI::IsMember(projection_names));
  animate->add_option("--frames", frames, "number of frames")
      ->required()
      ->check(CLI::PositiveNumber);
  animate->add_option("--format", format, "svg (2-D) or obj (3-D)")
      ->check(CLI::IsMember({"svg", "obj"}));
  animate->add_option("--size", size, "canvas size in pixels")
      ->check(CLI::PositiveNumber);
  animate->add_option("--outdir", outdir, "output directory")->required();
  animate->callback(
      [&] { rc = run_animate(n, projection, frames, format, size, outdir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
