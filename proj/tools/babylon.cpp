// Command-line workbench: graph statistics, brick tables, growth series,
// planarity, clique/perfect-diagonal searches, and the reference-value
// verification suite.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "babylon/bricks.hpp"
#include "babylon/edge_cache.hpp"
#include "babylon/errors.hpp"
#include "babylon/flag_complex.hpp"
#include "babylon/graph.hpp"
#include "babylon/manifest.hpp"
#include "babylon/parallel.hpp"
#include "babylon/planarity.hpp"
#include "babylon/search.hpp"
#include "babylon/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using babylon::u64;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

std::string resolve_cache_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (path.empty() || fs::path(path).is_absolute()) return path;
  if (const char* dir = std::getenv("BABYLON_CACHE_DIR")) return (fs::path(dir) / path).string();
  return path;
}

void write_output(const std::string& path, const std::string& payload) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << payload;
}

// Every command reports its run: parameters, input digests, digest of the
// timing-free payload. Written next to --out, or to an explicit --manifest.
struct RunContext {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::string> input_digests;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void note_input_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    input_digests[path] = babylon::fnv1a_hex(bytes);
  }

  void emit(const std::string& payload, const std::string& digest_payload,
            const std::optional<std::string>& out_path,
            const std::optional<std::string>& manifest_path) {
    if (out_path) {
      write_output(*out_path, payload);
    } else {
      std::cout << payload;
    }
    std::optional<std::string> mpath = manifest_path;
    if (!mpath && out_path) mpath = *out_path + ".manifest.json";
    if (mpath) {
      babylon::RunManifest m;
      m.command = command;
      m.parameters = parameters;
      m.input_digests = input_digests;
      m.wall_clock_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      m.result_digest = babylon::fnv1a_hex(digest_payload);
      babylon::write_manifest(*mpath, m);
    }
  }
};

babylon::BabylonGraph load_or_build(std::uint32_t n, const std::string& cache,
                                    std::uint32_t ceiling, RunContext& ctx) {
  if (!cache.empty()) {
    std::string path = resolve_cache_path(cache);
    babylon::EdgeCache ec = babylon::read_edge_cache(path);
    ctx.note_input_file(path);
    return babylon::graph_from_edges(ec.n, ec.edges);
  }
  return babylon::build(n, babylon::BuildOptions{.max_n = ceiling});
}

json component_json(const babylon::ComponentSummary& s) {
  return json{{"representative", s.representative},
              {"size", s.size},
              {"edges", s.edge_count},
              {"has_triangle", s.has_triangle}};
}

int cmd_stats(std::uint32_t n, const std::string& scope, bool with_betti, bool with_diameter,
              bool with_degrees, const std::string& cache, std::uint32_t ceiling,
              std::optional<std::string> out, std::optional<std::string> manifest) {
  RunContext ctx;
  ctx.command = "stats";
  ctx.parameters = {{"n", std::to_string(n)}, {"scope", scope}};
  babylon::BabylonGraph g = load_or_build(n, cache, ceiling, ctx);
  babylon::Scope sc = scope == "main" ? babylon::Scope::Main : babylon::Scope::Whole;

  json j;
  j["n"] = g.n;
  j["scope"] = scope;
  babylon::FlagComplex fc = babylon::f_vector(g, sc);
  j["f_vector"] = {fc.f[0], fc.f[1], fc.f[2], fc.f[3]};
  j["euler_characteristic"] = babylon::euler_characteristic(fc);
  if (with_betti) {
    babylon::BettiVector b = babylon::betti(g, sc);
    j["betti"] = {{"b0", b.b0},
                  {"b1", b.b1},
                  {"b2", b.b2},
                  {"rank_d1", b.rank_d1},
                  {"rank_d2", b.rank_d2},
                  {"field_modulus", b.field_modulus},
                  {"torsion_warning", b.torsion_warning}};
  }
  auto comps = babylon::component_summaries(g);
  j["component_count"] = comps.size();
  constexpr std::size_t kMaxListed = 50;  // the full census can be huge
  json comp_list = json::array();
  for (std::size_t i = 0; i < comps.size() && i < kMaxListed; ++i)
    comp_list.push_back(component_json(comps[i]));
  j["components"] = comp_list;
  j["components_truncated"] = comps.size() > kMaxListed;
  j["main_component"] = component_json(babylon::main_component(g));
  if (with_diameter) {
    j["main_diameter"] = babylon::diameter(g, babylon::main_component(g));
  }
  if (with_degrees) {
    json hist = json::object();
    for (auto [deg, count] : babylon::degree_histogram(g)) hist[std::to_string(deg)] = count;
    j["degree_histogram"] = hist;
  }
  std::string payload = j.dump(2) + "\n";
  ctx.emit(payload, payload, out, manifest);
  return kExitOk;
}

int cmd_build(std::uint32_t n, const std::string& cache, std::uint32_t ceiling,
              std::optional<std::string> manifest) {
  RunContext ctx;
  ctx.command = "build";
  ctx.parameters = {{"n", std::to_string(n)}, {"cache", cache}};
  if (n > ceiling) throw babylon::ResourceLimitError("build: n exceeds the configured ceiling");
  auto edges = babylon::edges_up_to(n);
  std::string payload = babylon::render_edge_cache(n, edges);
  std::string path = resolve_cache_path(cache);
  write_output(path, payload);
  std::cout << "wrote " << edges.size() << " edges to " << path << "\n";
  ctx.emit("", payload, std::nullopt, manifest ? manifest : std::optional(path + ".manifest.json"));
  return kExitOk;
}

int cmd_bricks(std::uint32_t max, bool primitive, std::optional<std::string> out,
               std::optional<std::string> manifest) {
  RunContext ctx;
  ctx.command = "bricks";
  ctx.parameters = {{"max", std::to_string(max)}, {"primitive", primitive ? "1" : "0"}};
  auto bricks = babylon::enumerate_bricks(max, primitive);
  std::string payload = babylon::bricks_csv(bricks);
  ctx.emit(payload, payload, out, manifest);
  std::cerr << bricks.size() << (primitive ? " primitive" : "") << " bricks with sides <= " << max
            << "\n";
  return kExitOk;
}

int cmd_growth(std::uint32_t max, std::uint32_t step, std::uint32_t ceiling,
               std::optional<std::string> out, std::optional<std::string> manifest) {
  RunContext ctx;
  ctx.command = "growth";
  ctx.parameters = {{"max", std::to_string(max)}, {"step", std::to_string(step)}};
  auto rows = babylon::growth_series(max, step, babylon::BuildOptions{.max_n = ceiling});
  std::string payload = babylon::growth_csv(rows);
  ctx.emit(payload, payload, out, manifest);
  return kExitOk;
}

int cmd_planarity(std::uint32_t n, std::uint32_t ceiling) {
  babylon::BabylonGraph g = babylon::build(n, babylon::BuildOptions{.max_n = ceiling});
  babylon::PlanarityVerdict v = babylon::is_planar(g);
  std::cout << (v.planar ? "planar" : "non-planar") << "\n";
  if (v.witness) {
    std::cout << "witness edges:";
    for (const babylon::Edge& e : *v.witness) std::cout << " " << e.a << "-" << e.b;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_search_k4(std::uint32_t n, u64 wmax, double epsilon, std::uint32_t ceiling,
                  std::optional<std::string> out, std::optional<std::string> manifest) {
  RunContext ctx;
  ctx.command = "search k4";
  ctx.parameters = {{"n", std::to_string(n)},
                    {"wmax", std::to_string(wmax)},
                    {"epsilon", std::to_string(epsilon)}};
  babylon::ScanOptions opts;
  opts.epsilon = epsilon;
  babylon::SearchReport report =
      babylon::k4_hunt(n, wmax, opts, babylon::BuildOptions{.max_n = ceiling});
  ctx.emit(babylon::report_json(report), babylon::report_json(report, false), out, manifest);
  return kExitOk;
}

int cmd_search_perfect(const std::string& family, std::int64_t smax, std::int64_t tmax,
                       double epsilon, std::optional<std::string> out,
                       std::optional<std::string> manifest) {
  RunContext ctx;
  ctx.command = "search perfect";
  ctx.parameters = {{"family", family},
                    {"smax", std::to_string(smax)},
                    {"tmax", std::to_string(tmax)},
                    {"epsilon", std::to_string(epsilon)}};
  babylon::BrickFamily fam;
  if (family == "saunderson")
    fam = babylon::BrickFamily::saunderson;
  else if (family == "euler_mn")
    fam = babylon::BrickFamily::euler_mn;
  else if (family == "composed_st")
    fam = babylon::BrickFamily::composed_st;
  else
    throw CLI::ValidationError("family must be saunderson|euler_mn|composed_st");
  babylon::ScanOptions opts;
  opts.epsilon = epsilon;
  babylon::SearchReport report = babylon::perfect_hunt(fam, smax, tmax, opts);
  ctx.emit(babylon::report_json(report), babylon::report_json(report, false), out, manifest);
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint32_t isolated_limit) {
  if (suite != "paper") throw CLI::ValidationError("unknown suite: " + suite);
  babylon::VerifyOptions opts;
  opts.isolated_scan_limit = isolated_limit;
  auto results = babylon::run_reference_suite(opts);
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.criterion << ". " << r.name;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << " (" << r.seconds << "s)\n";
    for (const std::string& w : r.warnings) std::cout << "       [WARN] " << w << "\n";
  }
  bool ok = babylon::all_passed(results);
  std::cout << (ok ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  return ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the square-sum-of-legs graph, its clique complex, and the "
               "integer-cuboid searches around it"};
  app.require_subcommand(1);

  unsigned threads = 0;
  std::uint32_t ceiling = 1'000'000;
  app.add_option("--threads", threads, "cap worker threads (0 = hardware)");
  app.add_option("--ceiling", ceiling, "vertex-count resource guard");

  // stats
  auto* stats = app.add_subcommand("stats", "f-vector, components, Betti numbers, diameter");
  std::uint32_t stats_n = 1000;
  std::string stats_scope = "whole", stats_cache;
  bool stats_betti = false, stats_diam = false, stats_degrees = false;
  std::string stats_out, stats_manifest;
  stats->add_option("--n", stats_n, "vertex count")->required();
  stats->add_option("--scope", stats_scope, "whole|main")
      ->check(CLI::IsMember({"whole", "main"}));
  stats->add_flag("--betti", stats_betti, "include Betti numbers");
  stats->add_flag("--diameter", stats_diam, "include exact main-component diameter");
  stats->add_flag("--degrees", stats_degrees, "include degree histogram");
  stats->add_option("--cache", stats_cache, "edge cache file to load instead of building");
  stats->add_option("--out", stats_out, "write JSON here (default stdout)");
  stats->add_option("--manifest", stats_manifest, "manifest path");

  // build
  auto* build_cmd = app.add_subcommand("build", "build the graph and write the edge cache");
  std::uint32_t build_n = 1000;
  std::string build_cache;
  build_cmd->add_option("--n", build_n, "vertex count")->required();
  build_cmd->add_option("--cache", build_cache, "edge cache path")->required();

  // bricks
  auto* bricks_cmd = app.add_subcommand("bricks", "integer-diagonal cuboid table");
  std::uint32_t bricks_max = 1000;
  bool bricks_primitive = false;
  std::string bricks_out, bricks_manifest;
  bricks_cmd->add_option("--max", bricks_max, "side bound")->required();
  bricks_cmd->add_flag("--primitive", bricks_primitive, "primitive bricks only");
  bricks_cmd->add_option("--out", bricks_out, "write CSV here (default stdout)");
  bricks_cmd->add_option("--manifest", bricks_manifest, "manifest path");

  // growth
  auto* growth_cmd = app.add_subcommand("growth", "normalized edge/triangle growth series");
  std::uint32_t growth_max = 25000, growth_step = 1000;
  std::string growth_out, growth_manifest;
  growth_cmd->add_option("--max", growth_max, "largest n")->required();
  growth_cmd->add_option("--step", growth_step, "n increment")->required();
  growth_cmd->add_option("--out", growth_out, "write CSV here (default stdout)");
  growth_cmd->add_option("--manifest", growth_manifest, "manifest path");

  // planarity
  auto* planarity_cmd = app.add_subcommand("planarity", "left-right planarity verdict");
  std::uint32_t planarity_n = 95;
  planarity_cmd->add_option("--n", planarity_n, "vertex count")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "clique and perfect-diagonal scans");
  search_cmd->require_subcommand(1);
  auto* k4_cmd = search_cmd->add_subcommand("k4", "extend every triangle to a 4-clique");
  std::uint32_t k4_n = 1000;
  u64 k4_wmax = 100000;
  double k4_eps = 1e-3;
  std::string k4_out, k4_manifest;
  k4_cmd->add_option("--n", k4_n, "triangle source graph size")->required();
  k4_cmd->add_option("--wmax", k4_wmax, "scan bound for the fourth vertex")->required();
  k4_cmd->add_option("--epsilon", k4_eps, "screening threshold");
  k4_cmd->add_option("--out", k4_out, "write JSON here (default stdout)");
  k4_cmd->add_option("--manifest", k4_manifest, "manifest path");
  auto* perfect_cmd = search_cmd->add_subcommand("perfect", "perfect-diagonal family scan");
  std::string perfect_family = "composed_st";
  std::int64_t perfect_smax = 200, perfect_tmax = 200;
  double perfect_eps = 1e-3;
  std::string perfect_out, perfect_manifest;
  perfect_cmd->add_option("--family", perfect_family, "saunderson|euler_mn|composed_st")
      ->check(CLI::IsMember({"saunderson", "euler_mn", "composed_st"}));
  perfect_cmd->add_option("--smax", perfect_smax, "first parameter bound")->required();
  perfect_cmd->add_option("--tmax", perfect_tmax, "second parameter bound")->required();
  perfect_cmd->add_option("--epsilon", perfect_eps, "screening threshold");
  perfect_cmd->add_option("--out", perfect_out, "write JSON here (default stdout)");
  perfect_cmd->add_option("--manifest", perfect_manifest, "manifest path");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "reference-value verification suite");
  std::string verify_suite = "paper";
  std::uint32_t verify_isolated = 1'000'000;
  verify_cmd->add_option("--suite", verify_suite, "suite name (paper)");
  verify_cmd->add_option("--isolated-limit", verify_isolated,
                         "ceiling for the isolated-vertex sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  babylon::set_thread_cap(threads);
  auto opt = [](const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
  };

  try {
    if (stats->parsed())
      return cmd_stats(stats_n, stats_scope, stats_betti, stats_diam, stats_degrees, stats_cache,
                       ceiling, opt(stats_out), opt(stats_manifest));
    if (build_cmd->parsed()) return cmd_build(build_n, build_cache, ceiling, std::nullopt);
    if (bricks_cmd->parsed())
      return cmd_bricks(bricks_max, bricks_primitive, opt(bricks_out), opt(bricks_manifest));
    if (growth_cmd->parsed())
      return cmd_growth(growth_max, growth_step, ceiling, opt(growth_out), opt(growth_manifest));
    if (planarity_cmd->parsed()) return cmd_planarity(planarity_n, ceiling);
    if (search_cmd->parsed()) {
      if (k4_cmd->parsed())
        return cmd_search_k4(k4_n, k4_wmax, k4_eps, ceiling, opt(k4_out), opt(k4_manifest));
      if (perfect_cmd->parsed())
        return cmd_search_perfect(perfect_family, perfect_smax, perfect_tmax, perfect_eps,
                                  opt(perfect_out), opt(perfect_manifest));
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_suite, verify_isolated);
  } catch (const babylon::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
