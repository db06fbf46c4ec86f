#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmet/addresses.hpp"
#include "tmet/convergence.hpp"
#include "tmet/generators.hpp"
#include "tmet/json_io.hpp"
#include "tmet/oracles.hpp"

namespace {

using nlohmann::json;

void fail_json(const json& diag) {
  std::cerr << diag.dump() << "\n";
  std::exit(1);
}

tmet::SpacePtr load_ptr(const std::string& path, double tol) {
  return std::make_shared<const tmet::FiniteTimedMetricSpace>(
      tmet::load_valid_space(path, tol));
}

tmet::NetHierarchy hierarchy_for(tmet::SpacePtr X, int depth) {
  std::vector<tmet::SpacePtr> one = {X};
  if (depth <= 0) depth = tmet::stability_depth(one);
  return tmet::build_hierarchy(X, tmet::plan_for_family(one, depth));
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << doc.dump(2) << "\n";
}

void print_value(double v) {
  std::cout << std::setprecision(17) << v << "\n";
}

int run_validate(const std::string& path, double tol, bool repair,
                 const std::string& out_path) {
  const tmet::RawSpace raw = tmet::read_space_file(path);
  tmet::ValidateOptions opts;
  opts.repair_triangle = repair;
  const auto outcome = tmet::validate_space(raw, tol, opts);
  if (!outcome.ok())
    fail_json({{"file", path},
               {"violations", tmet::violations_to_json(outcome.violations)}});
  const auto& X = *outcome.space;
  std::cout << X.name << ": " << X.size() << " points, diameter "
            << std::setprecision(17) << tmet::diameter(X) << ", tau_max "
            << X.tau_max << "\n";
  if (!out_path.empty()) tmet::write_space_file(out_path, X);
  return 0;
}

int run_net(const std::string& path, int depth, double tol, bool normalize,
            const std::string& out_path) {
  tmet::SpacePtr X = load_ptr(path, tol);
  if (normalize) X = tmet::as_ptr(tmet::normalize_space(*X));
  const auto H = hierarchy_for(X, depth);
  const auto report = tmet::verify_hierarchy(H);
  if (!report.empty()) {
    json rows = json::array();
    for (const auto& v : report.items)
      rows.push_back(json{{"level", v.level}, {"gap", v.gap}});
    fail_json({{"file", path}, {"hierarchy_defects", rows}});
  }
  emit(tmet::hierarchy_to_json(H), out_path);
  return 0;
}

int run_address(const std::string& path, int depth, double tol, int point,
                const std::string& chain) {
  tmet::SpacePtr X = load_ptr(path, tol);
  const auto H = hierarchy_for(X, depth);
  json doc;
  if (!chain.empty()) {
    const auto res = tmet::resolve(H, tmet::Address::parse(chain));
    doc = {{"address", chain},
           {"point", res.point},
           {"label", X->points.at(res.point)},
           {"error_radius", res.error_radius}};
  } else {
    const auto alpha = tmet::address_of(H, point);
    const auto back = tmet::resolve(H, alpha);
    doc = {{"point", point},
           {"label", X->points.at(point)},
           {"address", alpha.text()},
           {"round_trip", back.point == point}};
  }
  std::cout << doc.dump() << "\n";
  return 0;
}

int run_embed(const std::string& path, int depth, double tol, bool untimed,
              const std::string& out_path) {
  tmet::SpacePtr X = load_ptr(path, tol);
  const auto H = hierarchy_for(X, depth);
  const auto frame = tmet::EmbeddingFrame::canonical(H);
  std::vector<tmet::SupVector> cloud;
  cloud.reserve(X->size());
  for (int x = 0; x < X->size(); ++x)
    cloud.push_back(untimed ? tmet::frechet(frame, x)
                            : tmet::timed_frechet(frame, x));
  if (out_path.empty()) {
    tmet::write_cloud_csv(std::cout, *X, cloud);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  tmet::write_cloud_csv(out, *X, cloud);
  return 0;
}

int run_tdist(const std::string& a, const std::string& b, int depth,
              double tol, bool normalize) {
  tmet::SpacePtr X = load_ptr(a, tol);
  tmet::SpacePtr Y = load_ptr(b, tol);
  if (normalize) {
    X = tmet::as_ptr(tmet::normalize_space(*X));
    Y = tmet::as_ptr(tmet::normalize_space(*Y));
  }
  print_value(tmet::timed_hausdorff_ub(X, Y, depth));
  return 0;
}

int run_limit(const std::string& manifest_path, int depth, double tol,
              bool untimed, const tmet::SynthesisOptions& opts,
              const std::string& out_path) {
  const auto manifest = tmet::read_manifest_file(manifest_path);
  const auto spaces = tmet::load_family(manifest, tol);
  const auto family = tmet::embed_family(spaces, depth, !untimed);
  const auto limit = tmet::synthesize_limit(family, opts);
  json doc = tmet::limit_to_json(limit);
  json gaps = json::array();
  for (int j = 1; j <= family.members(); ++j) {
    const auto g = tmet::uniform_address_gap(family, limit, j);
    gaps.push_back({{"member", j},
                    {"time_gap", g.sup_time_gap},
                    {"dist_gap", g.sup_dist_gap},
                    {"vector_gap", g.sup_vector_gap},
                    {"hausdorff", tmet::hausdorff_to_limit(family, limit, j)}});
  }
  doc["gaps"] = gaps;
  emit(doc, out_path);
  return 0;
}

int run_oracle(const std::string& mode, const std::string& a,
               const std::string& b, double tol) {
  const auto X = tmet::load_valid_space(a, tol);
  const auto Y = tmet::load_valid_space(b, tol);
  if (mode == "gh")
    print_value(tmet::gh_exact(X, Y));
  else if (mode == "kgh")
    print_value(tmet::exact_kappa_gh(X, Y));
  else
    print_value(tmet::exact_kappa_th(X, Y));
  return 0;
}

int run_aa(const std::string& manifest_path, double lipschitz, double fmax,
           int depth, double tol, const std::string& out_path) {
  const auto manifest = tmet::read_manifest_file(manifest_path);
  if (!manifest.functions)
    throw std::runtime_error(manifest_path + ": manifest carries no functions");
  const auto spaces = tmet::load_family(manifest, tol);
  double K = lipschitz;
  if (K <= 0 && manifest.lipschitz_bound) K = *manifest.lipschitz_bound;
  if (K <= 0)
    throw std::runtime_error("no Lipschitz bound: pass --lipschitz or put K in the manifest");
  const auto& F = *manifest.functions;
  double bound = fmax;
  if (bound <= 0)
    for (const auto& row : F)
      for (double v : row) bound = std::max(bound, v);
  const auto result = tmet::arzela_ascoli(spaces, F, K, bound, depth);
  json doc = {{"classes", result.synthesis.class_count()},
              {"limit_function", result.limit_function},
              {"gaps", result.gaps},
              {"max_oscillation", result.synthesis.diagnostics.max_oscillation}};
  emit(doc, out_path);
  return 0;
}

int run_gen(const std::string& kind, int n, double scale, int grid,
            double height, std::uint64_t seed, bool untimed, int members,
            const std::string& law_text, const std::string& out_path) {
  tmet::FamilySpec spec;
  spec.generator = kind;
  spec.n = kind == "diamond" ? grid : n;
  spec.members = members;
  spec.law = tmet::scale_law_from_text(law_text);
  spec.seed = seed;

  auto check = [](const tmet::FiniteTimedMetricSpace& X) {
    const auto outcome = tmet::validate_space(tmet::RawSpace::from(X), 1e-9);
    if (!outcome.ok())
      fail_json({{"generator_defects",
                  tmet::violations_to_json(outcome.violations)}});
  };

  if (members > 1) {
    if (out_path.empty())
      throw std::runtime_error("family output needs --out as a path prefix");
    const auto family = tmet::gen_family(spec);
    json paths = json::array();
    for (int j = 1; j <= members; ++j) {
      check(*family[j - 1]);
      const std::string member_path = out_path + "_" + std::to_string(j) + ".json";
      tmet::write_space_file(member_path, *family[j - 1]);
      paths.push_back(member_path);
    }
    std::ofstream out(out_path + "_manifest.json");
    if (!out) throw std::runtime_error("cannot write " + out_path + "_manifest.json");
    out << json{{"spaces", paths}}.dump(2) << "\n";
    std::cout << out_path + "_manifest.json" << "\n";
    return 0;
  }

  tmet::FiniteTimedMetricSpace X =
      kind == "cycle"      ? tmet::gen_cycle(n, scale)
      : kind == "interval" ? tmet::gen_interval(n, scale)
      : kind == "diamond"  ? tmet::gen_minkowski_diamond(grid, height)
                           : tmet::gen_random(n, seed, !untimed);
  check(X);
  if (out_path.empty()) {
    std::cout << tmet::space_to_json(X).dump(2) << "\n";
    return 0;
  }
  tmet::write_space_file(out_path, X);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"timed metric space workbench"};
  app.require_subcommand(1);

  std::string path, path_b, out_path, chain, mode, law_text = "const";
  int depth = 0, point = 0, grid = 3, n = 8, members = 1;
  double tol = 0.0, scale = 1.0, height = 1.0, lipschitz = 0.0, fmax = 0.0;
  std::uint64_t seed = 0;
  bool repair = false, normalize = false, untimed = false;
  tmet::SynthesisOptions synth;

  auto* validate = app.add_subcommand("validate", "check a space file");
  validate->add_option("space", path)->required();
  validate->add_option("--tol", tol, "validation tolerance");
  validate->add_flag("--repair", repair, "shortest-path triangle repair");
  validate->add_option("--out", out_path, "write the validated space");

  auto* net = app.add_subcommand("net", "build a net hierarchy");
  net->add_option("space", path)->required();
  net->add_option("--depth", depth, "levels; 0 picks the stability depth");
  net->add_option("--tol", tol);
  net->add_flag("--normalize", normalize, "rescale to unit diameter first");
  net->add_option("--out", out_path);

  auto* address = app.add_subcommand("address", "address a point or resolve a chain");
  address->add_option("space", path)->required();
  address->add_option("--depth", depth);
  address->add_option("--tol", tol);
  auto* point_opt = address->add_option("--point", point, "point index to address");
  auto* chain_opt = address->add_option("--resolve", chain, "chain like 1.2.1");
  point_opt->excludes(chain_opt);

  auto* embed = app.add_subcommand("embed", "write the coordinate cloud");
  embed->add_option("space", path)->required();
  embed->add_option("--depth", depth);
  embed->add_option("--tol", tol);
  embed->add_flag("--untimed", untimed, "drop the time slot");
  embed->add_option("--out", out_path, "CSV path; stdout when absent");

  auto* tdist = app.add_subcommand("tdist", "cloud Hausdorff distance of two spaces");
  tdist->add_option("a", path)->required();
  tdist->add_option("b", path_b)->required();
  tdist->add_option("--depth", depth);
  tdist->add_option("--tol", tol);
  tdist->add_flag("--normalize", normalize);

  auto* limit = app.add_subcommand("limit", "synthesize a family limit");
  limit->add_option("manifest", path)->required();
  limit->add_option("--depth", depth);
  limit->add_option("--tol", tol);
  limit->add_option("--window", synth.tail_window, "tail window for drift checks");
  limit->add_option("--glue", synth.delta_glue, "class glue radius");
  limit->add_option("--tol-cauchy", synth.tol_cauchy, "drift report threshold");
  limit->add_flag("--untimed", untimed);
  limit->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "exact reference distances");
  oracle->add_option("mode", mode)->required()->check(
      CLI::IsMember({"gh", "kgh", "kth"}));
  oracle->add_option("a", path)->required();
  oracle->add_option("b", path_b)->required();
  oracle->add_option("--tol", tol);

  auto* aa = app.add_subcommand("aa", "function-family limit");
  aa->add_option("manifest", path)->required();
  aa->add_option("--lipschitz", lipschitz, "Lipschitz bound K");
  aa->add_option("--fmax", fmax, "uniform bound; 0 reads it off the data");
  aa->add_option("--depth", depth);
  aa->add_option("--tol", tol);
  aa->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "write a generated space or family");
  gen->add_option("kind", mode)->required()->check(
      CLI::IsMember({"cycle", "interval", "diamond", "random"}));
  gen->add_option("-n,--points", n, "point count");
  gen->add_option("--scale", scale);
  gen->add_option("--grid", grid, "diamond grid side");
  gen->add_option("--height", height, "diamond time extent");
  auto* seed_opt = gen->add_option("--seed", seed, "random generator seed");
  gen->add_flag("--untimed", untimed, "constant zero time");
  gen->add_option("--members", members, "family length; writes a manifest");
  gen->add_option("--law", law_text, "family scale law: 1, 1/j, 1+1/j");
  gen->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return run_validate(path, tol, repair, out_path);
    if (*net) return run_net(path, depth, tol, normalize, out_path);
    if (*address) {
      if (chain.empty() && point_opt->count() == 0) {
        std::cerr << "address needs --point or --resolve\n";
        return 2;
      }
      return run_address(path, depth, tol, point, chain);
    }
    if (*embed) return run_embed(path, depth, tol, untimed, out_path);
    if (*tdist) return run_tdist(path, path_b, depth, tol, normalize);
    if (*limit) return run_limit(path, depth, tol, untimed, synth, out_path);
    if (*oracle) return run_oracle(mode, path, path_b, tol);
    if (*aa) return run_aa(path, lipschitz, fmax, depth, tol, out_path);
    if (*gen) {
      if (mode == "random" && seed_opt->count() == 0) {
        std::cerr << "gen random needs an explicit --seed\n";
        return 2;
      }
      return run_gen(mode, n, scale, grid, height, seed, untimed, members,
                     law_text, out_path);
    }
  } catch (const std::exception& e) {
    fail_json({{"error", e.what()}});
  }
  return 2;
}
