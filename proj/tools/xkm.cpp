// Command line front end: dataset generators, tree fitting, evaluation,
// Graphviz export and a small benchmark driver.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xkm/bench.hpp"
#include "xkm/cost.hpp"
#include "xkm/datasets.hpp"
#include "xkm/id3.hpp"
#include "xkm/imm.hpp"
#include "xkm/io.hpp"
#include "xkm/oracles.hpp"
#include "xkm/reference.hpp"
#include "xkm/runtime.hpp"
#include "xkm/two_cut.hpp"
#include "xkm/types.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct GenOptions {
  std::string family;
  int k = 3;
  int d = 2;
  double v = 10.0;
  int n = 1000;
  double separation = 10.0;
  double jitter = 0.5;
  int n_per_blob = 500;
  double spread = 0.1;
  unsigned long long seed = 0;
  int max_retries = 50;
  std::string out;
  std::string labels_out;
};

struct FitOptions {
  std::string algo;
  std::string in;
  std::string objective = "means";
  int k = 0;
  std::string init = "kmeanspp";
  std::string centers;
  bool no_refine = false;
  unsigned long long seed = 0;
  int max_iters = 100;
  double tol = 1e-6;
  int leaves = 0;
  std::string labels;
  std::string out;
  std::string stats_out;
};

struct EvalOptions {
  std::string model;
  std::string in;
  std::string reference;
};

struct ExportOptions {
  std::string model;
  std::string out;
};

struct BenchOptions {
  std::vector<int> sizes;
  int d = 32;
  int k = 16;
  int reps = 3;
  unsigned long long seed = 0;
  double separation = 10.0;
};

int run_gen(const GenOptions& opt) {
  xkm::DataMatrix x(0, 0);
  xkm::Labeling labels;
  if (opt.family == "basis") {
    auto data = xkm::gen_basis(opt.k);
    x = std::move(data.x);
    labels = std::move(data.labels);
  } else if (opt.family == "lb2") {
    auto data = xkm::gen_two_cluster_lb(opt.d);
    x = std::move(data.x);
    labels = std::move(data.labels);
  } else if (opt.family == "codeword") {
    auto data = xkm::gen_codeword(opt.k, opt.seed, opt.max_retries);
    x = std::move(data.x);
    labels = std::move(data.labels);
  } else if (opt.family == "id3fail") {
    auto data = xkm::gen_id3_failure(opt.v, opt.n_per_blob, opt.spread, opt.seed);
    x = std::move(data.x);
    labels = std::move(data.labels);
  } else {
    auto data = xkm::gen_mixture(opt.k, opt.d, opt.n, opt.separation, opt.jitter, opt.seed);
    x = std::move(data.x);
    labels = std::move(data.labels);
  }

  xkm::write_csv_file(opt.out, x);
  if (!opt.labels_out.empty()) xkm::write_labels_file(opt.labels_out, labels);

  ordered_json summary;
  summary["family"] = opt.family;
  summary["n"] = x.rows;
  summary["d"] = x.cols;
  summary["seed"] = opt.seed;
  std::cout << summary.dump() << "\n";
  return 0;
}

// Accepts either a plain CSV of center rows or a centers model JSON as
// written by `fit --algo kmeans`.
xkm::CenterSet load_centers_file(const std::string& path, xkm::Objective objective) {
  const auto text = xkm::read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto model = ordered_json::parse(text, nullptr, false);
    if (model.is_discarded() || model.value("model", "") != "centers")
      throw xkm::err::bad_model(path + ": expected a centers model or a CSV of centers");
    auto rows = model.at("centers").get<std::vector<std::vector<double>>>();
    return xkm::make_center_set(xkm::validate_dataset(rows), objective);
  }
  return xkm::make_center_set(xkm::read_csv_file(path), objective);
}

xkm::CenterSet fit_reference_centers(const xkm::DataMatrix& x, const FitOptions& opt,
                                     xkm::Objective objective) {
  if (opt.init == "file") {
    if (opt.centers.empty()) throw xkm::err::io("--init file needs --centers");
    return load_centers_file(opt.centers, objective);
  }
  if (opt.k < 2) throw xkm::err::k_too_large(opt.k, x.rows);
  auto seeded = xkm::kmeanspp_seed(x, opt.k, objective, opt.seed);
  if (opt.no_refine) return seeded;
  return xkm::lloyd_refine(x, seeded, opt.max_iters, opt.tol).centers;
}

ordered_json imm_node_report(const xkm::TreeNode* node, const xkm::CenterSet& centers) {
  ordered_json j;
  if (node->is_leaf()) {
    j["leaf"] = node->leaf_label;
    return j;
  }
  j["feature"] = node->feature;
  j["threshold"] = node->threshold;
  j["mistakes"] = node->mistakes;
  j["surviving_centers"] = node->surviving_centers;
  auto [diam_l1, diam_l2sq] = xkm::bounding_box_diameters(centers, node->surviving_centers);
  j["diam_l1"] = diam_l1;
  j["diam_l2sq"] = diam_l2sq;
  j["left"] = imm_node_report(node->left.get(), centers);
  j["right"] = imm_node_report(node->right.get(), centers);
  return j;
}

int run_fit(const FitOptions& opt) {
  auto objective = xkm::objective_from_name(opt.objective);
  auto x = xkm::read_csv_file(opt.in);
  std::string stats_path = opt.stats_out.empty() ? opt.out + ".stats.json" : opt.stats_out;

  auto start = std::chrono::steady_clock::now();
  ordered_json stats;
  ordered_json summary;
  summary["algo"] = opt.algo;
  summary["objective"] = xkm::objective_name(objective);

  if (opt.algo == "imm") {
    auto centers = fit_reference_centers(x, opt, objective);
    xkm::ImmStats imm_stats;
    auto tree = xkm::imm_fit(x, centers, &imm_stats);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto report = xkm::cost_of_tree(x, tree);
    xkm::write_tree_file(opt.out, tree);

    stats["depth"] = imm_stats.depth;
    stats["total_mistakes"] = imm_stats.total_mistakes;
    stats["mistakes_per_node"] = imm_stats.mistakes_per_node;
    stats["cost"] = report.total_cost;
    stats["reference_cost"] = xkm::cost_of_centers(x, centers);
    stats["seconds"] = seconds;
    stats["root"] = imm_node_report(tree.root.get(), centers);
    summary["k"] = tree.k;
    summary["cost"] = report.total_cost;
    summary["seconds"] = seconds;
  } else if (opt.algo == "twocut") {
    auto cut = objective == xkm::Objective::means ? xkm::best_cut_means(x) : xkm::best_cut_medians(x);
    if (!opt.labels.empty()) {
      auto reference = xkm::read_labels_file(opt.labels);
      cut.changes = xkm::change_count(x, reference, cut.feature, cut.threshold);
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    xkm::write_text_file(opt.out, xkm::cut_to_json(cut, objective));

    stats["feature"] = cut.feature;
    stats["threshold"] = cut.threshold;
    stats["cost"] = cut.cost;
    stats["seconds"] = seconds;
    summary["k"] = 2;
    summary["cost"] = cut.cost;
    summary["seconds"] = seconds;
  } else if (opt.algo == "kmeans") {
    if (opt.k < 2) throw xkm::err::k_too_large(opt.k, x.rows);
    auto seeded = opt.init == "file" ? fit_reference_centers(x, opt, objective)
                                     : xkm::kmeanspp_seed(x, opt.k, objective, opt.seed);
    auto result = xkm::lloyd_refine(x, seeded, opt.max_iters, opt.tol);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    ordered_json model;
    model["model"] = "centers";
    model["objective"] = xkm::objective_name(objective);
    model["k"] = result.centers.k();
    auto rows = ordered_json::array();
    for (int c = 0; c < result.centers.k(); ++c) {
      auto row = result.centers.centers.row(c);
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    model["centers"] = rows;
    xkm::write_text_file(opt.out, model.dump(2) + "\n");

    stats["iterations"] = result.iterations;
    stats["cost_history"] = result.cost_history;
    stats["cost"] = result.cost_history.back();
    stats["seconds"] = seconds;
    summary["k"] = result.centers.k();
    summary["cost"] = result.cost_history.back();
    summary["seconds"] = seconds;
  } else if (opt.algo == "id3") {
    if (opt.leaves < 1) throw xkm::err::io("--leaves must be at least 1 for id3");
    xkm::Labeling labels;
    if (!opt.labels.empty()) {
      labels = xkm::read_labels_file(opt.labels);
    } else {
      if (opt.k < 2) throw xkm::err::io("id3 needs --labels or --k to derive labels");
      auto seeded = xkm::kmeanspp_seed(x, opt.k, objective, opt.seed);
      labels = xkm::lloyd_refine(x, seeded, opt.max_iters, opt.tol).labels;
    }
    auto tree = xkm::id3_fit(x, labels, opt.leaves, objective);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto report = xkm::cost_of_tree(x, tree);
    xkm::write_tree_file(opt.out, tree);

    stats["depth"] = tree.depth();
    stats["leaves"] = tree.leaf_count();
    stats["cost"] = report.total_cost;
    stats["seconds"] = seconds;
    summary["k"] = tree.k;
    summary["cost"] = report.total_cost;
    summary["seconds"] = seconds;
  } else {
    throw CLI::ValidationError("--algo", "unknown algorithm: " + opt.algo);
  }

  xkm::write_text_file(stats_path, stats.dump(2) + "\n");
  std::cerr << "wrote " << opt.out << " and " << stats_path << "\n";
  std::cout << summary.dump() << "\n";
  return 0;
}

int run_eval(const EvalOptions& opt) {
  auto x = xkm::read_csv_file(opt.in);
  auto text = xkm::read_text_file(opt.model);
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw xkm::err::bad_model(std::string("invalid JSON: ") + e.what());
  }
  std::string kind = j.value("model", "tree");

  ordered_json out;
  out["model"] = kind;
  xkm::CostReport report;
  xkm::Objective objective = xkm::Objective::means;
  int tree_depth = -1;
  int tree_k = 0;

  if (kind == "tree") {
    auto tree = xkm::tree_from_json(text);
    objective = tree.objective;
    report = xkm::cost_of_tree(x, tree);
    tree_depth = tree.depth();
    tree_k = tree.k;
  } else if (kind == "cut") {
    objective = xkm::objective_from_name(j.at("objective").get<std::string>());
    auto root = std::make_unique<xkm::TreeNode>();
    root->feature = j.at("feature").get<int>();
    root->threshold = j.at("threshold").get<double>();
    root->left = std::make_unique<xkm::TreeNode>();
    root->left->leaf_label = 0;
    root->right = std::make_unique<xkm::TreeNode>();
    root->right->leaf_label = 1;
    xkm::ThresholdTree as_tree(objective, 2, std::move(root));
    report = xkm::cost_of_tree(x, as_tree);
    tree_k = 2;
  } else if (kind == "centers") {
    objective = xkm::objective_from_name(j.at("objective").get<std::string>());
    auto rows = j.at("centers").get<std::vector<std::vector<double>>>();
    auto centers = xkm::make_center_set(xkm::validate_dataset(rows), objective);
    auto labels = xkm::assign_labels(x, centers);
    report.per_cluster_cost.assign(static_cast<size_t>(centers.k()), 0.0);
    for (int p = 0; p < x.rows; ++p)
      report.per_cluster_cost[labels[p]] +=
          xkm::objective_dist(x.row(p), centers.centers.row(labels[p]), objective);
    report.total_cost = xkm::cost_of_centers(x, centers);
    tree_k = centers.k();
  } else {
    throw xkm::err::bad_model("unknown model kind: " + kind);
  }

  if (!opt.reference.empty()) {
    auto centers = load_centers_file(opt.reference, objective);
    report.set_reference(xkm::cost_of_centers(x, centers));
  }

  out["objective"] = xkm::objective_name(objective);
  out["k"] = tree_k;
  out["cost"] = report.total_cost;
  out["per_cluster_cost"] = report.per_cluster_cost;
  if (report.reference_cost) out["reference_cost"] = *report.reference_cost;
  if (report.ratio) out["ratio"] = *report.ratio;
  if (kind == "tree" && tree_depth >= 0) {
    double bound = objective == xkm::Objective::medians
                       ? 2.0 * tree_depth + 1.0
                       : 8.0 * static_cast<double>(tree_depth) * tree_k + 2.0;
    out["ratio_bound"] = bound;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_export(const ExportOptions& opt) {
  auto tree = xkm::read_tree_file(opt.model);
  auto dot = xkm::tree_to_dot(tree);
  if (opt.out.empty()) {
    std::cout << dot;
  } else {
    xkm::write_text_file(opt.out, dot);
    std::cerr << "wrote " << opt.out << "\n";
  }
  return 0;
}

int run_bench_cmd(const BenchOptions& opt) {
  auto rows = xkm::run_bench(opt.sizes, opt.d, opt.k, opt.reps, opt.seed, opt.separation);
  std::cout << xkm::bench_csv(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explainable clustering with threshold trees"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker thread cap (default: XKM_THREADS or 1)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a dataset as CSV");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--family", gen.family, "basis|lb2|codeword|id3fail|mixture")->required();
  gen_cmd->add_option("--k", gen.k, "number of clusters");
  gen_cmd->add_option("--d", gen.d, "dimension");
  gen_cmd->add_option("--v", gen.v, "outlier height (id3fail)");
  gen_cmd->add_option("--n", gen.n, "number of points (mixture)");
  gen_cmd->add_option("--separation", gen.separation, "blob center range (mixture)");
  gen_cmd->add_option("--jitter", gen.jitter, "per-coordinate noise half-width (mixture)");
  gen_cmd->add_option("--n-per-blob", gen.n_per_blob, "points per blob (id3fail)");
  gen_cmd->add_option("--spread", gen.spread, "blob jitter half-width (id3fail)");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--max-retries", gen.max_retries, "codeword sampling retries");
  gen_cmd->add_option("--out", gen.out, "output CSV path")->required();
  gen_cmd->add_option("--labels-out", gen.labels_out, "write generator labels here");

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "fit a model and write it as JSON");
  fit_cmd->fallthrough();
  fit_cmd->add_option("--algo", fit.algo, "imm|twocut|kmeans|id3")->required();
  fit_cmd->add_option("--in", fit.in, "input CSV")->required();
  fit_cmd->add_option("--objective", fit.objective, "means|medians");
  fit_cmd->add_option("--k", fit.k, "number of clusters");
  fit_cmd->add_option("--init", fit.init, "kmeanspp|file");
  fit_cmd->add_option("--centers", fit.centers, "centers CSV or model JSON when --init file");
  fit_cmd->add_flag("--no-refine", fit.no_refine, "skip Lloyd refinement of seeded centers");
  fit_cmd->add_option("--seed", fit.seed, "random seed");
  fit_cmd->add_option("--max-iters", fit.max_iters, "Lloyd iteration cap");
  fit_cmd->add_option("--tol", fit.tol, "Lloyd relative improvement stop");
  fit_cmd->add_option("--leaves", fit.leaves, "leaf budget (id3)");
  fit_cmd->add_option("--labels", fit.labels, "labels file (id3 target, twocut change count)");
  fit_cmd->add_option("--out", fit.out, "model output path")->required();
  fit_cmd->add_option("--stats-out", fit.stats_out, "stats output path (default <out>.stats.json)");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a model on a dataset");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--model", eval.model, "model JSON")->required();
  eval_cmd->add_option("--in", eval.in, "input CSV")->required();
  eval_cmd->add_option("--reference", eval.reference,
                       "centers CSV or model JSON for the ratio");

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "tree model to Graphviz");
  export_cmd->fallthrough();
  export_cmd->add_option("--model", exp.model, "tree model JSON")->required();
  export_cmd->add_option("--out", exp.out, "output path (default stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time tree construction");
  bench_cmd->fallthrough();
  bench_cmd->add_option("--n", bench.sizes, "point counts")->required()->delimiter(',');
  bench_cmd->add_option("--d", bench.d, "dimension");
  bench_cmd->add_option("--k", bench.k, "number of clusters");
  bench_cmd->add_option("--reps", bench.reps, "repetitions per size");
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--separation", bench.separation, "blob center range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (threads > 0) xkm::set_max_threads(threads);

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (fit_cmd->parsed()) return run_fit(fit);
    if (eval_cmd->parsed()) return run_eval(eval);
    if (export_cmd->parsed()) return run_export(exp);
    if (bench_cmd->parsed()) return run_bench_cmd(bench);
  } catch (const xkm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind) {
      case xkm::ErrorKind::Io:
      case xkm::ErrorKind::NonFinite:
      case xkm::ErrorKind::RaggedRow:
      case xkm::ErrorKind::Empty:
      case xkm::ErrorKind::BadModel:
        return 3;
      default:
        return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
