#include "ammd/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "ammd/generate.hpp"

namespace ammd::cli {

namespace {

weighted_digraph<std::int64_t> complete_digraph_of(const distance_matrix& d) {
  weighted_digraph<std::int64_t> g;
  g.n = d.size();
  g.arcs.reserve(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n - 1));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j) g.arcs.push_back({i, j, d(i, j)});
  if (d.has_labels()) g.labels = d.labels();
  return g;
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

loaded_instance load_instance(const std::filesystem::path& path, input_format format, bool closure) {
  loaded_instance inst;
  switch (format) {
    case input_format::tsplib: {
      auto t = io::parse_tsplib(path);
      inst.matrix = std::move(t.matrix);
      inst.name = t.name;
      inst.warnings = std::move(t.warnings);
      break;
    }
    case input_format::matrix:
      inst.matrix = io::parse_matrix(path);
      inst.name = path.stem().string();
      break;
    case input_format::edgelist: {
      auto g = io::parse_edgelist(path);
      inst.matrix = metric_closure(g);
      inst.name = path.stem().string();
      inst.closed = true;
      break;
    }
  }
  if (closure && !inst.closed) {
    inst.matrix = metric_closure(complete_digraph_of(inst.matrix));
    inst.closed = true;
  }
  return inst;
}

solver_result<std::int64_t> run_algorithm(const distance_matrix& d, const std::string& name,
                                          const solve_options& opt) {
  if (name == "greedy") return greedy_dmin(d, opt.k, opt.start);
  if (name == "random") return random_baseline(d, opt.k, opt.random_reps, opt.seed);
  if (name == "naive-ma") return naive_ma(d, opt.k, opt.naive_mode);
  if (name == "bac") return bac(d, opt.k, opt.centers);
  if (name == "bacr") return bacr(d, opt.k, opt.centers);
  if (name == "bacf") return bacf(d, opt.k, opt.centers);
  if (name == "exact") return exact_optimum(d, opt.k, opt.time_budget_s);
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

int cmd_solve(const solve_options& opt, std::ostream& out, std::ostream& err) {
  if (opt.k < 2) {
    err << "solve: k must be at least 2\n";
    return 1;
  }
  loaded_instance inst;
  try {
    inst = load_instance(opt.input, opt.format, opt.closure);
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return 2;
  }
  for (const auto& w : inst.warnings) err << "warning: " << w << '\n';

  if (!inst.closed) {
    auto report = validate_pseudometric(inst.matrix);
    if (!report.is_pseudometric) {
      err << "solve: input is not a pseudometric (" << report.violation_count
          << " violations); rerun with --closure to take the metric closure\n";
      return 2;
    }
  }

  const int n = inst.matrix.size();
  if (opt.k > n) {
    err << "solve: infeasible, k=" << opt.k << " exceeds n=" << n << '\n';
    return 3;
  }

  solver_result<std::int64_t> res;
  try {
    res = run_algorithm(inst.matrix, opt.algorithm, opt);
  } catch (const std::invalid_argument& e) {
    err << "solve: " << e.what() << '\n';
    return 1;
  }

  out << "instance: " << inst.name << '\n';
  out << "algorithm: " << res.algorithm << '\n';
  out << "n: " << n << '\n';
  out << "k: " << opt.k << '\n';
  if (res.timed_out) {
    out << "status: time budget exhausted\n";
    if (res.refuted_above) out << "refuted: no feasible set at R >= " << *res.refuted_above << '\n';
  }
  if (res.feasible) {
    out << "score: " << res.score << '\n';
    out << "solution:";
    for (int v : res.solution) out << ' ' << inst.matrix.label(v);
    out << '\n';
    if (res.radius_used) out << "radius: " << *res.radius_used << '\n';
    if (res.cutoff_used) out << "cutoff: " << *res.cutoff_used << '\n';
  } else {
    out << "no verified solution\n";
  }

  if (opt.output) {
    io::result_record rec;
    rec.algorithm = res.algorithm;
    rec.instance = inst.name;
    rec.k = opt.k;
    rec.seed = opt.seed;
    rec.score = res.score;
    for (int v : res.solution) rec.solution.push_back(inst.matrix.label(v));
    rec.radius_used = res.radius_used;
    rec.cutoff_used = res.cutoff_used;
    rec.elapsed_ms = res.elapsed_ms;
    io::write_result(rec, *opt.output, opt.output_format);
  }
  return 0;
}

int cmd_validate(const validate_options& opt, std::ostream& out, std::ostream& err) {
  loaded_instance inst;
  try {
    inst = load_instance(opt.input, opt.format, opt.closure);
  } catch (const std::exception& e) {
    err << "validate: " << e.what() << '\n';
    return 2;
  }

  const auto& d = inst.matrix;
  const int n = d.size();
  out << "instance: " << inst.name << '\n';
  out << "n: " << n << '\n';
  if (n >= 2) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        lo = std::min(lo, d(i, j));
        hi = std::max(hi, d(i, j));
      }
    out << "min distance: " << lo << '\n';
    out << "max distance: " << hi << '\n';
  }
  out << "unique distances: " << unique_distances(d).size() << '\n';

  auto report = validate_pseudometric(d);
  if (report.is_pseudometric) {
    out << "pseudometric: yes\n";
  } else {
    out << "pseudometric: no (" << report.violation_count << " violations)\n";
    for (std::size_t i = 0; i < report.triangle_violations.size() && i < 3; ++i) {
      const auto& v = report.triangle_violations[i];
      out << "  triangle: d(" << v.i << ',' << v.j << ") > d(" << v.i << ',' << v.w << ") + d(" << v.w
          << ',' << v.j << ") by " << v.slack << '\n';
    }
  }
  if (report.epsilon.unbounded) {
    out << "epsilon symmetry: unbounded\n";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", report.epsilon.value());
    out << "epsilon symmetry: " << buf << '\n';
  }
  return 0;
}

namespace {

struct bench_instance {
  std::string name;
  distance_matrix matrix;
  std::string load_error;  // nonempty when the instance could not be built
  bool synthetic_scale_free = false;
  bool synthetic_complete = false;
  int declared_n = 0;
};

struct bench_cell {
  std::size_t instance;
  std::string algorithm;
  int k;
};

struct cell_outcome {
  solver_result<std::int64_t> result;
  std::string status;  // ok | timeout | infeasible | error: ...
};

}  // namespace

int cmd_bench(const bench_options& opt, std::ostream& out, std::ostream& err) {
  nlohmann::json cfg;
  try {
    std::ifstream in(opt.config);
    if (!in) throw std::runtime_error("cannot open '" + opt.config.string() + "'");
    in >> cfg;
  } catch (const std::exception& e) {
    err << "bench: config error: " << e.what() << '\n';
    return 1;
  }

  const std::filesystem::path base = opt.config.has_parent_path()
                                         ? opt.config.parent_path()
                                         : std::filesystem::path(".");
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  std::vector<std::string> algorithms;
  std::vector<int> k_values;
  std::uint64_t seed = 0;
  int reps = 10;
  int jobs = 1;
  std::optional<double> budget;
  std::string output = "bench.csv";
  std::string series_dir;
  std::vector<bench_instance> instances;

  try {
    algorithms = cfg.at("algorithms").get<std::vector<std::string>>();
    k_values = cfg.at("k").get<std::vector<int>>();
    if (cfg.contains("seed")) seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("reps")) reps = cfg["reps"].get<int>();
    if (cfg.contains("jobs")) jobs = cfg["jobs"].get<int>();
    if (cfg.contains("time_budget_s")) {
      double b = cfg["time_budget_s"].get<double>();
      if (b > 0) budget = b;
    }
    if (cfg.contains("output")) output = cfg["output"].get<std::string>();
    if (cfg.contains("series_dir")) series_dir = cfg["series_dir"].get<std::string>();

    if (cfg.contains("instances"))
      for (const auto& j : cfg["instances"]) {
        bench_instance bi;
        bi.name = j.at("name").get<std::string>();
        std::string fmt = j.at("format").get<std::string>();
        input_format f = fmt == "tsplib"     ? input_format::tsplib
                         : fmt == "edgelist" ? input_format::edgelist
                         : fmt == "matrix"   ? input_format::matrix
                                             : throw std::runtime_error("unknown format '" + fmt + "'");
        bool closure = j.contains("closure") && j["closure"].get<bool>();
        try {
          auto inst = load_instance(resolve(j.at("path").get<std::string>()), f, closure);
          if (!inst.closed) {
            auto report = validate_pseudometric(inst.matrix);
            if (!report.is_pseudometric)
              throw std::runtime_error("not a pseudometric (" +
                                       std::to_string(report.violation_count) +
                                       " violations); set \"closure\": true");
          }
          bi.matrix = std::move(inst.matrix);
        } catch (const std::exception& e) {
          bi.load_error = e.what();
        }
        bi.declared_n = bi.matrix.size();
        instances.push_back(std::move(bi));
      }

    if (cfg.contains("synthetic"))
      for (const auto& j : cfg["synthetic"]) {
        bench_instance bi;
        bi.name = j.at("name").get<std::string>();
        std::string model = j.at("model").get<std::string>();
        try {
          if (model == "scale-free") {
            scale_free_params p;
            p.n = j.at("n").get<int>();
            p.seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : seed;
            if (j.contains("alpha")) p.alpha = j["alpha"].get<double>();
            if (j.contains("beta")) p.beta = j["beta"].get<double>();
            if (j.contains("gamma")) p.gamma = j["gamma"].get<double>();
            if (j.contains("delta_in")) p.delta_in = j["delta_in"].get<double>();
            if (j.contains("delta_out")) p.delta_out = j["delta_out"].get<double>();
            bi.matrix = metric_closure(scale_free_digraph(p));
            bi.synthetic_scale_free = true;
            bi.declared_n = p.n;
          } else if (model == "complete") {
            int n = j.at("n").get<int>();
            std::int64_t w = j.at("max_weight").get<std::int64_t>();
            std::uint64_t s = j.contains("seed") ? j["seed"].get<std::uint64_t>() : seed;
            bi.matrix = metric_closure(random_complete_digraph(n, w, s));
            bi.synthetic_complete = true;
            bi.declared_n = n;
          } else {
            throw std::runtime_error("unknown synthetic model '" + model + "'");
          }
        } catch (const std::exception& e) {
          bi.load_error = e.what();
        }
        instances.push_back(std::move(bi));
      }
  } catch (const std::exception& e) {
    err << "bench: config error: " << e.what() << '\n';
    return 1;
  }

  if (instances.empty() || algorithms.empty() || k_values.empty()) {
    err << "bench: config error: need at least one instance, algorithm and k value\n";
    return 1;
  }
  {
    std::set<std::string> names;
    for (const auto& bi : instances)
      if (!names.insert(bi.name).second) {
        err << "bench: config error: duplicate instance name '" << bi.name << "'\n";
        return 1;
      }
  }

  // Deterministic row order: (instance name, algorithm, k).
  std::vector<std::size_t> order(instances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return instances[a].name < instances[b].name; });
  std::vector<std::string> algs = algorithms;
  std::sort(algs.begin(), algs.end());
  std::vector<int> ks = k_values;
  std::sort(ks.begin(), ks.end());

  std::vector<bench_cell> cells;
  for (std::size_t i : order)
    for (const auto& a : algs)
      for (int k : ks) cells.push_back({i, a, k});

  std::vector<cell_outcome> outcomes(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t c = next.fetch_add(1);
      if (c >= cells.size()) break;
      const auto& cell = cells[c];
      const auto& inst = instances[cell.instance];
      auto& res = outcomes[c];
      if (!inst.load_error.empty()) {
        res.status = "error: " + inst.load_error;
        continue;
      }
      if (cell.k < 2 || cell.k > inst.matrix.size()) {
        res.status = "infeasible";
        continue;
      }
      solve_options so;
      so.algorithm = cell.algorithm;
      so.k = cell.k;
      so.seed = seed;
      so.random_reps = reps;
      so.time_budget_s = budget;
      try {
        res.result = run_algorithm(inst.matrix, cell.algorithm, so);
        res.status = res.result.timed_out ? "timeout" : (res.result.feasible ? "ok" : "infeasible");
      } catch (const std::exception& e) {
        res.status = std::string("error: ") + e.what();
      }
    }
  };
  {
    const int n_threads = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

  // Optima per (instance, k) from completed exact cells.
  std::map<std::pair<std::size_t, int>, std::int64_t> optimum;
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (cells[c].algorithm == "exact" && outcomes[c].status == "ok" && outcomes[c].result.feasible)
      optimum[{cells[c].instance, cells[c].k}] = outcomes[c].result.score;

  const std::filesystem::path out_path = resolve(output);
  std::ofstream csv(out_path);
  if (!csv) {
    err << "bench: cannot write '" << out_path.string() << "'\n";
    return 1;
  }
  csv << "instance,algorithm,k,score,pct_of_opt,elapsed_ms,status\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    const auto& oc = outcomes[c];
    csv << instances[cell.instance].name << ',' << cell.algorithm << ',' << cell.k << ',';
    if (oc.result.feasible) csv << oc.result.score;
    csv << ',';
    auto it = optimum.find({cell.instance, cell.k});
    if (oc.result.feasible && it != optimum.end() && it->second > 0)
      csv << fmt2(100.0 * static_cast<double>(oc.result.score) / static_cast<double>(it->second));
    csv << ',' << fmt2(oc.result.elapsed_ms) << ',' << oc.status << '\n';
  }
  csv.close();
  out << "wrote " << out_path.string() << " (" << cells.size() << " cells)\n";

  if (!series_dir.empty()) {
    const std::filesystem::path dir = resolve(series_dir);
    std::filesystem::create_directories(dir);

    std::ofstream svk(dir / "score_vs_k.csv");
    svk << "instance,algorithm,k,score\n";
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (outcomes[c].result.feasible)
        svk << instances[cells[c].instance].name << ',' << cells[c].algorithm << ',' << cells[c].k
            << ',' << outcomes[c].result.score << '\n';

    bool any_sf = false, any_cd = false;
    for (const auto& bi : instances) {
      any_sf = any_sf || bi.synthetic_scale_free;
      any_cd = any_cd || bi.synthetic_complete;
    }
    if (any_sf) {
      std::ofstream rvn(dir / "runtime_vs_n.csv");
      rvn << "n,algorithm,k,elapsed_ms\n";
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (instances[cells[c].instance].synthetic_scale_free && outcomes[c].status == "ok")
          rvn << instances[cells[c].instance].declared_n << ',' << cells[c].algorithm << ','
              << cells[c].k << ',' << fmt2(outcomes[c].result.elapsed_ms) << '\n';
    }
    if (any_cd) {
      std::ofstream rvd(dir / "runtime_vs_dists.csv");
      rvd << "dists,algorithm,k,elapsed_ms\n";
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (instances[cells[c].instance].synthetic_complete && outcomes[c].status == "ok")
          rvd << unique_distances(instances[cells[c].instance].matrix).size() << ','
              << cells[c].algorithm << ',' << cells[c].k << ','
              << fmt2(outcomes[c].result.elapsed_ms) << '\n';
    }
    out << "wrote series files under " << dir.string() << '\n';
  }
  return 0;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Solver and benchmark harness for asymmetric max-min diversification"};
  app.require_subcommand(1);

  solve_options so;
  validate_options vo;
  bench_options bo;
  std::string so_format = "matrix", so_outfmt = "json", so_center = "farthest", so_start = "max-edge";
  std::string so_ma_mode = "scan";
  std::string vo_format = "matrix";
  double budget = 0.0;
  std::string output;

  auto parse_format = [](const std::string& f) {
    if (f == "tsplib") return input_format::tsplib;
    if (f == "edgelist") return input_format::edgelist;
    return input_format::matrix;
  };

  auto* solve = app.add_subcommand("solve", "Solve a single instance");
  solve->add_option("--input", so.input, "instance file")->required();
  solve->add_option("--format", so_format, "tsplib|edgelist|matrix")
      ->check(CLI::IsMember({"tsplib", "edgelist", "matrix"}))
      ->required();
  solve->add_option("--algorithm", so.algorithm, "greedy|random|naive-ma|bac|bacr|bacf|exact")
      ->check(CLI::IsMember({"greedy", "random", "naive-ma", "bac", "bacr", "bacf", "exact"}))
      ->required();
  solve->add_option("--k", so.k, "solution size")->required();
  solve->add_option("--seed", so.seed, "seed for the random baseline");
  solve->add_option("--reps", so.random_reps, "repetitions of the random baseline");
  solve->add_option("--time-budget", budget, "wall-clock budget in seconds (exact)");
  solve->add_option("--output", output, "write the result record here");
  solve->add_option("--output-format", so_outfmt, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--center-rule", so_center, "farthest|first")
      ->check(CLI::IsMember({"farthest", "first"}));
  solve->add_option("--start-rule", so_start, "max-edge or fixed:<vertex>");
  solve->add_option("--ma-mode", so_ma_mode, "scan|binary")->check(CLI::IsMember({"scan", "binary"}));
  solve->add_flag("--closure", so.closure, "take the metric closure of the parsed matrix");

  auto* validate = app.add_subcommand("validate", "Report instance statistics and axioms");
  validate->add_option("--input", vo.input, "instance file")->required();
  validate->add_option("--format", vo_format, "tsplib|edgelist|matrix")
      ->check(CLI::IsMember({"tsplib", "edgelist", "matrix"}))
      ->required();
  validate->add_flag("--closure", vo.closure, "take the metric closure of the parsed matrix");

  auto* bench = app.add_subcommand("bench", "Run a benchmark configuration");
  bench->add_option("--config", bo.config, "JSON benchmark configuration")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (solve->parsed()) {
    so.format = parse_format(so_format);
    so.output_format = so_outfmt == "csv" ? io::result_format::csv : io::result_format::json;
    so.centers = so_center == "first" ? center_rule::first_unmarked : center_rule::farthest_first;
    so.naive_mode = so_ma_mode == "binary" ? ma_mode::binary : ma_mode::scan;
    if (budget > 0) so.time_budget_s = budget;
    if (!output.empty()) so.output = output;
    if (so_start == "max-edge") {
      so.start = start_rule::max_edge();
    } else if (so_start.rfind("fixed:", 0) == 0) {
      try {
        so.start = start_rule::fixed(std::stoi(so_start.substr(6)));
      } catch (const std::exception&) {
        std::cerr << "solve: bad --start-rule '" << so_start << "'\n";
        return 1;
      }
    } else {
      std::cerr << "solve: bad --start-rule '" << so_start << "'\n";
      return 1;
    }
    return cmd_solve(so, std::cout, std::cerr);
  }
  if (validate->parsed()) {
    vo.format = parse_format(vo_format);
    return cmd_validate(vo, std::cout, std::cerr);
  }
  if (bench->parsed()) return cmd_bench(bo, std::cout, std::cerr);
  return 1;
}

}  // namespace ammd::cli
