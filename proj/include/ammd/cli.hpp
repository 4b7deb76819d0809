#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ammd/io.hpp"
#include "ammd/solvers.hpp"

namespace ammd::cli {

enum class input_format { tsplib, edgelist, matrix };

/// Parses an instance and brings it into solvable form: edge lists always go
/// through the metric closure, matrices only when requested.
struct loaded_instance {
  distance_matrix matrix;
  std::string name;
  std::vector<std::string> warnings;
  bool closed = false;  // matrix came out of a metric closure
};

loaded_instance load_instance(const std::filesystem::path& path, input_format format, bool closure);

struct solve_options {
  std::filesystem::path input;
  input_format format = input_format::matrix;
  std::string algorithm;
  int k = 0;
  std::uint64_t seed = 0;
  std::optional<double> time_budget_s;
  std::optional<std::filesystem::path> output;
  io::result_format output_format = io::result_format::json;
  center_rule centers = center_rule::farthest_first;
  start_rule start = start_rule::max_edge();
  ma_mode naive_mode = ma_mode::scan;
  int random_reps = 10;
  bool closure = false;
};

struct validate_options {
  std::filesystem::path input;
  input_format format = input_format::matrix;
  bool closure = false;
};

struct bench_options {
  std::filesystem::path config;
};

// Exit codes: 0 success, 1 invalid flags/config, 2 parse or validation
// failure, 3 infeasible (k > n).
int cmd_solve(const solve_options& opt, std::ostream& out, std::ostream& err);
int cmd_validate(const validate_options& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const bench_options& opt, std::ostream& out, std::ostream& err);

/// Full argv front end (CLI11 wiring of the three subcommands).
int run(int argc, const char* const* argv);

/// Dispatch by algorithm name: greedy, random, naive-ma, bac, bacr, bacf,
/// exact. Throws std::invalid_argument for unknown names.
solver_result<std::int64_t> run_algorithm(const distance_matrix& d, const std::string& name,
                                          const solve_options& opt);

}  // namespace ammd::cli
