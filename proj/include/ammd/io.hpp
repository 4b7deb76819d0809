#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ammd/metric_space.hpp"

namespace ammd::io {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct tsplib_instance {
  distance_matrix matrix;
  std::string name;
  std::vector<std::string> warnings;
};

/// TSPLIB reader for the EXPLICIT / FULL_MATRIX ATSP subset. Nonzero
/// diagonal entries are forced to zero with a warning; triangle-inequality
/// violations are reported as warnings, not errors, since raw instances need
/// not be metric.
tsplib_instance parse_tsplib(const std::filesystem::path& path);

/// Lines of "u v w" with nonnegative integer weights; '#' starts a comment;
/// vertex names are arbitrary tokens mapped to dense ids in first-appearance
/// order; duplicate arcs keep the minimum weight.
weighted_digraph<std::int64_t> parse_edgelist(const std::filesystem::path& path);

/// n lines of n comma- or whitespace-separated values.
distance_matrix parse_matrix(const std::filesystem::path& path);
real_distance_matrix parse_matrix_real(const std::filesystem::path& path);

void write_matrix(const distance_matrix& d, const std::filesystem::path& path);

enum class result_format { json, csv };

struct result_record {
  std::string algorithm;
  std::string instance;
  int k = 0;
  std::uint64_t seed = 0;
  std::int64_t score = 0;
  std::vector<std::string> solution;  // original labels, never internal indices
  std::optional<double> radius_used;
  std::optional<double> cutoff_used;
  double elapsed_ms = 0.0;

  bool operator==(const result_record&) const = default;
};

void write_result(const result_record& r, const std::filesystem::path& path, result_format format);
result_record read_result(const std::filesystem::path& path, result_format format);

}  // namespace ammd::io
