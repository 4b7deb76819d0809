#include "ammd/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace ammd::io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

template <class Value>
Value parse_number(const std::string& tok, const std::string& where) {
  Value v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw parse_error(where + ": invalid number '" + tok + "'");
  return v;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path.string() + "'");
  return in;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

tsplib_instance parse_tsplib(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  tsplib_instance inst;
  inst.name = path.stem().string();

  int dimension = -1;
  std::string weight_type, weight_format;
  std::string line;
  bool in_weights = false;
  std::vector<std::int64_t> values;

  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (!in_weights) {
      auto colon = t.find(':');
      std::string key = trim(colon == std::string::npos ? t : t.substr(0, colon));
      std::string value = colon == std::string::npos ? "" : trim(t.substr(colon + 1));
      if (key == "NAME") {
        inst.name = value;
      } else if (key == "TYPE") {
        if (value != "ATSP") throw parse_error("unsupported TYPE '" + value + "' (need ATSP)");
      } else if (key == "DIMENSION") {
        dimension = static_cast<int>(parse_number<std::int64_t>(value, "DIMENSION"));
      } else if (key == "EDGE_WEIGHT_TYPE") {
        weight_type = value;
      } else if (key == "EDGE_WEIGHT_FORMAT") {
        weight_format = value;
      } else if (key == "EDGE_WEIGHT_SECTION") {
        if (dimension < 1) throw parse_error("EDGE_WEIGHT_SECTION before a valid DIMENSION");
        if (weight_type != "EXPLICIT")
          throw parse_error("unsupported EDGE_WEIGHT_TYPE '" + weight_type + "' (need EXPLICIT)");
        if (weight_format != "FULL_MATRIX")
          throw parse_error("unsupported EDGE_WEIGHT_FORMAT '" + weight_format + "' (need FULL_MATRIX)");
        in_weights = true;
        values.reserve(static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension));
      }
      // other header keys (COMMENT, ...) are ignored
    } else {
      if (t == "EOF") break;
      for (const auto& tok : split_ws(t)) {
        if (tok == "EOF") {
          in.setstate(std::ios::eofbit);
          break;
        }
        values.push_back(parse_number<std::int64_t>(tok, "EDGE_WEIGHT_SECTION"));
      }
      if (values.size() > static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension))
        throw parse_error("EDGE_WEIGHT_SECTION: more entries than DIMENSION^2");
    }
  }

  if (!in_weights) throw parse_error("missing EDGE_WEIGHT_SECTION");
  const std::size_t expected = static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension);
  if (values.size() != expected)
    throw parse_error("EDGE_WEIGHT_SECTION: expected " + std::to_string(expected) + " entries, got " +
                      std::to_string(values.size()));

  distance_matrix d(dimension, std::move(values));
  int forced = 0;
  for (int i = 0; i < dimension; ++i)
    if (d(i, i) != 0) {
      d.at(i, i) = 0;
      ++forced;
    }
  if (forced > 0)
    inst.warnings.push_back(std::to_string(forced) + " nonzero diagonal entries forced to zero");

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(dimension));
  for (int i = 1; i <= dimension; ++i) labels.push_back(std::to_string(i));
  d.set_labels(std::move(labels));

  auto report = validate_pseudometric(d);
  if (!report.is_pseudometric)
    inst.warnings.push_back("matrix is not a pseudometric (" + std::to_string(report.violation_count) +
                            " violations); apply the metric closure before solving");

  inst.matrix = std::move(d);
  return inst;
}

weighted_digraph<std::int64_t> parse_edgelist(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  weighted_digraph<std::int64_t> g;
  std::unordered_map<std::string, int> ids;
  std::unordered_map<std::int64_t, std::size_t> arc_index;  // (from, to) packed -> arc slot

  auto vertex = [&](const std::string& tok) {
    auto [it, fresh] = ids.try_emplace(tok, static_cast<int>(g.labels.size()));
    if (fresh) g.labels.push_back(tok);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw parse_error("line " + std::to_string(line_no) + ": expected 'u v w'");
    std::int64_t w = parse_number<std::int64_t>(toks[2], "line " + std::to_string(line_no));
    if (w < 0) throw parse_error("line " + std::to_string(line_no) + ": negative weight");
    int u = vertex(toks[0]), v = vertex(toks[1]);
    std::int64_t key = static_cast<std::int64_t>(u) * (1LL << 31) + v;
    auto it = arc_index.find(key);
    if (it == arc_index.end()) {
      arc_index.emplace(key, g.arcs.size());
      g.arcs.push_back({u, v, w});
    } else {
      auto& existing = g.arcs[it->second];
      existing.weight = std::min(existing.weight, w);
    }
  }

  g.n = static_cast<int>(g.labels.size());
  if (g.n == 0) throw parse_error("empty graph: no arcs found");
  return g;
}

namespace {

template <class Value>
basic_distance_matrix<Value> parse_matrix_impl(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::vector<Value>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (auto& c : line)
      if (c == ',') c = ' ';
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    std::vector<Value> row;
    row.reserve(toks.size());
    for (const auto& tok : toks)
      row.push_back(parse_number<Value>(tok, "line " + std::to_string(line_no)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error("line " + std::to_string(line_no) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("empty matrix");
  const std::size_t n = rows.front().size();
  if (rows.size() != n)
    throw parse_error("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));

  std::vector<Value> flat;
  flat.reserve(n * n);
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return basic_distance_matrix<Value>(static_cast<int>(n), std::move(flat));
}

}  // namespace

distance_matrix parse_matrix(const std::filesystem::path& path) {
  return parse_matrix_impl<std::int64_t>(path);
}

real_distance_matrix parse_matrix_real(const std::filesystem::path& path) {
  return parse_matrix_impl<double>(path);
}

void write_matrix(const distance_matrix& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path.string() + "'");
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      if (j) out << ' ';
      out << d(i, j);
    }
    out << '\n';
  }
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ';';
    out += labels[i];
  }
  return out;
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(';', start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

void write_result(const result_record& r, const std::filesystem::path& path, result_format format) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path.string() + "'");
  if (format == result_format::json) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["instance"] = r.instance;
    j["k"] = r.k;
    j["seed"] = r.seed;
    j["score"] = r.score;
    j["solution"] = r.solution;
    if (r.radius_used)
      j["radius_used"] = *r.radius_used;
    else
      j["radius_used"] = nullptr;
    if (r.cutoff_used)
      j["cutoff_used"] = *r.cutoff_used;
    else
      j["cutoff_used"] = nullptr;
    j["elapsed_ms"] = r.elapsed_ms;
    out << j.dump(2) << '\n';
  } else {
    out << "instance,algorithm,k,seed,score,radius,cutoff,elapsed_ms,solution\n";
    out << csv_quote(r.instance) << ',' << csv_quote(r.algorithm) << ',' << r.k << ',' << r.seed << ','
        << r.score << ',' << (r.radius_used ? format_double(*r.radius_used) : "") << ','
        << (r.cutoff_used ? format_double(*r.cutoff_used) : "") << ',' << format_double(r.elapsed_ms)
        << ',' << csv_quote(join_labels(r.solution)) << '\n';
  }
}

result_record read_result(const std::filesystem::path& path, result_format format) {
  std::ifstream in = open_or_throw(path);
  result_record r;
  if (format == result_format::json) {
    nlohmann::json j;
    in >> j;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.k = j.at("k").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.score = j.at("score").get<std::int64_t>();
    r.solution = j.at("solution").get<std::vector<std::string>>();
    if (!j.at("radius_used").is_null()) r.radius_used = j.at("radius_used").get<double>();
    if (!j.at("cutoff_used").is_null()) r.cutoff_used = j.at("cutoff_used").get<double>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
  } else {
    std::string header, row;
    if (!std::getline(in, header) || !std::getline(in, row))
      throw parse_error("result csv: missing header or row");
    auto names = csv_split(header);
    auto cells = csv_split(row);
    if (names.size() != cells.size()) throw parse_error("result csv: header/row mismatch");
    std::map<std::string, std::string> by;
    for (std::size_t i = 0; i < names.size(); ++i) by[names[i]] = cells[i];
    r.instance = by.at("instance");
    r.algorithm = by.at("algorithm");
    r.k = static_cast<int>(parse_number<std::int64_t>(by.at("k"), "k"));
    r.seed = parse_number<std::uint64_t>(by.at("seed"), "seed");
    r.score = parse_number<std::int64_t>(by.at("score"), "score");
    if (!by.at("radius").empty()) r.radius_used = parse_number<double>(by.at("radius"), "radius");
    if (!by.at("cutoff").empty()) r.cutoff_used = parse_number<double>(by.at("cutoff"), "cutoff");
    r.elapsed_ms = parse_number<double>(by.at("elapsed_ms"), "elapsed_ms");
    r.solution = split_labels(by.at("solution"));
  }
  return r;
}

}  // namespace ammd::io
