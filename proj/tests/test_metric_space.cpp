#include "ammd/metric_space.hpp"

#include <random>

#include "ammd/generate.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ammd;

TEST_SUITE_BEGIN("metric space");

TEST_CASE("cutoff comparisons are exact on rationals") {
  cutoff<std::int64_t> half_five{5, 2};  // 2.5
  CHECK(half_five.admits(2));
  CHECK_FALSE(half_five.admits(3));
  CHECK(half_five.below(3));
  CHECK_FALSE(half_five.below(2));

  cutoff<std::int64_t> two{4, 2};
  CHECK_FALSE(two.admits(2));  // strict
  CHECK(two.admits(1));

  cutoff<std::int64_t> huge{std::int64_t{1} << 60, 1000};
  CHECK(huge.admits((std::int64_t{1} << 60) / 1000 - 1));

  cutoff<double> r{1.5, 2};
  CHECK(r.admits(0.7));
  CHECK_FALSE(r.admits(0.75));
}

TEST_CASE("d_min and d_max on the star-gap instance") {
  auto d = oracle::star_gap_instance(6);
  CHECK(d_min(d, 0, 3) == 0);
  CHECK(d_max(d, 0, 3) == 6);
  CHECK(d_min(d, 3, 0) == 0);  // symmetric in the pair
  CHECK(d_min(d, 0, 1) == 6);
}

TEST_CASE("d_min <= d_max and swap invariance on random instances") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    auto d = metric_closure(random_complete_digraph(8, 50, rng()));
    for (int u = 0; u < d.size(); ++u)
      for (int v = 0; v < d.size(); ++v) {
        REQUIRE(d_min(d, u, v) <= d_max(d, u, v));
        REQUIRE(d_min(d, u, v) == d_min(d, v, u));
        REQUIRE(d_max(d, u, v) == d_max(d, v, u));
      }
  }
}

TEST_CASE("validate: closures pass with zero tolerance") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    auto d = metric_closure(random_complete_digraph(9, 40, rng()));
    auto rep_out = validate_pseudometric(d);
    REQUIRE(rep_out.is_pseudometric);
  }
}

TEST_CASE("validate: tight three-point instance, integer and real") {
  auto d = oracle::tight_greedy_instance();
  auto r = validate_pseudometric(d);
  CHECK(r.is_pseudometric);
  CHECK_FALSE(r.epsilon.unbounded);
  CHECK(r.epsilon.value() == doctest::Approx(1.0));
  CHECK(r.epsilon.num == r.epsilon.den);  // exactly one

  real_distance_matrix rd(3);
  rd.at(0, 1) = rd.at(1, 0) = 1.0;
  rd.at(0, 2) = rd.at(1, 2) = 1.0 / 3.0;
  rd.at(2, 0) = rd.at(2, 1) = 2.0 / 3.0;
  auto rr = validate_pseudometric(rd, 1e-9);
  CHECK(rr.is_pseudometric);
  CHECK(rr.epsilon.value() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("validate: star-gap instance is pseudometric with unbounded asymmetry") {
  auto d = oracle::star_gap_instance(6);
  auto r = validate_pseudometric(d);
  CHECK(r.is_pseudometric);
  CHECK(r.epsilon.unbounded);
}

TEST_CASE("validate: violations are reported") {
  distance_matrix d(3);
  d.at(0, 1) = 10;
  d.at(1, 0) = 10;
  d.at(0, 2) = 1;
  d.at(2, 0) = 1;
  d.at(1, 2) = 1;
  d.at(2, 1) = 1;  // d(0,1) > d(0,2) + d(2,1)
  auto r = validate_pseudometric(d);
  CHECK_FALSE(r.is_pseudometric);
  REQUIRE_FALSE(r.triangle_violations.empty());
  auto v = r.triangle_violations.front();
  CHECK(d(v.i, v.j) > d(v.i, v.w) + d(v.w, v.j));
  CHECK(v.slack == 8);

  distance_matrix neg(2);
  neg.at(0, 1) = -1;
  neg.at(1, 0) = 1;
  auto rn = validate_pseudometric(neg);
  CHECK_FALSE(rn.is_pseudometric);
  CHECK_FALSE(rn.negative_entries.empty());

  distance_matrix diag(2);
  diag.at(0, 0) = 5;
  diag.at(0, 1) = diag.at(1, 0) = 5;
  auto rd = validate_pseudometric(diag);
  CHECK_FALSE(rd.is_pseudometric);
  CHECK(rd.diagonal_violations == std::vector<int>{0});
}

TEST_CASE("metric closure: two-vertex cycle and directed triangle") {
  weighted_digraph<std::int64_t> g;
  g.n = 2;
  g.arcs = {{0, 1, 3}, {1, 0, 5}};
  auto d = metric_closure(g);
  REQUIRE(d.size() == 2);
  CHECK(d(0, 1) == 3);
  CHECK(d(1, 0) == 5);

  weighted_digraph<std::int64_t> c3;
  c3.n = 3;
  c3.arcs = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  auto d3 = metric_closure(c3);
  CHECK(d3(0, 1) == 1);
  CHECK(d3(1, 0) == 2);
}

TEST_CASE("metric closure: matches exhaustive path enumeration") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 30) {
    int n = 3 + static_cast<int>(detail::draw_below(rng, 7));  // up to 9
    weighted_digraph<std::int64_t> g;
    g.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && detail::draw_below(rng, 1000) < 550)
          g.arcs.push_back({u, v, 1 + static_cast<std::int64_t>(detail::draw_below(rng, 9))});

    digraph structure(n);
    for (const auto& a : g.arcs) structure.add_arc(a.from, a.to);
    auto labels = oracle::scc_labels(structure);
    bool strongly_connected = true;
    for (int v = 0; v < n; ++v) strongly_connected = strongly_connected && labels[v] == 0;
    if (!strongly_connected) continue;
    ++done;

    auto d = metric_closure(g);
    auto expect = oracle::shortest_paths_by_enumeration(g);
    REQUIRE(d.size() == n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) REQUIRE(d(u, v) == expect[u][v]);
  }
}

TEST_CASE("metric closure: keeps the largest strongly connected component") {
  // Two components: {0,1,2} as a 3-cycle, {3,4} as a 2-cycle, plus a one-way
  // bridge between them.
  weighted_digraph<std::int64_t> g;
  g.n = 5;
  g.labels = {"a", "b", "c", "d", "e"};
  g.arcs = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {3, 4, 1}, {4, 3, 1}, {2, 3, 1}};
  auto d = metric_closure(g);
  REQUIRE(d.size() == 3);
  CHECK(d.labels() == std::vector<std::string>{"a", "b", "c"});

  // Size tie: two 2-cycles; the one containing the smallest vertex id wins.
  weighted_digraph<std::int64_t> tie;
  tie.n = 4;
  tie.labels = {"p", "q", "r", "s"};
  tie.arcs = {{2, 3, 1}, {3, 2, 1}, {0, 1, 1}, {1, 0, 1}, {1, 2, 1}};
  auto dt = metric_closure(tie);
  REQUIRE(dt.size() == 2);
  CHECK(dt.labels() == std::vector<std::string>{"p", "q"});
}

TEST_CASE("metric closure: idempotent on the induced complete digraph") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    auto d = metric_closure(random_complete_digraph(7, 30, rng()));
    weighted_digraph<std::int64_t> complete;
    complete.n = d.size();
    for (int u = 0; u < d.size(); ++u)
      for (int v = 0; v < d.size(); ++v)
        if (u != v) complete.arcs.push_back({u, v, d(u, v)});
    auto again = metric_closure(complete);
    REQUIRE(again.size() == d.size());
    for (int u = 0; u < d.size(); ++u)
      for (int v = 0; v < d.size(); ++v) REQUIRE(again(u, v) == d(u, v));
  }
}

TEST_CASE("metric closure: overflow guard") {
  weighted_digraph<std::int64_t> g;
  g.n = 3;
  const std::int64_t huge = std::numeric_limits<std::int64_t>::max() / 2;
  g.arcs = {{0, 1, huge}, {1, 2, huge}, {2, 0, huge}};
  CHECK_THROWS_AS(metric_closure(g), std::overflow_error);

  weighted_digraph<std::int64_t> empty;
  CHECK_THROWS_AS(metric_closure(empty), std::invalid_argument);
}

TEST_CASE("diversity: star-gap values and error on tiny sets") {
  auto d = oracle::star_gap_instance(6);
  std::vector<int> opt{0, 1, 2};
  CHECK(diversity<std::int64_t>(d, opt) == 6);
  std::vector<int> bad{0, 3};
  CHECK(diversity<std::int64_t>(d, bad) == 0);
  std::vector<int> one{0};
  CHECK_THROWS_AS(diversity<std::int64_t>(d, one), std::invalid_argument);
}

TEST_CASE("diversity: equals pairwise enumeration and shrinks under supersets") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    auto d = metric_closure(random_complete_digraph(9, 25, rng()));
    std::vector<int> s;
    for (int v = 0; v < d.size(); ++v)
      if (detail::draw_below(rng, 2) == 0) s.push_back(v);
    if (s.size() < 2) continue;

    std::int64_t expect = std::numeric_limits<std::int64_t>::max();
    for (int u : s)
      for (int v : s)
        if (u != v) expect = std::min(expect, d(u, v));
    REQUIRE(diversity<std::int64_t>(d, s) == expect);

    if (s.size() >= 3) {
      std::vector<int> sub(s.begin(), s.end() - 1);
      REQUIRE(diversity<std::int64_t>(d, s) <= diversity<std::int64_t>(d, sub));
    }
  }
}

TEST_CASE("unique distances") {
  auto fig = oracle::star_gap_instance(6);
  CHECK(unique_distances(fig) == std::vector<std::int64_t>{6});

  distance_matrix d(2);
  d.at(0, 1) = 1;
  d.at(1, 0) = 2;
  CHECK(unique_distances(d) == std::vector<std::int64_t>{1, 2});

  distance_matrix zeros(3);
  CHECK(unique_distances(zeros).empty());
}

TEST_CASE("epsilon-symmetric ball property") {
  // Any two points strictly within r of a center (under d_min) are within
  // (2+eps)*r of each other.
  std::mt19937_64 rng(53);
  const std::pair<std::int64_t, std::int64_t> eps_cases[] = {{1, 2}, {1, 1}};
  for (auto [num, den] : eps_cases) {
    for (int rep = 0; rep < 15; ++rep) {
      auto d = oracle::eps_symmetric_instance(8, num, den, rng);
      auto report = validate_pseudometric(d);
      REQUIRE(report.is_pseudometric);
      REQUIRE_FALSE(report.epsilon.unbounded);

      for (std::int64_t r : unique_distances(d))
        for (int z = 0; z < d.size(); ++z)
          for (int x = 0; x < d.size(); ++x)
            for (int y = 0; y < d.size(); ++y) {
              if (x == y || d_min(d, x, z) >= r || d_min(d, y, z) >= r) continue;
              // d_min(x,y) < (2 + num/den) * r, exactly
              REQUIRE(static_cast<__int128>(d_min(d, x, y)) * den <
                      static_cast<__int128>(2 * den + num) * r);
            }
    }
  }
}

TEST_CASE("threshold digraph: star-gap arcs at sigma R/6") {
  auto d = oracle::star_gap_instance(6);
  std::vector<int> all{0, 1, 2, 3, 4};
  auto t = build_threshold_digraph(d, all, cutoff<std::int64_t>{6, 6});
  CHECK(t.graph.arc_count() == 6);
  for (int i = 0; i <= 2; ++i)
    for (int j = 3; j <= 4; ++j) REQUIRE(t.graph.has_arc(i, j));

  auto empty = build_threshold_digraph(d, all, cutoff<std::int64_t>{1, 2});
  CHECK(empty.graph.arc_count() == 6);  // the zero arcs are below every positive threshold

  auto complete = build_threshold_digraph(d, all, cutoff<std::int64_t>{7, 1});
  CHECK(complete.graph.arc_count() == 20);
}

TEST_CASE("threshold digraph: empty when sigma is at most each positive distance") {
  distance_matrix d(3);
  d.at(0, 1) = d.at(1, 0) = 2;
  d.at(0, 2) = d.at(2, 0) = 3;
  d.at(1, 2) = d.at(2, 1) = 4;
  std::vector<int> all{0, 1, 2};
  CHECK(build_threshold_digraph(d, all, cutoff<std::int64_t>{2, 1}).graph.arc_count() == 0);
}

TEST_SUITE_END();
