// Copyright 2026 The knapred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "knapred/aggregation.hpp"
#include "knapred/errors.hpp"
#include "knapred/hull_oracle.hpp"
#include "test_support.hpp"

using namespace knapred;
using namespace knapred::oracle;
using namespace knapred::testing;

namespace {

std::vector<Point> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Point> out;
  for (const auto& r : rows) out.push_back(vec(r));
  return out;
}

PointSet set_of(std::vector<Point> points) {
  PointSet s;
  s.dim = points.empty() ? 0 : points.front().size();
  s.points = std::move(points);
  return s;
}

}  // namespace

TEST_SUITE("hull_oracle") {

TEST_CASE("enumerate feasible examples") {
  auto S = enumerate_feasible(mat({{1, 1, 0}, {0, 1, 1}}), vec({1, 1}));
  CHECK(S.points == pts({{0, 1, 0}, {1, 0, 1}}));
  S = enumerate_feasible(mat({{1, 3}}), vec({11}));
  CHECK(S.points == pts({{2, 3}, {5, 2}, {8, 1}, {11, 0}}));
  S = enumerate_feasible(mat({{1, 2}, {3, 1}}), vec({0, 0}));
  CHECK(S.points == pts({{0, 0}}));
}

TEST_CASE("enumerate needs bounds for zero columns and honours caps") {
  CHECK_THROWS_AS(enumerate_feasible(mat({{1, 0}}), vec({1})), ValidationError);
  const auto S = enumerate_feasible(mat({{1, 0}}), vec({1}), kDefaultCap, vec({5, 2}));
  CHECK(S.points == pts({{1, 0}, {1, 1}, {1, 2}}));
  CHECK_THROWS_AS(enumerate_feasible(mat({{1, 1}}), vec({100}), 10), CapExceeded);
}

TEST_CASE("enumeration equals a naive grid filter") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> ad(0, 3), bd(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 3, m = 1 + trial % 2;
    std::vector<std::vector<long>> A(m, std::vector<long>(n));
    std::vector<long> b(m);
    for (auto& row : A) {
      for (auto& e : row) e = ad(rng);
    }
    for (auto& e : b) e = bd(rng);
    Matrix AM;
    for (const auto& row : A) {
      AM.emplace_back();
      for (long e : row) AM.back().emplace_back(e);
    }
    Vector bv;
    for (long e : b) bv.emplace_back(e);
    // Box 0..20 in every coordinate (at most 9261 cells); zero columns are
    // given the same explicit bound.
    const Vector upper(n, Integer(20));
    const auto S = enumerate_feasible(AM, bv, kDefaultCap, upper);
    std::vector<Point> expect;
    for (const auto& x : grid_filter(A, b, 20, n)) expect.push_back(to_point(x));
    CHECK(S.points == expect);
  }
}

TEST_CASE("convex combination examples") {
  auto w = check_convex_combination(vec({1, 1}), pts({{0, 0}, {2, 2}}));
  REQUIRE(w);
  CHECK(w->indices == std::vector<std::size_t>{0, 1});
  CHECK(w->weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  CHECK_FALSE(check_convex_combination(vec({1, 0, 1}), pts({{3, 0, 0}, {0, 1, 0}})));

  const auto others = pts({{11, 0}, {8, 1}, {2, 3}});
  w = check_convex_combination(vec({5, 2}), others);
  REQUIRE(w);
  CHECK(verify_witness(vec({5, 2}), others, *w));
  // Unique representation: (8,1) and (2,3) with weight 1/2 each.
  CHECK(w->indices == std::vector<std::size_t>{1, 2});
  CHECK(w->weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  CHECK_FALSE(check_convex_combination(vec({1}), std::vector<Point>{}));
}

TEST_CASE("convex combination handles negative coordinates") {
  const auto others = pts({{-2, 0}, {2, 0}, {0, 3}});
  const auto w = check_convex_combination(vec({0, 1}), others);
  REQUIRE(w);
  CHECK(verify_witness(vec({0, 1}), others, *w));
  CHECK_FALSE(check_convex_combination(vec({0, -1}), others));
}

TEST_CASE("verify_witness rejects bad certificates") {
  const auto others = pts({{0, 0}, {2, 2}});
  CHECK_FALSE(verify_witness(vec({1, 1}), others, {{0, 1}, {Rational(1, 3), Rational(2, 3)}}));
  CHECK_FALSE(verify_witness(vec({1, 1}), others, {{0, 1}, {Rational(1, 2), Rational(1, 3)}}));
  CHECK_FALSE(verify_witness(vec({1, 1}), others, {{0, 5}, {Rational(1, 2), Rational(1, 2)}}));
  CHECK(verify_witness(vec({1, 1}), others, {{0, 1}, {Rational(1, 2), Rational(1, 2)}}));
}

TEST_CASE("vertex set examples") {
  auto S = set_of(pts({{2, 3}, {5, 2}, {8, 1}, {11, 0}}));
  auto V = vertex_set(S);
  CHECK(V.vertices == std::vector<std::size_t>{0, 3});
  CHECK(V.witnesses.size() == 2);
  for (const auto& [idx, w] : V.witnesses) CHECK(verify_witness(S.points[idx], S.points, w));

  S = set_of(pts({{0, 1, 0}, {1, 0, 1}, {3, 0, 0}}));
  V = vertex_set(S);
  CHECK(V.vertices == std::vector<std::size_t>{0, 1, 2});

  S = set_of(pts({{4, 4}}));
  CHECK(vertex_set(S).vertices == std::vector<std::size_t>{0});
}

TEST_CASE("vertex reports are complete and certified") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coord(0, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    std::vector<Point> raw;
    for (int k = 0; k < 12; ++k) {
      Point p;
      for (std::size_t d = 0; d < dim; ++d) p.emplace_back(coord(rng));
      raw.push_back(p);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    const auto S = set_of(raw);
    const auto V = vertex_set(S);
    CHECK(V.vertices.size() + V.witnesses.size() == S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
      const bool vertex = V.is_vertex(i);
      CHECK(vertex != (V.witnesses.count(i) == 1));
      if (!vertex) CHECK(verify_witness(S.points[i], S.points, V.witnesses.at(i)));
      // Independent recheck against all other points.
      std::vector<Point> others;
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (k != i) others.push_back(S.points[k]);
      }
      CHECK(check_convex_combination(S.points[i], others).has_value() == !vertex);
    }
  }
}

TEST_CASE("brute force optimum") {
  auto opt = brute_force_optimum(make(mat({{1, 1, 0}, {0, 1, 1}}), vec({1, 1}), vec({1, 1, 1})));
  CHECK(opt.status == OptimumStatus::Optimal);
  CHECK(opt.value == 1);
  CHECK(opt.argopt == pts({{0, 1, 0}}));

  opt = brute_force_optimum(make(mat({{2}}), vec({1}), vec({1})));
  CHECK(opt.status == OptimumStatus::Infeasible);

  opt = brute_force_optimum(make(mat({{1, 1, 0}, {0, 1, 1}}), vec({1, 1}), vec({0, 0, 0})));
  CHECK(opt.value == 0);
  CHECK(opt.argopt == pts({{0, 1, 0}, {1, 0, 1}}));

  opt = brute_force_optimum(
      make(mat({{1, 1, 0}, {0, 1, 1}}), vec({1, 1}), vec({1, 1, 1}), Sense::Maximize));
  CHECK(opt.value == 2);
  CHECK(opt.argopt == pts({{1, 0, 1}}));

  opt = brute_force_optimum(make(mat({{1, 0}}), vec({1}), vec({0, -1})));
  CHECK(opt.status == OptimumStatus::Unbounded);
  opt = brute_force_optimum(make(mat({{1, 0}}), vec({1}), vec({0, 3})));
  CHECK(opt.status == OptimumStatus::Optimal);
  CHECK(opt.argopt == pts({{1, 0}}));
}

TEST_CASE("rhs is a vertex: examples") {
  CHECK(check_rhs_is_vertex(vec({2, 3})));
  CHECK(check_rhs_is_vertex(vec({0, 0, 0})));
  CHECK(check_rhs_is_vertex(vec({1, 1})));
  CHECK(check_rhs_is_vertex(vec({9})));
  CHECK(check_rhs_is_vertex(vec({3, 4, 0, 0})));
}

TEST_CASE("rhs is a vertex: uniqueness fails behind a zero") {
  // f = (1, 1): every t with t1 + t2 = 4 has the same coordinate sum.
  const auto r = check_rhs_is_vertex(vec({0, 4}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == vec({1, 3}));
  CHECK_FALSE(check_rhs_is_vertex(vec({2, 0, 1})));
}

TEST_CASE("vertex preservation examples") {
  CHECK(check_vertex_preservation(make(mat({{1, 1, 0}, {0, 1, 1}}), vec({1, 1}), vec({0, 0, 0}))));
  CHECK(check_vertex_preservation(make(mat({{2, 3, 1}}), vec({7}), vec({0, 0, 0}))));
  CHECK(check_vertex_preservation(make(mat({{1, 1}, {1, 2}}), vec({2, 3}), vec({0, 0}))));
  const auto vac = check_vertex_preservation(make(mat({{1, 0}, {0, 2}}), vec({1, 1}), vec({0, 0})));
  CHECK(vac.holds);
  CHECK(vac.vacuous);
  CHECK_THROWS_AS(check_vertex_preservation(make(mat({{1, 0}}), vec({1}), vec({0, 0}))),
                  ValidationError);
}

TEST_CASE("vertex rhs bound examples") {
  CHECK(check_vertex_rhs_bound(make(mat({{1, 1, 0}, {0, 1, 1}}), vec({1, 1}), vec({0, 0, 0}))));
  CHECK(check_vertex_rhs_bound(make(mat({{1, 2}}), vec({0}), vec({0, 0}))));
  CHECK(check_vertex_rhs_bound(make(mat({{1, 1}, {1, 2}}), vec({2, 3}), vec({0, 0}))));
}

TEST_CASE("box injectivity") {
  CHECK(check_box_injectivity(vec({1, 3, 2}), vec({1, 0, 1})));
  CHECK_FALSE(check_box_injectivity(vec({1, 1}), vec({1, 1})));
  CHECK(check_box_injectivity(vec({5, 7}), vec({0, 0})));
  CHECK_THROWS_AS(check_box_injectivity(vec({1, 1}), vec({10, 10}), 50), CapExceeded);
}

TEST_CASE("audit of the worked instance") {
  const auto audit = audit_instance(make(mat({{1, 1, 0}, {0, 1, 1}}), vec({1, 1}), vec({1, 1, 1})));
  CHECK(audit.feasible.points == pts({{0, 1, 0}, {1, 0, 1}}));
  CHECK(audit.vertices.vertices.size() == 2);
  CHECK(audit.aggregated.points == pts({{0, 1, 0}, {1, 0, 1}, {3, 0, 0}}));
  CHECK(audit.aggregated_vertices.vertices.size() == 3);
  CHECK(audit.vertex_preservation.holds);
  CHECK(audit.vertex_rhs_bound.holds);
  CHECK(audit.box_injectivity.holds);
}

TEST_CASE("audit agrees with the standalone checks") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = drop_zero_columns(random_instance(rng)).inner;
    if (inst.cols() == 0) continue;
    const auto audit = audit_instance(inst);
    CHECK(audit.vertex_preservation.holds == check_vertex_preservation(inst).holds);
    CHECK(audit.vertex_rhs_bound.holds == check_vertex_rhs_bound(inst).holds);
    CHECK(audit.a0 == aggregated_rhs_closed_form(inst.b));
  }
}

}  // TEST_SUITE
