/*
 * Copyright 2026 The ivowa Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ivowa/real_overlap.hpp"
#include "ivowa/sampling.hpp"
#include "support.hpp"

using namespace ivowa;
using ivowa::testing::near;

TEST_CASE("catalog values") {
    CHECK(find_overlap("minmax:p=2")(0.5, 1) == 0.5);
    CHECK(find_overlap("product")(1, 1) == 1);
    CHECK(find_overlap("lukasiewicz")(0.5, 0.5) == 0);
    CHECK(near(find_overlap("lukasiewicz")(0.7, 0.6), 0.3, 1e-15));
    CHECK(near(find_overlap("sqrtprod")(0.25, 1), 0.5, 1e-15));
    CHECK(near(find_overlap("migquad")(0.5, 1), 0.75, 1e-15));
    CHECK(near(find_overlap("powprod:p=2")(0.5, 0.5), 0.0625, 1e-15));
    CHECK(near(find_overlap("minmax:p=1.5")(0.25, 1), 0.25, 1e-15));
    CHECK_THROWS_AS(find_overlap("nope"), std::invalid_argument);
    CHECK_THROWS_AS(find_overlap("minmax:p=-1"), std::invalid_argument);
}

TEST_CASE("only lukasiewicz is flagged as not an overlap") {
    for (const auto& g : builtin_overlaps()) {
        CAPTURE(g.name);
        CHECK(g.claims_overlap() == (g.name != "lukasiewicz"));
    }
}

TEST_CASE("catalog boundary and symmetry laws on the real grid") {
    const auto pts = unit_grid(kRealGridStep);
    REQUIRE(pts.size() == 21);
    for (const auto& g : builtin_overlaps()) {
        CAPTURE(g.name);
        for (double x : pts)
            for (double y : pts) {
                const double v = g(x, y);
                REQUIRE(v >= 0);
                REQUIRE(v <= 1);
                REQUIRE(v == g(y, x));
            }
        if (!g.claims_overlap()) continue;
        for (double x : pts)
            for (double y : pts) {
                REQUIRE((g(x, y) == 0) == (x * y == 0));
                REQUIRE((g(x, y) == 1) == (x * y == 1));
            }
    }
}

TEST_CASE("lukasiewicz stays below min") {
    const auto luk = find_overlap("lukasiewicz");
    const auto pts = unit_grid(0.01);
    for (double x : pts)
        for (double y : pts) REQUIRE(luk(x, y) <= std::min(x, y));
}

TEST_CASE("lattice of overlaps") {
    const auto j = lattice_join(find_overlap("product"), find_overlap("min"));
    const auto m = lattice_meet(find_overlap("product"), find_overlap("min"));
    CHECK(near(j(0.4, 0.6), 0.4, 1e-15));
    CHECK(near(m(0.4, 0.6), 0.24, 1e-15));
    for (double y : unit_grid(0.1)) {
        CHECK(j(0, y) == 0);
        CHECK(m(0, y) == 0);
    }
}

TEST_CASE("convex sum") {
    const auto c = convex_sum(0.5, 0.5, find_overlap("product"), find_overlap("min"));
    CHECK(near(c(0.4, 0.6), 0.32, 1e-15));
    CHECK(c(1, 1) == 1);
    CHECK_THROWS_AS(convex_sum(0.7, 0.7, find_overlap("product"), find_overlap("min")), std::invalid_argument);
    CHECK_THROWS_AS(convex_sum(-0.5, 1.5, find_overlap("product"), find_overlap("min")), std::invalid_argument);
}

TEST_CASE("classic OWA") {
    const std::vector<double> xs{0.3, 0.8};
    CHECK(real_owa(std::vector<double>{1, 0}, xs) == 0.8);
    CHECK(near(real_owa(std::vector<double>{0.5, 0.5}, xs), 0.55, 1e-15));
    const std::vector<double> ys{0.4, 0.1, 0.9};
    CHECK(real_owa(std::vector<double>{0, 0, 1}, ys) == 0.1);
    CHECK_THROWS_AS(real_owa(std::vector<double>{0.5, 0.6}, xs), std::invalid_argument);
    CHECK_THROWS_AS(real_owa(std::vector<double>{1}, xs), std::invalid_argument);
}

TEST_CASE("4-ary aggregators") {
    const std::array<double, 4> x{0.2, 0.4, 0.5, 0.9};
    CHECK(find_aggregator4("p1")(x) == 0.2);
    CHECK(find_aggregator4("p4")(x) == 0.9);
    CHECK(find_aggregator4("min")(x) == 0.2);
    CHECK(find_aggregator4("max")(x) == 0.9);
    CHECK(find_aggregator4("max12")(x) == 0.4);
    CHECK(near(find_aggregator4("prod123")(x), 0.04, 1e-15));
    CHECK_THROWS_AS(find_aggregator4("p5"), std::invalid_argument);
    for (const auto& m : builtin_aggregators4()) {
        CAPTURE(m.name);
        CHECK(m(std::array<double, 4>{0, 0, 0, 0}) == 0);
        CHECK(m(std::array<double, 4>{1, 1, 1, 1}) == 1);
    }
}

TEST_CASE("continuity heuristic separates jumps from roots") {
    auto sqrtxy = [](std::span<const double> p) {
        const double v = std::sqrt(p[0] * p[1]);
        return std::pair{v, v};
    };
    auto step = [](std::span<const double> p) {
        const double v = p[0] * p[1] > 0.3 ? 1.0 : 0.0;
        return std::pair{v, v};
    };
    CHECK(continuity_heuristic(2, sqrtxy));
    const auto f = continuity_heuristic(2, step);
    CHECK_FALSE(f);
    CHECK(f.witness.has_value());
}
