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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ivowa/iv_owa.hpp"
#include "ivowa/registry.hpp"
#include "support.hpp"

using namespace ivowa;
using ivowa::testing::grid_iv;
using ivowa::testing::near;

namespace {

using Vec = std::vector<Interval>;

IVOverlap interval_product() { return resolve_iv_overlap("rep(product,product)"); }

WeightVector wv(Vec w) { return WeightVector{std::move(w)}; }

constexpr AdmissibleOrder kOrders[] = {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager};

}  // namespace

TEST_CASE("builtin aggregators") {
    const auto tsum = find_iv_aggregator("tsum", 2);
    CHECK(tsum(Vec{Interval(0.5, 0.7), Interval(0.6, 0.8)}) == Interval::one());
    CHECK(near(tsum(Vec{Interval(0.1, 0.2), Interval(0.3, 0.4)}), 0.4, 0.6, 1e-15));
    const auto max1 = find_iv_aggregator("max", 1);
    for (const auto& x : testing::sample()) CHECK(max1(Vec{x}) == x);
    const auto geo = find_iv_aggregator("geomean", 2);
    const auto o = interval_product();
    const Interval a(0.1, 0.2), b(0.4, 0.9);
    CHECK(near(geo(Vec{o(Interval::one(), a), o(Interval::one(), b)}), 0.2, 0.4242640687119285, 1e-12));
    CHECK_THROWS_AS(tsum(Vec{a}), std::invalid_argument);
    CHECK_THROWS_AS(find_iv_aggregator("median", 2), std::invalid_argument);
    CHECK_THROWS_AS(builtin_aggregators(0), std::invalid_argument);
}

TEST_CASE("Dirac aggregator") {
    const auto d = find_iv_aggregator("dirac", 3);
    CHECK(d(Vec{Interval(0.2, 0.3), Interval::one(), Interval::zero()}) == Interval::one());
    CHECK(d(Vec{Interval(0.9, 1), Interval(0.5, 1), Interval::zero()}) == Interval::zero());
}

TEST_CASE("weighted vectors") {
    for (const auto& m : builtin_aggregators(3)) {
        CAPTURE(m.name);
        CHECK(is_weighted_vector(m, wv(Vec(3, Interval::one()))));
    }
    const auto mx = find_iv_aggregator("max", 2);
    CHECK(is_weighted_vector(mx, wv({Interval::one(), Interval(0.2, 0.4)})));
    CHECK_FALSE(is_weighted_vector(mx, wv({Interval(0.9, 1), Interval(0.2, 1)})));
    const auto tsum = find_iv_aggregator("tsum", 2);
    CHECK(is_weighted_vector(tsum, wv({Interval(0.5, 0.5), Interval(0.5, 0.9)})));
    CHECK_THROWS_AS(is_weighted_vector(tsum, wv({Interval::one()})), std::invalid_argument);
}

TEST_CASE("weighted-vector characterizations hold on every sampled pair") {
    // Oracles on grid indices: Max needs a weight equal to [1,1]; TruncatedSum
    // needs the lower endpoints to sum to at least 1.
    const auto mx = find_iv_aggregator("max", 2);
    const auto tsum = find_iv_aggregator("tsum", 2);
    for (int a = 0; a <= 10; ++a)
        for (int b = a; b <= 10; ++b)
            for (int c = 0; c <= 10; ++c)
                for (int d = c; d <= 10; ++d) {
                    const WeightVector w = wv({grid_iv(a, b), grid_iv(c, d)});
                    REQUIRE(is_weighted_vector(mx, w) == (a == 10 || c == 10));
                    REQUIRE(is_weighted_vector(tsum, w) == (a + c >= 10));
                }
}

TEST_CASE("normalization") {
    const auto tsum = find_iv_aggregator("tsum", 2);
    const auto n = normalize_weights(tsum, wv({Interval(0.25, 0.3), Interval(0.25, 0.4)}));
    CHECK(near(n.weights[0], 0.5, 0.6, 1e-12));
    CHECK(near(n.weights[1], 0.5, 0.8, 1e-12));
    CHECK(is_weighted_vector(tsum, n));

    const auto mx = find_iv_aggregator("max", 2);
    const auto m = normalize_weights(mx, wv({Interval(0.2, 0.4), Interval(0.1, 0.5)}));
    CHECK(m.weights[1] == Interval::one());
    CHECK(near(m.weights[0], 0.4, 0.8, 1e-15));

    CHECK_THROWS_AS(normalize_weights(find_iv_aggregator("geomean", 2), wv({Interval(0.5, 0.5), Interval(0.5, 0.5)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(normalize_weights(tsum, wv({Interval::zero(), Interval::zero()})), std::invalid_argument);
    CHECK_THROWS_AS(normalize_weights(tsum, wv({Interval(0, 0.3), Interval(0, 0.1)})), std::invalid_argument);
}

TEST_CASE("normalization is idempotent and always yields weighted vectors") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t n : {2, 3, 5, 7}) {
        for (const char* id : {"tsum", "max"}) {
            const auto m = find_iv_aggregator(id, n);
            for (int r = 0; r < 300; ++r) {
                Vec w;
                for (std::size_t i = 0; i < n; ++i) {
                    double a = u(rng), b = u(rng);
                    if (a > b) std::swap(a, b);
                    w.emplace_back(a, b);
                }
                const auto once = normalize_weights(m, wv(w));
                REQUIRE(is_weighted_vector(m, once));
                REQUIRE(normalize_weights(m, once) == once);
            }
        }
    }
}

TEST_CASE("sample tuples") {
    const auto s = testing::sample();
    CHECK(sample_tuples(2, s).size() == 66 * 66);
    const auto t3 = sample_tuples(3, s);
    CHECK(t3.size() == 4000 + 2 + 3);
    CHECK(t3.front() == Vec(3, Interval::zero()));
    CHECK(t3 == sample_tuples(3, s));
}

TEST_CASE("distributivity") {
    const auto s = testing::sample();
    const auto o = interval_product();
    CHECK(check_distributivity(find_iv_aggregator("geomean", 2), o, s));
    CHECK(check_distributivity(find_iv_aggregator("tsum", 2), o, s));
    CHECK(check_distributivity(find_iv_aggregator("max", 2), o, s));
    CHECK_FALSE(check_distributivity(find_iv_aggregator("geomean", 2), resolve_iv_overlap("rep(min,min)"), s));
}

TEST_CASE("Dirac does not distribute over overlaps") {
    // O([0,0],Y) = [0,0] and O([1,1],Y) = Y; Dirac of those is [0,0] unless
    // Y = [1,1], while the right-hand side is O([1,1],Y) = Y.
    const auto d = find_iv_aggregator("dirac", 2);
    const auto s = testing::sample();
    for (const auto& id : builtin_iv_overlap_ids()) {
        CAPTURE(id);
        const auto o = resolve_iv_overlap(id);
        const auto f = check_distributivity(d, o, s);
        REQUIRE_FALSE(f);
        const auto& w = *f.witness;
        REQUIRE(w.size() == 3);
        const auto lhs = d(Vec{o(w[0], w[2]), o(w[1], w[2])});
        const auto rhs = o(d(Vec{w[0], w[1]}), w[2]);
        CHECK_FALSE(approx_equal(lhs, rhs, 1e-9));
    }
}

TEST_CASE("homogeneity of aggregators") {
    const auto s = testing::sample();
    CHECK(check_homogeneous_M(find_iv_aggregator("max", 2), s));
    CHECK(check_homogeneous_M(find_iv_aggregator("geomean", 2), s));
    CHECK(check_homogeneous_M(find_iv_aggregator("tsum", 2), s));
    const auto d = find_iv_aggregator("dirac", 2);
    const auto f = check_homogeneous_M(d, s);
    REQUIRE_FALSE(f);
    const Interval alpha(0.5, 0.5);
    CHECK(d(Vec{product(alpha, Interval::one()), product(alpha, Interval::one())}) == Interval::zero());
    CHECK(product(alpha, d(Vec{Interval::one(), Interval::one()})) == alpha);
}

TEST_CASE("stable descending sort") {
    const Vec xs{Interval(0.2, 0.4), Interval(0.5, 0.5), Interval(0.2, 0.4), Interval(0.25, 0.75)};
    CHECK(sort_descending(AdmissibleOrder::Lex1, xs) == std::vector<std::size_t>{1, 3, 0, 2});
    CHECK(sort_descending(AdmissibleOrder::Lex2, xs) == std::vector<std::size_t>{3, 1, 0, 2});
    CHECK(sort_descending(AdmissibleOrder::XuYager, xs) == std::vector<std::size_t>{1, 3, 0, 2});
    // 0.1 + 0.9 exceeds 1 in binary64, so [0.1,0.9] outranks [0.5,0.5].
    CHECK(sort_descending(AdmissibleOrder::XuYager, Vec{Interval(0.5, 0.5), Interval(0.1, 0.9)}) ==
          std::vector<std::size_t>{1, 0});
}

TEST_CASE("basis preconditions") {
    const auto geo = find_iv_aggregator("geomean", 2);
    try {
        GowaBasis::validate(geo, resolve_iv_overlap("mig(sqrt)"));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.condition() == "neutral element");
    }
    try {
        GowaBasis::validate(geo, resolve_iv_overlap("rep(min,min)"));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.condition() == "distributivity");
        CHECK(e.witness().has_value());
    }
}

TEST_CASE("operator preconditions") {
    const auto basis = GowaBasis::validate(find_iv_aggregator("tsum", 2), interval_product());
    auto condition = [&](const WeightVector& w) {
        try {
            GowaOperator(basis, w, AdmissibleOrder::Lex1);
        } catch (const PreconditionError& e) {
            return e.condition();
        }
        return std::string("none");
    };
    CHECK(condition(wv({Interval(0.5, 0.5), Interval(0.5, 0.5)})) == "none");
    CHECK(condition(wv({Interval(0.3, 0.5), Interval(0.5, 0.5)})) == "weighted vector");
    CHECK(condition(wv({Interval::one()})) == "arity");
    CHECK(condition(wv({Interval::one(), Interval::one()})) == "distributivity");
}

TEST_CASE("worked aggregations") {
    const auto o = interval_product();
    const Vec x{Interval(0.1, 0.2), Interval(0.4, 0.9)};
    const auto geo = iv_gowa(find_iv_aggregator("geomean", 2), o, wv(Vec(2, Interval::one())),
                             AdmissibleOrder::Lex1, x);
    CHECK(near(geo, 0.2, 0.4242640687, 1e-10));
    const auto mean = iv_gowa(find_iv_aggregator("tsum", 2), o, wv(Vec(2, Interval(0.5, 0.5))),
                              AdmissibleOrder::Lex1, Vec{Interval(0.2, 0.4), Interval(0.6, 0.8)});
    CHECK(near(mean, 0.4, 0.6, 1e-12));
}

TEST_CASE("projection OWA") {
    const auto tsum = find_iv_aggregator("tsum", 2);
    const auto o = interval_product();
    const Vec x{Interval(0.3, 0.3), Interval(0.7, 0.9)};
    CHECK(projection_owa(tsum, o, 1, AdmissibleOrder::Lex1, x) == Interval(0.7, 0.9));
    CHECK(projection_owa(tsum, o, 2, AdmissibleOrder::Lex1, x) == Interval(0.3, 0.3));
    const auto tsum1 = find_iv_aggregator("tsum", 1);
    CHECK(projection_owa(tsum1, o, 1, AdmissibleOrder::Lex1, Vec{Interval(0.2, 0.6)}) == Interval(0.2, 0.6));
    try {
        projection_owa(find_iv_aggregator("geomean", 2), o, 1, AdmissibleOrder::Lex1, x);
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.condition() == "absorption");
    }
    CHECK_THROWS_AS(selector_weights(2, 3), std::invalid_argument);
}

TEST_CASE("idempotency, boundary and product-order monotonicity") {
    const auto s = testing::sample();
    const auto o = interval_product();
    struct Config {
        const char* m;
        Vec w;
    };
    const std::vector<Config> configs{
        {"geomean", Vec(3, Interval::one())},
        {"tsum", Vec{Interval(0.2, 0.2), Interval(0.3, 0.3), Interval(0.5, 0.5)}},
        {"max", Vec{Interval(0.1, 0.4), Interval::one(), Interval(0.3, 0.3)}},
    };
    std::mt19937 rng(47);
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    for (const auto& c : configs) {
        const auto basis = GowaBasis::validate(find_iv_aggregator(c.m, 3), o);
        for (auto ord : kOrders) {
            CAPTURE(c.m);
            const GowaOperator op(basis, wv(c.w), ord);
            for (const auto& x : s) REQUIRE(approx_equal(op(Vec(3, x)), x, 1e-12));
            CHECK(op(Vec(3, Interval::zero())) == Interval::zero());
            CHECK(op(Vec(3, Interval::one())) == Interval::one());
            for (int r = 0; r < 2000; ++r) {
                Vec x, y;
                for (int i = 0; i < 3; ++i) {
                    const auto a = s[pick(rng)], b = s[pick(rng)];
                    x.push_back(meet(a, b));
                    y.push_back(join(a, b));
                }
                if (sort_descending(ord, x) != sort_descending(ord, y)) continue;
                REQUIRE(leq_product(op(x), op(y)));
            }
        }
    }
}
