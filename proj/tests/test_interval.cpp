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

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "ivowa/interval.hpp"
#include "support.hpp"

using namespace ivowa;
using ivowa::testing::near;

TEST_CASE("interval invariant") {
    CHECK_THROWS_AS(Interval(0.6, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Interval(-0.1, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.1, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(Interval(NAN, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ExponentInterval(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ExponentInterval(0, 1), std::invalid_argument);
    CHECK(Interval(0.3, 0.3).is_degenerate());
}

TEST_CASE("product") {
    CHECK(near(product(Interval(0.2, 0.5), Interval(0.4, 0.8)), 0.08, 0.40, 1e-15));
    for (const auto& x : testing::sample()) {
        CHECK(product(Interval::one(), x) == x);
        CHECK(product(Interval::zero(), x) == Interval::zero());
    }
}

TEST_CASE("pow with exponent interval") {
    CHECK(pow(Interval(0.25, 0.25), ExponentInterval(0.5)) == Interval(0.5, 0.5));
    CHECK(pow(Interval(0, 1), ExponentInterval(1, 2)) == Interval(0, 1));
    for (const auto& x : testing::sample()) CHECK(pow(x, ExponentInterval(1)) == x);
    // Lower endpoint takes the larger exponent.
    CHECK(near(pow(Interval(0.5, 0.5), ExponentInterval(1, 2)), 0.25, 0.5, 0));
}

TEST_CASE("pow_neg") {
    CHECK(pow_neg(Interval(0.5, 0.5), ExponentInterval(1)) == GeneralInterval(2, 2));
    CHECK(pow_neg(Interval::one(), ExponentInterval(1, 3)) == GeneralInterval(1, 1));
    const auto g = pow_neg(Interval(0.25, 0.5), ExponentInterval(1, 2));
    CHECK(near(g.lower(), 2, 1e-12));
    CHECK(near(g.upper(), 16, 1e-12));
    CHECK_THROWS_AS(pow_neg(Interval(0, 0.5), ExponentInterval(1)), std::domain_error);
}

TEST_CASE("complement") {
    CHECK(complement(Interval(0.25, 0.75)) == Interval(0.25, 0.75));
    CHECK(near(complement(Interval(0.3, 0.7)), 0.3, 0.7, 1e-15));
    CHECK(complement(Interval::zero()) == Interval::one());
    CHECK(near(complement(Interval(0.1, 0.4)), 0.6, 0.9, 1e-15));
    for (const auto& x : testing::sample()) CHECK(approx_equal(complement(complement(x)), x, 1e-15));
}

TEST_CASE("arctan") {
    const double quarter_pi = std::numbers::pi / 4;
    CHECK(arctan_iv(Interval::zero()) == GeneralInterval(0, 0));
    CHECK(near(arctan_iv(Interval::one()).lower(), quarter_pi, 1e-15));
    const auto g = arctan_iv(Interval(0, 1));
    CHECK(g.lower() == 0);
    CHECK(near(g.upper(), quarter_pi, 1e-15));
}

TEST_CASE("midpoint and contraction") {
    CHECK(contract_half(Interval(0, 1)) == Interval(0.25, 0.75));
    CHECK(near(midpoint(Interval(0.2, 0.6)), 0.4, 1e-15));
    for (int i = 0; i <= 10; ++i) {
        const auto x = Interval::degenerate(i / 10.0);
        CHECK(contract_half(x) == x);
    }
    for (const auto& x : testing::sample()) {
        CHECK(subseteq(contract_half(x), x));
        CHECK(near(midpoint(contract_half(x)), midpoint(x), 1e-15));
    }
}

TEST_CASE("partial orders") {
    CHECK(leq_product(Interval(0.1, 0.3), Interval(0.2, 0.5)));
    CHECK_FALSE(leq_product(Interval(0.1, 0.9), Interval(0.2, 0.5)));
    CHECK(subseteq(Interval(0.5, 0.5), Interval(0, 1)));
    CHECK_FALSE(subseteq(Interval(0, 1), Interval(0.5, 0.5)));
}

TEST_CASE("lattice operations") {
    CHECK(join(Interval(0.1, 0.5), Interval(0.3, 0.4)) == Interval(0.3, 0.5));
    for (const auto& x : testing::sample()) {
        CHECK(meet(x, x) == x);
        CHECK(meet(Interval::zero(), x) == Interval::zero());
        CHECK(join(Interval::one(), x) == Interval::one());
    }
}

TEST_CASE("Moore distance") {
    CHECK(distance(Interval(0.1, 0.5), Interval(0.2, 0.9)) == doctest::Approx(0.4));
    CHECK(distance(Interval(0.3, 0.3), Interval(0.3, 0.3)) == 0);
}

TEST_CASE("admissible order examples") {
    CHECK(compare(AdmissibleOrder::Lex1, Interval(0.2, 0.5), Interval(0.2, 0.9)) < 0);
    CHECK(compare(AdmissibleOrder::XuYager, Interval(0.3, 0.6), Interval(0.2, 0.9)) < 0);
    CHECK(compare(AdmissibleOrder::Lex2, Interval(0.5, 0.6), Interval(0, 0.7)) < 0);
    CHECK(compare(AdmissibleOrder::Lex1, Interval(0.5, 0.6), Interval(0, 0.7)) > 0);
    // Equal sums: the wider interval is smaller.
    CHECK(compare(AdmissibleOrder::XuYager, Interval(0, 1), Interval(0.5, 0.5)) < 0);
    for (auto ord : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager})
        for (const auto& x : testing::sample()) CHECK(compare(ord, x, x) == 0);
}

TEST_CASE("Xu-Yager compares exact sums") {
    // Sums and widths of binary64 values in [0,1] on this grid are exact in
    // the 64-bit significand of x87 long double.
    if (LDBL_MANT_DIG < 64) return;
    auto oracle = [](const Interval& x, const Interval& y) {
        const long double sx = static_cast<long double>(x.lower()) + x.upper();
        const long double sy = static_cast<long double>(y.lower()) + y.upper();
        if (sx != sy) return sx < sy ? -1 : 1;
        const long double wx = static_cast<long double>(x.upper()) - x.lower();
        const long double wy = static_cast<long double>(y.upper()) - y.lower();
        if (wx != wy) return wx > wy ? -1 : 1;
        return 0;
    };
    const auto s = SampleGrid{0.05}.intervals();
    for (const auto& x : s)
        for (const auto& y : s) {
            const auto c = compare(AdmissibleOrder::XuYager, x, y);
            const int got = c < 0 ? -1 : (c > 0 ? 1 : 0);
            REQUIRE(got == oracle(x, y));
        }
    // 0.1 + 0.2 exceeds 0.15 + 0.15 in binary64, although both round to 0.3.
    CHECK(compare(AdmissibleOrder::XuYager, Interval(0.1, 0.2), Interval(0.15, 0.15)) > 0);
}

TEST_CASE("order keys") {
    const Interval x(0.2, 0.7);
    CHECK(order_key(AdmissibleOrder::Lex1, x).primary == 0.2);
    CHECK(order_key(AdmissibleOrder::Lex2, x).primary == 0.7);
    CHECK(order_key(AdmissibleOrder::XuYager, x).primary == doctest::Approx(0.9));
    CHECK(order_key(AdmissibleOrder::XuYager, x).secondary == doctest::Approx(0.5));
}

TEST_CASE("order names") {
    CHECK(parse_order("LEX1") == AdmissibleOrder::Lex1);
    CHECK(parse_order(" xu-yager ") == AdmissibleOrder::XuYager);
    CHECK(to_string(AdmissibleOrder::Lex2) == "lex2");
    CHECK_THROWS_AS(parse_order("lex3"), std::invalid_argument);
}

TEST_CASE("text form") {
    CHECK(parse_interval("[0.2, 0.5]") == Interval(0.2, 0.5));
    CHECK(parse_interval("0.4") == Interval(0.4, 0.4));
    CHECK_THROWS_AS(parse_interval("[0.6,0.2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("[0.2,0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("[0.1,0.2,0.3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval(""), std::invalid_argument);
    CHECK(parse_exponent("[1,2]") == ExponentInterval(1, 2));
    CHECK(parse_exponent("0.5") == ExponentInterval(0.5));
    CHECK(to_string(Interval(0.1, 0.30000000000000004)) == "[0.1,0.30000000000000004]");
}

TEST_CASE("text form round trip") {
    std::uint64_t state = 12345;
    auto next = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 2000; ++i) {
        double a = next(), b = next();
        if (a > b) std::swap(a, b);
        const Interval x(a, b);
        REQUIRE(parse_interval(to_string(x)) == x);
    }
}
