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

#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace ivowa {

/**
 * Closed subinterval [lower, upper] of the unit interval.
 *
 * The constructor enforces 0 <= lower <= upper <= 1; every operation that
 * returns an Interval is closed under that invariant. Equality is exact on
 * both endpoints.
 */
class Interval {
public:
    /// Throws std::invalid_argument when the endpoints are inverted, NaN or
    /// outside [0,1].
    Interval(double lower, double upper);

    static Interval degenerate(double x) { return Interval(x, x); }
    static Interval zero() { return Interval(0.0, 0.0); }
    static Interval one() { return Interval(1.0, 1.0); }

    double lower() const { return lower_; }
    double upper() const { return upper_; }
    double width() const { return upper_ - lower_; }
    bool is_degenerate() const { return lower_ == upper_; }

    bool operator==(const Interval&) const = default;

private:
    double lower_;
    double upper_;
};

/// Exponent K = [k1, k2] with 0 < k1 <= k2.
class ExponentInterval {
public:
    ExponentInterval(double k1, double k2);
    explicit ExponentInterval(double k) : ExponentInterval(k, k) {}

    double k1() const { return k1_; }
    double k2() const { return k2_; }

    bool operator==(const ExponentInterval&) const = default;

private:
    double k1_;
    double k2_;
};

/// Interval on the extended real line; codomain of pow_neg and arctan_iv.
class GeneralInterval {
public:
    GeneralInterval(double lower, double upper);

    double lower() const { return lower_; }
    double upper() const { return upper_; }

    bool operator==(const GeneralInterval&) const = default;

private:
    double lower_;
    double upper_;
};

// Arithmetic on L([0,1]).

Interval product(const Interval& x, const Interval& y);
inline Interval operator*(const Interval& x, const Interval& y) { return product(x, y); }

/// [x.lower^k2, x.upper^k1]; 0^k is 0 for k > 0.
Interval pow(const Interval& x, const ExponentInterval& k);

/// [x.upper^-k1, x.lower^-k2]. Throws std::domain_error when x.lower == 0.
GeneralInterval pow_neg(const Interval& x, const ExponentInterval& k);

Interval complement(const Interval& x);
GeneralInterval arctan_iv(const Interval& x);

double midpoint(const Interval& x);

/// Halves the radius around the midpoint: [(lower+m)/2, (upper+m)/2].
Interval contract_half(const Interval& x);

// Partial orders and lattice operations.

bool leq_product(const Interval& x, const Interval& y);
bool subseteq(const Interval& x, const Interval& y);
Interval join(const Interval& x, const Interval& y);
Interval meet(const Interval& x, const Interval& y);

/// Moore distance: the larger of the two endpoint distances.
double distance(const Interval& x, const Interval& y);
bool approx_equal(const Interval& x, const Interval& y, double tolerance);

// Admissible orders.

/**
 * Total orders on L([0,1]) that refine the product order.
 *
 * Lex1 compares lower endpoints first, Lex2 upper endpoints first. XuYager
 * compares lower+upper and breaks ties by width, the wider interval being the
 * smaller one. All three comparisons are exact in binary64; XuYager uses
 * error-free transformations so that sums and widths are compared exactly.
 */
enum class AdmissibleOrder { Lex1, Lex2, XuYager };

std::strong_ordering compare(AdmissibleOrder order, const Interval& x, const Interval& y);

/// Display key: (lower, upper) for Lex1, (upper, lower) for Lex2 and
/// (lower+upper, upper-lower) for XuYager.
struct OrderKey {
    double primary;
    double secondary;
};
OrderKey order_key(AdmissibleOrder order, const Interval& x);

std::string_view to_string(AdmissibleOrder order);
/// Accepts "lex1", "lex2", "xuyager" (case-insensitive). Throws std::invalid_argument.
AdmissibleOrder parse_order(std::string_view text);

// Text form: "[a,b]" or the degenerate shorthand "a".

/// Shortest decimal that round-trips to the same binary64 value.
std::string format_real(double x);
std::string to_string(const Interval& x);
/// Throws std::invalid_argument on malformed text or invariant violations.
Interval parse_interval(std::string_view text);
/// Parses a decimal real with no surrounding garbage. Throws std::invalid_argument.
double parse_real(std::string_view text);
/// "[k1,k2]" or "k". Throws std::invalid_argument.
ExponentInterval parse_exponent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Interval& x);
std::ostream& operator<<(std::ostream& os, const GeneralInterval& x);

}  // namespace ivowa
