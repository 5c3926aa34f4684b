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

#include "ivowa/interval.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ivowa {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Knuth's TwoSum: s + e == a + b exactly.
std::pair<double, double> two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

std::strong_ordering compare_exact(std::pair<double, double> x, std::pair<double, double> y) {
    // Rounding to nearest is monotone, so distinct rounded heads already
    // decide the order of the exact values.
    if (x.first != y.first) return x.first < y.first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.second != y.second) return x.second < y.second ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_real(double a, double b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double pow_unit(double x, double k) {
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    return std::pow(x, k);
}

}  // namespace

Interval::Interval(double lower, double upper) : lower_(lower), upper_(upper) {
    if (!(lower >= 0.0 && upper <= 1.0 && lower <= upper)) {
        throw std::invalid_argument("Interval: endpoints must satisfy 0 <= lower <= upper <= 1, got [" +
                                    format_real(lower) + "," + format_real(upper) + "]");
    }
}

ExponentInterval::ExponentInterval(double k1, double k2) : k1_(k1), k2_(k2) {
    if (!(k1 > 0.0 && k1 <= k2 && std::isfinite(k2))) {
        throw std::invalid_argument("ExponentInterval: requires 0 < k1 <= k2");
    }
}

GeneralInterval::GeneralInterval(double lower, double upper) : lower_(lower), upper_(upper) {
    if (!(lower <= upper)) {
        throw std::invalid_argument("GeneralInterval: requires lower <= upper");
    }
}

Interval product(const Interval& x, const Interval& y) {
    return Interval(x.lower() * y.lower(), x.upper() * y.upper());
}

Interval pow(const Interval& x, const ExponentInterval& k) {
    return Interval(pow_unit(x.lower(), k.k2()), pow_unit(x.upper(), k.k1()));
}

GeneralInterval pow_neg(const Interval& x, const ExponentInterval& k) {
    if (x.lower() == 0.0) {
        throw std::domain_error("pow_neg: lower endpoint must be positive");
    }
    return GeneralInterval(std::pow(x.upper(), -k.k1()), std::pow(x.lower(), -k.k2()));
}

Interval complement(const Interval& x) {
    return Interval(1.0 - x.upper(), 1.0 - x.lower());
}

GeneralInterval arctan_iv(const Interval& x) {
    return GeneralInterval(std::atan(x.lower()), std::atan(x.upper()));
}

double midpoint(const Interval& x) {
    return (x.lower() + x.upper()) / 2.0;
}

Interval contract_half(const Interval& x) {
    const double m = midpoint(x);
    return Interval((x.lower() + m) / 2.0, (x.upper() + m) / 2.0);
}

bool leq_product(const Interval& x, const Interval& y) {
    return x.lower() <= y.lower() && x.upper() <= y.upper();
}

bool subseteq(const Interval& x, const Interval& y) {
    return y.lower() <= x.lower() && x.upper() <= y.upper();
}

Interval join(const Interval& x, const Interval& y) {
    return Interval(std::max(x.lower(), y.lower()), std::max(x.upper(), y.upper()));
}

Interval meet(const Interval& x, const Interval& y) {
    return Interval(std::min(x.lower(), y.lower()), std::min(x.upper(), y.upper()));
}

double distance(const Interval& x, const Interval& y) {
    return std::max(std::abs(x.lower() - y.lower()), std::abs(x.upper() - y.upper()));
}

bool approx_equal(const Interval& x, const Interval& y, double tolerance) {
    return distance(x, y) <= tolerance;
}

std::strong_ordering compare(AdmissibleOrder order, const Interval& x, const Interval& y) {
    switch (order) {
        case AdmissibleOrder::Lex1:
            if (auto c = compare_real(x.lower(), y.lower()); c != 0) return c;
            return compare_real(x.upper(), y.upper());
        case AdmissibleOrder::Lex2:
            if (auto c = compare_real(x.upper(), y.upper()); c != 0) return c;
            return compare_real(x.lower(), y.lower());
        case AdmissibleOrder::XuYager: {
            const auto sx = two_sum(x.lower(), x.upper());
            const auto sy = two_sum(y.lower(), y.upper());
            if (auto c = compare_exact(sx, sy); c != 0) return c;
            // Equal sums: the narrower interval is the larger one.
            const auto wx = two_sum(x.upper(), -x.lower());
            const auto wy = two_sum(y.upper(), -y.lower());
            return compare_exact(wy, wx);
        }
    }
    throw std::logic_error("compare: unknown admissible order");
}

OrderKey order_key(AdmissibleOrder order, const Interval& x) {
    switch (order) {
        case AdmissibleOrder::Lex1: return {x.lower(), x.upper()};
        case AdmissibleOrder::Lex2: return {x.upper(), x.lower()};
        case AdmissibleOrder::XuYager: return {x.lower() + x.upper(), x.upper() - x.lower()};
    }
    throw std::logic_error("order_key: unknown admissible order");
}

std::string_view to_string(AdmissibleOrder order) {
    switch (order) {
        case AdmissibleOrder::Lex1: return "lex1";
        case AdmissibleOrder::Lex2: return "lex2";
        case AdmissibleOrder::XuYager: return "xuyager";
    }
    return "?";
}

AdmissibleOrder parse_order(std::string_view text) {
    std::string lowered;
    for (char c : trim(text)) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lowered == "lex1") return AdmissibleOrder::Lex1;
    if (lowered == "lex2") return AdmissibleOrder::Lex2;
    if (lowered == "xuyager" || lowered == "xu-yager") return AdmissibleOrder::XuYager;
    throw std::invalid_argument("unknown admissible order '" + std::string(text) + "'");
}

std::string format_real(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

std::string to_string(const Interval& x) {
    return "[" + format_real(x.lower()) + "," + format_real(x.upper()) + "]";
}

double parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    return value;
}

Interval parse_interval(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty interval");
    if (text.front() != '[') {
        const double x = parse_real(text);
        return Interval(x, x);
    }
    if (text.back() != ']') throw std::invalid_argument("interval '" + std::string(text) + "' is missing ']'");
    const auto body = text.substr(1, text.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
        throw std::invalid_argument("interval '" + std::string(text) + "' must have exactly two endpoints");
    }
    return Interval(parse_real(body.substr(0, comma)), parse_real(body.substr(comma + 1)));
}

ExponentInterval parse_exponent(std::string_view text) {
    text = trim(text);
    if (text.empty() || text.front() != '[') return ExponentInterval(parse_real(text));
    if (text.back() != ']') throw std::invalid_argument("exponent '" + std::string(text) + "' is missing ']'");
    const auto body = text.substr(1, text.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("exponent needs two components");
    return ExponentInterval(parse_real(body.substr(0, comma)), parse_real(body.substr(comma + 1)));
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << to_string(x);
}

std::ostream& operator<<(std::ostream& os, const GeneralInterval& x) {
    return os << "[" << format_real(x.lower()) << "," << format_real(x.upper()) << "]";
}

}  // namespace ivowa
