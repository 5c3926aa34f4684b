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

#include "ivowa/real_overlap.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "ivowa/interval.hpp"

namespace ivowa {

namespace {

const std::set<Claim> kOverlapAxioms{Claim::GO1, Claim::GO2, Claim::GO3, Claim::GO4, Claim::GO5};

std::set<Claim> overlap_plus(std::initializer_list<Claim> extra) {
    auto s = kOverlapAxioms;
    s.insert(extra.begin(), extra.end());
    return s;
}

double unit_pow(double x, double p) {
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    return std::pow(x, p);
}

RealOverlap minmax(double p) {
    return {"minmax:p=" + format_real(p),
            [p](double x, double y) { return std::min(x, y) * std::max(unit_pow(x, p), unit_pow(y, p)); },
            overlap_plus({Claim::NeutralOne}),
            std::nullopt};
}

RealOverlap powprod(double p) {
    return {"powprod:p=" + format_real(p),
            [p](double x, double y) { return unit_pow(x, p) * unit_pow(y, p); },
            overlap_plus({Claim::Associative, Claim::Migrative, Claim::Homogeneous}),
            2.0 * p};
}

std::vector<RealOverlap> make_catalog() {
    std::vector<RealOverlap> c;
    c.push_back({"product", [](double x, double y) { return x * y; },
                 overlap_plus({Claim::Associative, Claim::Migrative, Claim::Homogeneous, Claim::NeutralOne}), 2.0});
    c.push_back({"min", [](double x, double y) { return std::min(x, y); },
                 overlap_plus({Claim::Associative, Claim::Homogeneous, Claim::NeutralOne}), 1.0});
    for (double p : {1.0, 2.0, 3.0}) c.push_back(minmax(p));
    for (double p : {2.0, 3.0}) c.push_back(powprod(p));
    c.push_back({"sqrtprod", [](double x, double y) { return std::sqrt(x * y); },
                 overlap_plus({Claim::Migrative, Claim::Homogeneous}), 1.0});
    // 1-(1-t)^2 is evaluated in this form so that it stays monotone in binary64.
    c.push_back({"migquad",
                 [](double x, double y) {
                     const double s = 1.0 - x * y;
                     return 1.0 - s * s;
                 },
                 overlap_plus({Claim::Migrative}), std::nullopt});
    // min - (1 - max): 1 - max is exact whenever the result is positive, so
    // the value never exceeds min(x,y) and the form is symmetric.
    c.push_back({"lukasiewicz",
                 [](double x, double y) { return std::max(0.0, std::min(x, y) - (1.0 - std::max(x, y))); },
                 {Claim::GO1, Claim::GO4, Claim::GO5, Claim::Associative}, std::nullopt});
    return c;
}

std::optional<double> parse_family_parameter(const std::string& id, const std::string& prefix) {
    if (id.rfind(prefix, 0) != 0) return std::nullopt;
    const double p = parse_real(id.substr(prefix.size()));
    if (!(p > 0.0)) throw std::invalid_argument("family parameter must be positive in '" + id + "'");
    return p;
}

std::vector<RealAggregator> make_aggregators4() {
    std::vector<RealAggregator> c;
    for (std::size_t i = 0; i < 4; ++i) {
        c.push_back({"p" + std::to_string(i + 1), 4, [i](std::span<const double> x) { return x[i]; }});
    }
    c.push_back({"min12", 4, [](std::span<const double> x) { return std::min(x[0], x[1]); }});
    c.push_back({"max12", 4, [](std::span<const double> x) { return std::max(x[0], x[1]); }});
    c.push_back({"min", 4, [](std::span<const double> x) { return *std::min_element(x.begin(), x.end()); }});
    c.push_back({"max", 4, [](std::span<const double> x) { return *std::max_element(x.begin(), x.end()); }});
    c.push_back({"prod123", 4, [](std::span<const double> x) { return x[0] * x[1] * x[2]; }});
    return c;
}

}  // namespace

bool RealOverlap::claims_overlap() const {
    return std::all_of(kOverlapAxioms.begin(), kOverlapAxioms.end(), [this](Claim c) { return claims(c); });
}

const std::vector<RealOverlap>& builtin_overlaps() {
    static const std::vector<RealOverlap> catalog = make_catalog();
    return catalog;
}

RealOverlap find_overlap(const std::string& id) {
    for (const auto& g : builtin_overlaps())
        if (g.name == id) return g;
    if (auto p = parse_family_parameter(id, "minmax:p=")) return minmax(*p);
    if (auto p = parse_family_parameter(id, "powprod:p=")) return powprod(*p);
    throw std::invalid_argument("unknown real overlap '" + id + "'");
}

RealOverlap lattice_join(const RealOverlap& g1, const RealOverlap& g2) {
    return {"join(" + g1.name + "," + g2.name + ")",
            [a = g1.eval, b = g2.eval](double x, double y) { return std::max(a(x, y), b(x, y)); },
            kOverlapAxioms, std::nullopt};
}

RealOverlap lattice_meet(const RealOverlap& g1, const RealOverlap& g2) {
    return {"meet(" + g1.name + "," + g2.name + ")",
            [a = g1.eval, b = g2.eval](double x, double y) { return std::min(a(x, y), b(x, y)); },
            kOverlapAxioms, std::nullopt};
}

RealOverlap convex_sum(double w1, double w2, const RealOverlap& g1, const RealOverlap& g2) {
    if (!(w1 >= 0.0 && w1 <= 1.0 && w2 >= 0.0 && w2 <= 1.0) || std::abs(w1 + w2 - 1.0) > 1e-12) {
        throw std::invalid_argument("convex_sum: weights must lie in [0,1] and sum to 1");
    }
    return {"convex(" + format_real(w1) + "," + g1.name + "," + g2.name + ")",
            [w1, a = g1.eval, b = g2.eval](double x, double y) {
                // b + w1*(a-b) keeps the boundary values 0 and 1 exact.
                const double vb = b(x, y);
                return vb + w1 * (a(x, y) - vb);
            },
            kOverlapAxioms, std::nullopt};
}

double real_owa(std::span<const double> weights, std::span<const double> xs) {
    if (weights.size() != xs.size()) throw std::invalid_argument("real_owa: weight and input sizes differ");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("real_owa: weights must lie in [0,1]");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("real_owa: weights must sum to 1");
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double acc = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) acc += weights[i] * sorted[i];
    return acc;
}

const std::vector<RealAggregator>& builtin_aggregators4() {
    static const std::vector<RealAggregator> catalog = make_aggregators4();
    return catalog;
}

RealAggregator find_aggregator4(const std::string& id) {
    for (const auto& m : builtin_aggregators4())
        if (m.name == id) return m;
    throw std::invalid_argument("unknown 4-ary aggregator '" + id + "'");
}

}  // namespace ivowa
