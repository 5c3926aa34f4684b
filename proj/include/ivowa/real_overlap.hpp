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

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ivowa {

/// Properties a function is declared to have. Declarations are metadata;
/// the verify module decides whether they actually hold.
enum class Claim { GO1, GO2, GO3, GO4, GO5, Migrative, Homogeneous, NeutralOne, Associative };

/// Binary function on [0,1] together with its declared properties.
struct RealOverlap {
    std::string name;
    std::function<double(double, double)> eval;
    std::set<Claim> claimed;
    std::optional<double> homogeneity_order;

    double operator()(double x, double y) const { return eval(x, y); }
    bool claims(Claim c) const { return claimed.count(c) != 0; }
    bool claims_overlap() const;
};

/// n-ary function on [0,1].
struct RealAggregator {
    std::string name;
    std::size_t arity = 0;
    std::function<double(std::span<const double>)> eval;

    double operator()(std::span<const double> xs) const { return eval(xs); }
};

/**
 * Shipped real overlaps.
 *
 * Ids: `product`, `min`, `minmax:p=1|2|3` (min(x,y)max(x^p,y^p)),
 * `powprod:p=2|3` (x^p y^p), `sqrtprod` (sqrt(xy)), `migquad` (1-(1-xy)^2)
 * and `lukasiewicz` (max(0,x+y-1)), which is a t-norm but not an overlap.
 */
const std::vector<RealOverlap>& builtin_overlaps();

/// Looks up a catalog id, also accepting `minmax:p=<r>` and `powprod:p=<r>`
/// for any r > 0. Throws std::invalid_argument on unknown ids.
RealOverlap find_overlap(const std::string& id);

RealOverlap lattice_join(const RealOverlap& g1, const RealOverlap& g2);
RealOverlap lattice_meet(const RealOverlap& g1, const RealOverlap& g2);

/// w1*g1 + w2*g2. Throws std::invalid_argument unless w1, w2 in [0,1] and
/// |w1 + w2 - 1| <= 1e-12.
RealOverlap convex_sum(double w1, double w2, const RealOverlap& g1, const RealOverlap& g2);

/// Classic OWA: sum of w[i] times the i-th largest input. Throws
/// std::invalid_argument on non-normalized weights or size mismatch.
double real_owa(std::span<const double> weights, std::span<const double> xs);

/**
 * Shipped 4-ary aggregation functions used by semi o-representable overlaps.
 *
 * Ids: `p1`..`p4` (projections), `min12`, `max12`, `min`, `max`, `prod123`
 * (x1*x2*x3).
 */
const std::vector<RealAggregator>& builtin_aggregators4();
RealAggregator find_aggregator4(const std::string& id);

}  // namespace ivowa
