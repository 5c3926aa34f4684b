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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivowa/interval.hpp"

namespace ivowa {

// Tolerances shared by every check.
inline constexpr double kExact = 0.0;
inline constexpr double kPolynomialTolerance = 1e-12;
inline constexpr double kRootTolerance = 1e-9;

/**
 * Outcome of a sampled law check.
 *
 * `witness` holds the first violating tuple in the check's documented
 * traversal order and is present exactly when the law fails. Real-valued
 * arguments are reported as degenerate intervals.
 */
struct Finding {
    bool holds = true;
    std::optional<std::vector<Interval>> witness;
    std::size_t samples = 0;
    std::string detail;

    static Finding pass(std::size_t samples) { return Finding{true, std::nullopt, samples, {}}; }
    static Finding fail(std::vector<Interval> witness, std::size_t samples, std::string detail = {}) {
        return Finding{false, std::move(witness), samples, std::move(detail)};
    }
    explicit operator bool() const { return holds; }
};

/// Points {0, step, 2*step, ..., 1}; step must divide 1 (1/step is rounded).
/// Points are computed as i/m so every point is the correctly rounded decimal.
std::vector<double> unit_grid(double step);

/// Endpoint grid used for interval-valued checks.
struct SampleGrid {
    double endpoint_step = 0.1;

    std::vector<double> points() const { return unit_grid(endpoint_step); }
    /// All [a,b] with a <= b on the endpoint grid, lexicographic in (a, b).
    std::vector<Interval> intervals() const;
};

/// Default real grid for binary real functions (21 x 21 points).
inline constexpr double kRealGridStep = 0.05;

/**
 * Grid-jump continuity heuristic.
 *
 * Measures the largest change of f between adjacent points of a coarse and
 * a fine grid over [0,1]^arity. A function passes when both jumps are within
 * their bounds, or when refinement shrinks the largest jump at least by half
 * (this admits continuous but non-Lipschitz functions such as sqrt(xy)). A
 * jump that persists under refinement is reported as a discontinuity.
 */
struct JumpBounds {
    double coarse_step = 0.05;
    double coarse_bound = 0.2;
    double fine_step = 0.005;
    double fine_bound = 0.02;
    double shrink_ratio = 0.5;
};

/// f maps a point of [0,1]^n to a pair of outputs (both equal for real functions).
using PairValued = std::function<std::pair<double, double>(std::span<const double>)>;

struct JumpScan {
    double jump = 0.0;
    std::vector<double> from;
    std::vector<double> to;
    std::size_t samples = 0;
};

JumpScan max_grid_jump(std::size_t arity, double step, const PairValued& f);
Finding continuity_heuristic(std::size_t arity, const PairValued& f, const JumpBounds& bounds = {});

}  // namespace ivowa
