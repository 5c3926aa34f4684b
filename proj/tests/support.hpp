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

#include <cmath>
#include <span>
#include <vector>

#include "ivowa/interval.hpp"
#include "ivowa/sampling.hpp"

namespace ivowa::testing {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const Interval& x, double lo, double hi, double tol) {
    return near(x.lower(), lo, tol) && near(x.upper(), hi, tol);
}

inline std::vector<Interval> sample() { return SampleGrid{}.intervals(); }

// Interval from grid indices on {0, 1/m, ..., 1}.
inline Interval grid_iv(int i, int j, int m = 10) {
    return Interval(static_cast<double>(i) / m, static_cast<double>(j) / m);
}

}  // namespace ivowa::testing
