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

#include "ivowa/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace ivowa {

std::vector<double> unit_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("grid step must lie in (0,1]");
    const auto m = static_cast<long>(std::lround(1.0 / step));
    if (m < 1 || std::abs(1.0 / static_cast<double>(m) - step) > 1e-9) {
        throw std::invalid_argument("grid step must divide 1");
    }
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= m; ++i) pts.push_back(static_cast<double>(i) / static_cast<double>(m));
    return pts;
}

std::vector<Interval> SampleGrid::intervals() const {
    const auto pts = points();
    std::vector<Interval> out;
    out.reserve(pts.size() * (pts.size() + 1) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j) out.emplace_back(pts[i], pts[j]);
    return out;
}

JumpScan max_grid_jump(std::size_t arity, double step, const PairValued& f) {
    const auto pts = unit_grid(step);
    const std::size_t m = pts.size();
    JumpScan scan;
    std::vector<std::size_t> idx(arity, 0);
    std::vector<double> here(arity), next(arity);
    for (;;) {
        for (std::size_t d = 0; d < arity; ++d) here[d] = pts[idx[d]];
        const auto v = f(here);
        ++scan.samples;
        for (std::size_t d = 0; d < arity; ++d) {
            if (idx[d] + 1 >= m) continue;
            next = here;
            next[d] = pts[idx[d] + 1];
            const auto w = f(next);
            const double jump = std::max(std::abs(v.first - w.first), std::abs(v.second - w.second));
            if (jump > scan.jump) {
                scan.jump = jump;
                scan.from = here;
                scan.to = next;
            }
        }
        std::size_t d = 0;
        while (d < arity && ++idx[d] == m) idx[d++] = 0;
        if (d == arity) break;
    }
    return scan;
}

Finding continuity_heuristic(std::size_t arity, const PairValued& f, const JumpBounds& bounds) {
    const auto coarse = max_grid_jump(arity, bounds.coarse_step, f);
    const auto fine = max_grid_jump(arity, bounds.fine_step, f);
    const std::size_t samples = coarse.samples + fine.samples;
    const bool within = coarse.jump < bounds.coarse_bound && fine.jump < bounds.fine_bound;
    const bool shrinking = fine.jump <= bounds.shrink_ratio * coarse.jump;
    if (within || shrinking) return Finding::pass(samples);
    std::vector<Interval> witness;
    for (double x : fine.from) witness.push_back(Interval::degenerate(x));
    for (double x : fine.to) witness.push_back(Interval::degenerate(x));
    return Finding::fail(std::move(witness), samples,
                         "jump " + format_real(fine.jump) + " persists under refinement (coarse " +
                             format_real(coarse.jump) + ")");
}

}  // namespace ivowa
