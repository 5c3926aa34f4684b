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
#include <cmath>
#include <random>

#include "ivowa/verify.hpp"

namespace ivowa {

namespace {

constexpr std::uint32_t kOrderSeed = 7411u;

std::vector<Interval> pair_witness(double x, double y) {
    return {Interval::degenerate(x), Interval::degenerate(y)};
}

// Diagonal from (1,1) down, then pairs by growing |x - y|, larger sums first.
std::vector<std::pair<double, double>> symmetric_first(const std::vector<double>& pts) {
    std::vector<std::pair<double, double>> pairs;
    for (double x : pts)
        for (double y : pts) pairs.emplace_back(x, y);
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        const double da = std::abs(a.first - a.second);
        const double db = std::abs(b.first - b.second);
        if (da != db) return da < db;
        const double sa = a.first + a.second;
        const double sb = b.first + b.second;
        if (sa != sb) return sa > sb;
        return a.first > b.first;
    });
    return pairs;
}

Finding real_commutative(const RealOverlap& g, const std::vector<double>& pts) {
    std::size_t n = 0;
    for (double x : pts)
        for (double y : pts) {
            ++n;
            if (g(x, y) != g(y, x)) return Finding::fail(pair_witness(x, y), n, "G(x,y) != G(y,x)");
        }
    return Finding::pass(n);
}

Finding real_boundary(const RealOverlap& g, const std::vector<double>& pts, double value) {
    std::size_t n = 0;
    for (auto [x, y] : symmetric_first(pts)) {
        ++n;
        const double v = g(x, y);
        if ((v == value) != (x * y == value)) {
            return Finding::fail(pair_witness(x, y), n,
                                 "G(x,y) = " + format_real(v) + " while xy = " + format_real(x * y));
        }
    }
    return Finding::pass(n);
}

Finding real_monotone(const RealOverlap& g, const std::vector<double>& pts) {
    std::size_t n = 0;
    for (double x : pts)
        for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
            ++n;
            if (g(x, pts[j]) > g(x, pts[j + 1])) {
                return Finding::fail(pair_witness(x, pts[j]), n,
                                     "decreases towards y = " + format_real(pts[j + 1]));
            }
        }
    return Finding::pass(n);
}

Finding iv_commutative(const IVOverlap& o, std::span<const Interval> s) {
    std::size_t n = 0;
    for (const auto& x : s)
        for (const auto& y : s) {
            ++n;
            if (o(x, y) != o(y, x)) return Finding::fail({x, y}, n, "O(X,Y) != O(Y,X)");
        }
    return Finding::pass(n);
}

Finding iv_boundary(const IVOverlap& o, std::span<const Interval> s, const Interval& value) {
    std::size_t n = 0;
    for (const auto& x : s)
        for (const auto& y : s) {
            ++n;
            if ((o(x, y) == value) != (product(x, y) == value)) {
                return Finding::fail({x, y}, n, "O(X,Y) = " + to_string(o(x, y)));
            }
        }
    return Finding::pass(n);
}

Finding iv_monotone(const IVOverlap& o, std::span<const Interval> s) {
    std::size_t n = 0;
    for (const auto& x : s)
        for (const auto& y : s)
            for (const auto& y2 : s) {
                if (!leq_product(y, y2) || y == y2) continue;
                ++n;
                if (!leq_product(o(x, y), o(x, y2))) {
                    return Finding::fail({x, y, y2}, n, "O(X,Y) not below O(X,Y') for Y <= Y'");
                }
            }
    return Finding::pass(n);
}

Finding iv_continuity(const IVOverlap& o) {
    auto slice = [&o](std::span<const double> p) {
        const auto v = o(Interval::degenerate(p[0]), Interval::degenerate(p[1]));
        return std::pair{v.lower(), v.upper()};
    };
    if (auto f = continuity_heuristic(2, slice); !f) return f;
    auto endpoints = [&o](std::span<const double> p) {
        const Interval x(std::min(p[0], p[1]), std::max(p[0], p[1]));
        const Interval y(std::min(p[2], p[3]), std::max(p[2], p[3]));
        const auto v = o(x, y);
        return std::pair{v.lower(), v.upper()};
    };
    return continuity_heuristic(4, endpoints, JumpBounds{0.2, 0.6, 0.04, 0.2, 0.5});
}

Finding aggregator_boundary(const IVAggregator& m) {
    const std::vector<Interval> zeros(m.arity, Interval::zero());
    const std::vector<Interval> ones(m.arity, Interval::one());
    if (m(zeros) != Interval::zero()) return Finding::fail(zeros, 1, "M([0,0],...) = " + to_string(m(zeros)));
    if (m(ones) != Interval::one()) return Finding::fail(ones, 2, "M([1,1],...) = " + to_string(m(ones)));
    return Finding::pass(2);
}

Finding aggregator_monotone(const IVAggregator& m, std::span<const Interval> s) {
    std::size_t n = 0;
    for (const auto& xs : sample_tuples(m.arity, s)) {
        const Interval base = m(xs);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            auto ys = xs;
            for (const auto& y : s) {
                if (!leq_product(xs[i], y) || xs[i] == y) continue;
                ys[i] = y;
                ++n;
                if (!leq_product(base, m(ys))) {
                    auto witness = xs;
                    witness.push_back(y);
                    return Finding::fail(std::move(witness), n,
                                         "raising argument " + std::to_string(i + 1) + " lowers the output");
                }
            }
        }
    }
    return Finding::pass(n);
}

}  // namespace

std::vector<CheckReport> run_axiom_suite(const RealOverlap& g, const VerifyOptions& opts) {
    const auto pts = unit_grid(opts.real_step);
    auto real_pair = [&g](std::span<const double> p) {
        const double v = g(p[0], p[1]);
        return std::pair{v, v};
    };
    return {
        CheckReport::from("GO1", g.name, real_commutative(g, pts), kExact),
        CheckReport::from("GO2", g.name, real_boundary(g, pts, 0.0), kExact),
        CheckReport::from("GO3", g.name, real_boundary(g, pts, 1.0), kExact),
        CheckReport::from("GO4", g.name, real_monotone(g, pts), kExact),
        CheckReport::from("GO5", g.name, continuity_heuristic(2, real_pair), JumpBounds{}.fine_bound),
    };
}

std::vector<CheckReport> run_axiom_suite(const IVOverlap& o, const VerifyOptions& opts) {
    const auto s = opts.grid.intervals();
    return {
        CheckReport::from("O1", o.name(), iv_commutative(o, s), kExact),
        CheckReport::from("O2", o.name(), iv_boundary(o, s, Interval::zero()), kExact),
        CheckReport::from("O3", o.name(), iv_boundary(o, s, Interval::one()), kExact),
        CheckReport::from("O4", o.name(), iv_monotone(o, s), kExact),
        CheckReport::from("O5", o.name(), iv_continuity(o), JumpBounds{}.fine_bound),
        CheckReport::from("inclusion-monotone", o.name(), is_inclusion_monotonic(o, s), kExact),
    };
}

std::vector<CheckReport> run_axiom_suite(const IVAggregator& m, const VerifyOptions& opts) {
    const auto s = opts.grid.intervals();
    return {
        CheckReport::from("M1", m.name, aggregator_boundary(m), kExact),
        CheckReport::from("M2", m.name, aggregator_monotone(m, s), kExact),
    };
}

std::vector<CheckReport> admissible_order_checks(AdmissibleOrder order, const VerifyOptions& opts,
                                                 std::size_t triples) {
    const auto s = opts.grid.intervals();
    const std::string target(to_string(order));
    std::mt19937 rng(kOrderSeed);
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);

    std::size_t n = 0;
    Finding total = Finding::pass(0), antisym = Finding::pass(0), trans = Finding::pass(0);
    for (std::size_t t = 0; t < triples; ++t) {
        const auto& x = s[pick(rng)];
        const auto& y = s[pick(rng)];
        const auto& z = s[pick(rng)];
        ++n;
        const auto xy = compare(order, x, y);
        const auto yx = compare(order, y, x);
        const int outcomes = (xy < 0) + (xy == 0) + (xy > 0);
        if (total && (outcomes != 1 || (xy == 0) != (x == y))) total = Finding::fail({x, y}, n, "not a strict trichotomy");
        if (antisym && (xy <= 0 && yx <= 0 && x != y)) antisym = Finding::fail({x, y}, n, "X <= Y and Y <= X");
        if (trans && xy <= 0 && compare(order, y, z) <= 0 && compare(order, x, z) > 0) {
            trans = Finding::fail({x, y, z}, n, "X <= Y <= Z but X > Z");
        }
    }
    total.samples = antisym.samples = trans.samples = n;

    std::size_t m = 0;
    Finding refines = Finding::pass(0);
    for (const auto& x : s)
        for (const auto& y : s) {
            if (!refines || !leq_product(x, y)) continue;
            ++m;
            if (compare(order, x, y) > 0) refines = Finding::fail({x, y}, m, "X <=Pr Y but X > Y");
        }
    if (refines) refines.samples = m;

    return {
        CheckReport::from("order.total", target, total, kExact),
        CheckReport::from("order.antisymmetric", target, antisym, kExact),
        CheckReport::from("order.transitive", target, trans, kExact),
        CheckReport::from("order.refines-product", target, refines, kExact),
    };
}

}  // namespace ivowa
