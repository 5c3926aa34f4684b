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

#include "ivowa/iv_owa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ivowa/error.hpp"

namespace ivowa {

namespace {

constexpr std::size_t kFullProductLimit = 5000;
constexpr std::size_t kRandomTuples = 4000;
constexpr std::uint32_t kTupleSeed = 20260415u;
constexpr double kDomainSlack = 1e-12;

// Neumaier's compensated sum. Plain left-to-right addition of n copies of
// 1/n misses 1 for several small n, which would break weighted-vector tests.
template <typename Get>
double compensated_sum(std::span<const Interval> xs, Get get) {
    double sum = 0.0;
    double c = 0.0;
    for (const auto& x : xs) {
        const double v = get(x);
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    return sum + c;
}

double sum_lower(std::span<const Interval> xs) {
    return compensated_sum(xs, [](const Interval& x) { return x.lower(); });
}

double sum_upper(std::span<const Interval> xs) {
    return compensated_sum(xs, [](const Interval& x) { return x.upper(); });
}

Interval max_of(std::span<const Interval> xs) {
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& x : xs) {
        lo = std::max(lo, x.lower());
        hi = std::max(hi, x.upper());
    }
    return Interval(lo, hi);
}

Interval truncated_sum(std::span<const Interval> xs) {
    const double lo = std::min(1.0, sum_lower(xs));
    // Guards against the two compensated sums rounding across each other.
    const double hi = std::max(lo, std::min(1.0, sum_upper(xs)));
    return Interval(lo, hi);
}

Interval geometric_mean(std::span<const Interval> xs) {
    Interval acc = Interval::one();
    for (const auto& x : xs) acc = product(acc, x);
    const double k = 1.0 / static_cast<double>(xs.size());
    return pow(acc, ExponentInterval(k, k));
}

Interval dirac(AdmissibleOrder order, std::span<const Interval> xs) {
    const auto top = std::max_element(xs.begin(), xs.end(), [order](const Interval& a, const Interval& b) {
        return compare(order, a, b) < 0;
    });
    return *top == Interval::one() ? Interval::one() : Interval::zero();
}

void require_arity(std::size_t expected, std::size_t got, const std::string& who) {
    if (expected != got) {
        throw std::invalid_argument(who + ": expected " + std::to_string(expected) + " arguments, got " +
                                    std::to_string(got));
    }
}

std::vector<Interval> scaled(const Interval& alpha, std::span<const Interval> xs) {
    std::vector<Interval> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(product(alpha, x));
    return out;
}

}  // namespace

Interval IVAggregator::operator()(std::span<const Interval> xs) const {
    require_arity(arity, xs.size(), name);
    return eval(xs);
}

std::vector<IVAggregator> builtin_aggregators(std::size_t n, AdmissibleOrder order) {
    if (n == 0) throw std::invalid_argument("builtin_aggregators: arity must be at least 1");
    std::vector<IVAggregator> out;
    out.push_back({"max", AggregatorKind::Max, n, max_of, {}});
    out.push_back({"tsum", AggregatorKind::TruncatedSum, n, truncated_sum,
                   [](std::span<const Interval> xs) { return sum_upper(xs) <= 1.0; }});
    out.push_back({"geomean", AggregatorKind::GeometricMean, n, geometric_mean, {}});
    out.push_back({"dirac", AggregatorKind::Dirac, n, [order](std::span<const Interval> xs) { return dirac(order, xs); },
                   {}});
    return out;
}

IVAggregator find_iv_aggregator(const std::string& id, std::size_t n, AdmissibleOrder order) {
    for (auto& m : builtin_aggregators(n, order)) {
        if (m.name == id) return m;
    }
    throw std::invalid_argument("unknown interval aggregator '" + id + "'");
}

bool is_weighted_vector(const IVAggregator& m, const WeightVector& w) {
    require_arity(m.arity, w.size(), "is_weighted_vector");
    return m(w.weights) == Interval::one();
}

WeightVector normalize_weights(const IVAggregator& m, const WeightVector& w) {
    require_arity(m.arity, w.size(), "normalize_weights");
    if (std::all_of(w.weights.begin(), w.weights.end(), [](const Interval& x) { return x == Interval::zero(); })) {
        throw std::invalid_argument("normalize_weights: all weights are [0,0]");
    }
    if (m.kind != AggregatorKind::Max && m.kind != AggregatorKind::TruncatedSum) {
        throw std::invalid_argument("normalize_weights: no normalization defined for aggregator '" + m.name + "'");
    }
    if (is_weighted_vector(m, w)) return w;

    std::vector<Interval> out;
    out.reserve(w.size());
    if (m.kind == AggregatorKind::TruncatedSum) {
        const double s = sum_lower(w.weights);
        if (s == 0.0) {
            throw std::invalid_argument("normalize_weights: lower endpoints sum to 0, cannot reach [1,1]");
        }
        for (const auto& x : w.weights) {
            const double lo = std::min(1.0, x.lower() / s);
            out.emplace_back(lo, std::max(lo, std::min(1.0, x.upper() / s)));
        }
        // Division can leave the compensated sum an ulp short of 1; nudge
        // the largest lower endpoint until it is not.
        const auto big = static_cast<std::size_t>(
            std::max_element(out.begin(), out.end(),
                             [](const Interval& a, const Interval& b) { return a.lower() < b.lower(); }) -
            out.begin());
        while (sum_lower(out) < 1.0) {
            const double lo = std::nextafter(out[big].lower(), 2.0);
            out[big] = Interval(lo, std::max(lo, out[big].upper()));
        }
    } else {
        double top = 0.0;
        for (const auto& x : w.weights) top = std::max(top, x.upper());
        std::size_t best = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            out.emplace_back(w.weights[i].lower() / top, std::min(1.0, w.weights[i].upper() / top));
            if (compare(AdmissibleOrder::Lex2, w.weights[i], w.weights[best]) > 0) best = i;
        }
        out[best] = Interval::one();
    }
    return WeightVector{std::move(out)};
}

std::vector<std::vector<Interval>> sample_tuples(std::size_t n, std::span<const Interval> samples) {
    std::vector<std::vector<Interval>> out;
    if (n == 0 || samples.empty()) return out;

    double total = 1.0;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(samples.size());
    if (total <= static_cast<double>(kFullProductLimit)) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<Interval> t;
            t.reserve(n);
            for (auto i : idx) t.push_back(samples[i]);
            out.push_back(std::move(t));
            std::size_t k = n;
            while (k > 0 && ++idx[k - 1] == samples.size()) idx[--k] = 0;
            if (k == 0) break;
        }
        return out;
    }

    out.emplace_back(n, Interval::zero());
    out.emplace_back(n, Interval::one());
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Interval> e(n, Interval::zero());
        e[i] = Interval::one();
        out.push_back(std::move(e));
    }
    std::mt19937 rng(kTupleSeed);
    std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
    for (std::size_t r = 0; r < kRandomTuples; ++r) {
        std::vector<Interval> t;
        t.reserve(n);
        for (std::size_t i = 0; i < n; ++i) t.push_back(samples[pick(rng)]);
        out.push_back(std::move(t));
    }
    return out;
}

Finding check_distributivity(const IVAggregator& m, const IVOverlap& o, std::span<const Interval> samples,
                             double tolerance) {
    std::size_t count = 0;
    std::vector<Interval> applied(m.arity, Interval::zero());
    for (const auto& xs : sample_tuples(m.arity, samples)) {
        if (!m.in_linear_domain(xs)) continue;
        const Interval mx = m(xs);
        for (const auto& y : samples) {
            for (std::size_t i = 0; i < xs.size(); ++i) applied[i] = o(xs[i], y);
            const Interval lhs = m(applied);
            const Interval rhs = o(mx, y);
            ++count;
            if (!approx_equal(lhs, rhs, tolerance)) {
                auto witness = xs;
                witness.push_back(y);
                return Finding::fail(std::move(witness), count,
                                     "M(O(X,Y)) = " + to_string(lhs) + " but O(M(X),Y) = " + to_string(rhs));
            }
        }
    }
    return Finding::pass(count);
}

Finding check_homogeneous_M(const IVAggregator& m, std::span<const Interval> samples, double tolerance) {
    std::size_t count = 0;
    for (const auto& xs : sample_tuples(m.arity, samples)) {
        if (!m.in_linear_domain(xs)) continue;
        const Interval mx = m(xs);
        for (const auto& alpha : samples) {
            const Interval lhs = m(scaled(alpha, xs));
            const Interval rhs = product(alpha, mx);
            ++count;
            if (!approx_equal(lhs, rhs, tolerance)) {
                std::vector<Interval> witness{alpha};
                witness.insert(witness.end(), xs.begin(), xs.end());
                return Finding::fail(std::move(witness), count,
                                     "M(aX) = " + to_string(lhs) + " but a*M(X) = " + to_string(rhs));
            }
        }
    }
    return Finding::pass(count);
}

std::vector<std::size_t> sort_descending(AdmissibleOrder order, std::span<const Interval> xs) {
    std::vector<std::size_t> idx(xs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return compare(order, xs[a], xs[b]) > 0; });
    return idx;
}

GowaBasis GowaBasis::validate(IVAggregator m, IVOverlap o, const SampleGrid& grid, double tolerance) {
    const auto samples = grid.intervals();

    auto neutral_samples = samples;
    for (double t : unit_grid(0.01)) neutral_samples.push_back(Interval::degenerate(t));
    if (auto f = check_neutral_one(o, neutral_samples); !f) {
        throw PreconditionError("neutral element", "O([1,1],X) = X fails for " + o.name(), f.witness);
    }
    if (auto f = check_distributivity(m, o, samples, tolerance); !f) {
        throw PreconditionError("distributivity", m.name + " does not distribute over " + o.name() + ": " + f.detail,
                                f.witness);
    }
    return GowaBasis(std::move(m), std::move(o));
}

GowaOperator::GowaOperator(GowaBasis basis, WeightVector w, AdmissibleOrder order)
    : basis_(std::move(basis)), w_(std::move(w)), order_(order) {
    const auto& m = basis_.aggregator();
    if (w_.size() != m.arity) {
        throw PreconditionError("arity", "weight vector has " + std::to_string(w_.size()) + " entries, aggregator " +
                                             m.name + " has arity " + std::to_string(m.arity));
    }
    if (!is_weighted_vector(m, w_)) {
        throw PreconditionError("weighted vector", m.name + "(W) = " + to_string(m(w_.weights)) + ", not [1,1]",
                                w_.weights);
    }
    // Distributivity was only verified inside M's linear domain; weights
    // outside it void the guarantee (idempotency fails for such W).
    if (m.linear_domain && !m.linear_domain(w_.weights)) {
        std::vector<Interval> nudged;
        nudged.reserve(w_.size());
        for (const auto& x : w_.weights) {
            nudged.emplace_back(std::max(0.0, x.lower() - kDomainSlack), std::max(0.0, x.upper() - kDomainSlack));
        }
        if (!m.linear_domain(nudged)) {
            throw PreconditionError("distributivity", "weights leave the region where " + m.name +
                                                          " distributes over " + basis_.overlap().name(),
                                    w_.weights);
        }
    }
}

Interval GowaOperator::operator()(std::span<const Interval> xs) const {
    require_arity(w_.size(), xs.size(), "iv_gowa");
    const auto perm = sort_descending(order_, xs);
    std::vector<Interval> applied;
    applied.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) applied.push_back(basis_.overlap()(w_.weights[i], xs[perm[i]]));
    return basis_.aggregator()(applied);
}

Interval iv_gowa(const IVAggregator& m, const IVOverlap& o, const WeightVector& w, AdmissibleOrder order,
                 std::span<const Interval> xs) {
    require_arity(m.arity, xs.size(), "iv_gowa");
    return GowaOperator(GowaBasis::validate(m, o), w, order)(xs);
}

WeightVector selector_weights(std::size_t n, std::size_t i0) {
    if (i0 < 1 || i0 > n) throw std::invalid_argument("selector_weights: index out of range");
    std::vector<Interval> w(n, Interval::zero());
    w[i0 - 1] = Interval::one();
    return WeightVector{std::move(w)};
}

Interval projection_owa(const IVAggregator& m, const IVOverlap& o, std::size_t i0, AdmissibleOrder order,
                        std::span<const Interval> xs) {
    require_arity(m.arity, xs.size(), "projection_owa");
    const auto samples = SampleGrid{}.intervals();
    for (std::size_t pos = 0; pos < m.arity; ++pos) {
        std::vector<Interval> probe(m.arity, Interval::zero());
        for (const auto& x : samples) {
            probe[pos] = x;
            if (m(probe) != x) {
                throw PreconditionError("absorption", m.name + "([0,0],...,X,...,[0,0]) differs from X", probe);
            }
        }
    }
    return iv_gowa(m, o, selector_weights(m.arity, i0), order, xs);
}

}  // namespace ivowa
