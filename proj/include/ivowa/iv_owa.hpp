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
#include <span>
#include <string>
#include <vector>

#include "ivowa/interval.hpp"
#include "ivowa/iv_overlap.hpp"
#include "ivowa/sampling.hpp"

namespace ivowa {

enum class AggregatorKind { Max, TruncatedSum, GeometricMean, Dirac, Custom };

/**
 * n-ary interval-valued aggregation function.
 *
 * `linear_domain`, when set, marks the tuples on which the aggregator is
 * homogeneous of order [1,1]. The truncated sum saturates at 1, so it is only
 * homogeneous where the upper endpoints sum to at most 1; distributivity and
 * homogeneity checks are restricted to that region.
 */
struct IVAggregator {
    std::string name;
    AggregatorKind kind = AggregatorKind::Custom;
    std::size_t arity = 0;
    std::function<Interval(std::span<const Interval>)> eval;
    std::function<bool(std::span<const Interval>)> linear_domain;

    /// Throws std::invalid_argument on arity mismatch.
    Interval operator()(std::span<const Interval> xs) const;
    bool in_linear_domain(std::span<const Interval> xs) const { return !linear_domain || linear_domain(xs); }
};

/// `max`, `tsum`, `geomean` and `dirac` of arity n. Dirac takes the maximum
/// under `order`.
std::vector<IVAggregator> builtin_aggregators(std::size_t n, AdmissibleOrder order = AdmissibleOrder::Lex1);
IVAggregator find_iv_aggregator(const std::string& id, std::size_t n, AdmissibleOrder order = AdmissibleOrder::Lex1);

struct WeightVector {
    std::vector<Interval> weights;

    std::size_t size() const { return weights.size(); }
    bool operator==(const WeightVector&) const = default;
};

/// M(W) == [1,1] exactly. Throws std::invalid_argument on arity mismatch.
bool is_weighted_vector(const IVAggregator& m, const WeightVector& w);

/**
 * Rescales W so that it becomes an M-weighted vector.
 *
 * TruncatedSum divides every endpoint by the sum of the lower endpoints and
 * clamps upper endpoints to 1. Max divides by the largest upper endpoint and
 * promotes the greatest weight (upper endpoint first, then lower) to [1,1].
 * Vectors that are already normalized are returned unchanged. Other kinds,
 * all-zero vectors and (for TruncatedSum) vectors whose lower endpoints sum
 * to 0 are rejected with std::invalid_argument.
 */
WeightVector normalize_weights(const IVAggregator& m, const WeightVector& w);

/**
 * Deterministic n-tuples over `samples`: the full cross product when it has
 * at most 5000 elements, otherwise the boundary tuples followed by 4000
 * tuples drawn with a fixed seed.
 */
std::vector<std::vector<Interval>> sample_tuples(std::size_t n, std::span<const Interval> samples);

/// M(O(X1,Y),...,O(Xn,Y)) = O(M(X1,...,Xn),Y) over tuples in M's linear
/// domain; witness is (X1,...,Xn,Y).
Finding check_distributivity(const IVAggregator& m, const IVOverlap& o, std::span<const Interval> samples,
                             double tolerance = kRootTolerance);

/// M(αX1,...,αXn) = α M(X1,...,Xn) over tuples in M's linear domain;
/// witness is (α,X1,...,Xn).
Finding check_homogeneous_M(const IVAggregator& m, std::span<const Interval> samples,
                            double tolerance = kRootTolerance);

/// Indices of xs sorted descending under `order`; ties keep input order.
std::vector<std::size_t> sort_descending(AdmissibleOrder order, std::span<const Interval> xs);

/**
 * An (M, O) pair that passed the generalized OWA preconditions: O has [1,1]
 * as neutral element and M distributes over O on the standard sample.
 */
class GowaBasis {
public:
    /// Throws PreconditionError naming the failed condition.
    static GowaBasis validate(IVAggregator m, IVOverlap o, const SampleGrid& grid = {},
                              double tolerance = kRootTolerance);

    const IVAggregator& aggregator() const { return m_; }
    const IVOverlap& overlap() const { return o_; }

private:
    GowaBasis(IVAggregator m, IVOverlap o) : m_(std::move(m)), o_(std::move(o)) {}
    IVAggregator m_;
    IVOverlap o_;
};

/**
 * Interval-valued generalized OWA operator with interval weights:
 *
 *   M(O(W1, X(1)), ..., O(Wn, X(n)))
 *
 * where X(1) >= ... >= X(n) under the admissible order.
 */
class GowaOperator {
public:
    /// Throws PreconditionError when W is not an M-weighted vector, has the
    /// wrong length, or leaves M's linear domain.
    GowaOperator(GowaBasis basis, WeightVector w, AdmissibleOrder order);

    /// Throws std::invalid_argument on arity mismatch.
    Interval operator()(std::span<const Interval> xs) const;

    std::size_t arity() const { return w_.size(); }
    const GowaBasis& basis() const { return basis_; }
    const WeightVector& weights() const { return w_; }
    AdmissibleOrder order() const { return order_; }

private:
    GowaBasis basis_;
    WeightVector w_;
    AdmissibleOrder order_;
};

/// One-shot evaluation; validates every precondition on each call.
Interval iv_gowa(const IVAggregator& m, const IVOverlap& o, const WeightVector& w, AdmissibleOrder order,
                 std::span<const Interval> xs);

/// Weight vector with [1,1] at position i0 (1-based) and [0,0] elsewhere.
WeightVector selector_weights(std::size_t n, std::size_t i0);

/// Generalized OWA with selector weights: returns the i0-th largest input.
/// Throws PreconditionError when M([0,0],...,X,...,[0,0]) = X fails on samples.
Interval projection_owa(const IVAggregator& m, const IVOverlap& o, std::size_t i0, AdmissibleOrder order,
                        std::span<const Interval> xs);

}  // namespace ivowa
