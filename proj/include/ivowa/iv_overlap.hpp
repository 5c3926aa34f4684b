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

#include <array>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ivowa/error.hpp"
#include "ivowa/interval.hpp"
#include "ivowa/real_overlap.hpp"
#include "ivowa/sampling.hpp"

namespace ivowa {

/// Unary interval function used to build migrative overlaps O(X,Y) = g(XY).
struct UnaryGenerator {
    std::string name;
    std::function<Interval(const Interval&)> eval;

    Interval operator()(const Interval& x) const { return eval(x); }
};

/// g(X) = X^K. Named `sqrt` for K=[0.5,0.5] and `id` for K=[1,1].
UnaryGenerator power_generator(const ExponentInterval& k);
/// Endpoint-wise 1-(1-t)^2.
UnaryGenerator quad_generator();
/// `id`, `sqrt`, `quad`, or `pow(K=[a,b])`.
UnaryGenerator find_generator(const std::string& id);

struct RepresentableProvenance {
    RealOverlap lower;
    RealOverlap upper;
};
struct SemiProvenance {
    RealAggregator m1;
    RealAggregator m2;
    std::array<RealOverlap, 8> g;
};
struct MigrativeProvenance {
    UnaryGenerator g;
};
struct OpaqueProvenance {};

using Provenance = std::variant<RepresentableProvenance, SemiProvenance, MigrativeProvenance, OpaqueProvenance>;

using BinaryIntervalFunction = std::function<Interval(const Interval&, const Interval&)>;

/**
 * Binary function on L([0,1]) built by one of the overlap constructors.
 *
 * The name is the structured id the registry parses (for example
 * `rep(product,min)`), so `resolve_iv_overlap(o.name())` rebuilds `o`.
 */
class IVOverlap {
public:
    IVOverlap(std::string name, BinaryIntervalFunction eval, Provenance provenance, bool associative = false)
        : name_(std::move(name)), eval_(std::move(eval)), provenance_(std::move(provenance)),
          associative_(associative) {}

    Interval operator()(const Interval& x, const Interval& y) const { return eval_(x, y); }

    const std::string& name() const { return name_; }
    const Provenance& provenance() const { return provenance_; }
    bool is_representable() const { return std::holds_alternative<RepresentableProvenance>(provenance_); }
    bool is_migrative() const { return std::holds_alternative<MigrativeProvenance>(provenance_); }
    /// Declared associativity; checks confirm it by sampling.
    bool claims_associative() const { return associative_; }

private:
    std::string name_;
    BinaryIntervalFunction eval_;
    Provenance provenance_;
    bool associative_;
};

/// [g1(X.lower, Y.lower), g2(X.upper, Y.upper)]. Throws PreconditionError
/// when g1 > g2 somewhere on the real grid.
IVOverlap representable(const RealOverlap& g1, const RealOverlap& g2, double grid_step = kRealGridStep);

/// Left and right projections: the endpoints of O on degenerate arguments.
struct Projections {
    std::function<double(double, double)> lower;
    std::function<double(double, double)> upper;
};
Projections projections(const IVOverlap& o);

/// Whether O agrees with [lower(X.lower, Y.lower), upper(X.upper, Y.upper)].
Finding reconstructs_from_projections(const IVOverlap& o, std::span<const Interval> samples,
                                      double tolerance = kPolynomialTolerance);

/// O(X,Y) = [0,z] with z > 0 must imply X.lower = 0 or Y.lower = 0.
/// Traversal is lexicographic over (X, Y); witness is (X, Y).
Finding is_strongly_positive(const IVOverlap& o, std::span<const Interval> samples);

/**
 * Checks O(X,Y) ⊆ O(X',Y') for nested X ⊆ X', Y ⊆ Y'.
 *
 * Outer pairs are visited widest first and inner pairs from the largest
 * endpoints down, so the reported witness (X, Y, X', Y') is the most
 * extreme nesting that fails.
 */
Finding is_inclusion_monotonic(const IVOverlap& o, std::span<const Interval> samples);

/**
 * Eight real overlaps combined by two 4-ary aggregators:
 *
 *   lower = M1(G1(xl,yu), G2(xu,yl), G3(xl,yl), G4(xu,yu))
 *   upper = M2(G5(xl,yu), G6(xu,yl), G7(xl,yl), G8(xu,yu))
 *
 * Sufficient conditions for O1-O5 are checked on grids; a violation throws
 * PreconditionError naming the condition. M1 <= M2 is checked on the
 * argument tuples produced by sampled interval pairs.
 */
IVOverlap semi_representable(const RealAggregator& m1, const RealAggregator& m2,
                             const std::array<RealOverlap, 8>& g);

/// Generator invariants: monotone for the product order, fixes [0,0] and
/// [1,1], and maps no other sample onto either of them.
Finding check_generator(const UnaryGenerator& g, std::span<const Interval> samples);

/// O(X,Y) = g(XY). Throws PreconditionError when g fails check_generator on
/// the standard sample.
IVOverlap migrative_from_generator(const UnaryGenerator& g);

/// (XY)^(K/[2,2]).
IVOverlap migrative_canonical(const ExponentInterval& k);

enum class PowerDirection { Root, Power };

/// O(X^[1/n], Y^[1/n]) for Root and O(X^n, Y^n) for Power; n >= 2.
IVOverlap power_transform(const IVOverlap& o, int n, PowerDirection direction);

/// contract_half(X) ∧ contract_half(Y): an overlap that is not inclusion monotonic.
IVOverlap midpoint_example();
/// Closed form of the same function with a = 3/4, b = 1/4.
Interval midpoint_closed_form(const Interval& x, const Interval& y);

IVOverlap iv_join(const IVOverlap& a, const IVOverlap& b);
IVOverlap iv_meet(const IVOverlap& a, const IVOverlap& b);

/// g_O(X) = O([1,1], X).
UnaryGenerator induced_generator(const IVOverlap& o);

/**
 * F(αX, Y) = F(X, αY) and F(X, Y) = F([1,1], XY) over (α, X, Y) in
 * lexicographic order. Witness is (α, X, Y).
 */
Finding check_migrative(const IVOverlap& f, std::span<const Interval> samples, double tolerance = kRootTolerance);

/// F(αX, αY) = α^K F(X, Y). Witness is (α, X, Y).
Finding check_homogeneous(const IVOverlap& f, const ExponentInterval& k, std::span<const Interval> samples,
                          double tolerance = kRootTolerance);

/**
 * F(X,Y) = F(Xᶜ,Yᶜ)ᶜ. Pairs of the corners [0,0], [1,1] are tried before the
 * rest of the sample, so any overlap reports ([0,0],[1,1]).
 */
Finding check_self_duality(const IVOverlap& f, std::span<const Interval> samples);

/// O([1,1], X) = X exactly.
Finding check_neutral_one(const IVOverlap& o, std::span<const Interval> samples);

Finding check_associative(const IVOverlap& o, std::span<const Interval> samples,
                          double tolerance = kPolynomialTolerance);

}  // namespace ivowa
