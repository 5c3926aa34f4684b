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

#include "ivowa/iv_overlap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ivowa {

namespace {

std::string exponent_text(const ExponentInterval& k) {
    return "[" + format_real(k.k1()) + "," + format_real(k.k2()) + "]";
}

std::vector<Interval> standard_sample() { return SampleGrid{}.intervals(); }

// Visits every point of the 4-dimensional grid; stops early when visit returns false.
template <typename Visit>
void for_each_grid4(const std::vector<double>& pts, Visit&& visit) {
    std::array<double, 4> x{};
    for (double a : pts)
        for (double b : pts)
            for (double c : pts)
                for (double d : pts) {
                    x = {a, b, c, d};
                    if (!visit(std::span<const double>(x))) return;
                }
}

std::vector<Interval> degenerate_tuple(std::span<const double> xs) {
    std::vector<Interval> out;
    for (double x : xs) out.push_back(Interval::degenerate(x));
    return out;
}

// Grid resolution for the 4-ary aggregator conditions of semi_representable.
constexpr double kGrid4Step = 0.1;
const JumpBounds kGrid4Jumps{0.1, 0.4, 0.025, 0.1, 0.5};

void require_aggregation_function(const RealAggregator& m, const std::string& label,
                                  const std::vector<double>& pts) {
    const std::array<double, 4> zeros{0, 0, 0, 0}, ones{1, 1, 1, 1};
    if (m(zeros) != 0.0 || m(ones) != 1.0) {
        throw PreconditionError(label + " aggregation function",
                                m.name + " violates M(0,...,0)=0 or M(1,...,1)=1");
    }
    std::optional<std::vector<Interval>> witness;
    for_each_grid4(pts, [&](std::span<const double> x) {
        const double v = m(x);
        for (std::size_t d = 0; d < 4; ++d) {
            auto it = std::upper_bound(pts.begin(), pts.end(), x[d]);
            if (it == pts.end()) continue;
            std::array<double, 4> y{x[0], x[1], x[2], x[3]};
            y[d] = *it;
            if (m(y) < v) {
                witness = degenerate_tuple(x);
                return false;
            }
        }
        return true;
    });
    if (witness) throw PreconditionError(label + " aggregation function", m.name + " is not monotone", witness);
}

}  // namespace

UnaryGenerator power_generator(const ExponentInterval& k) {
    std::string name = "pow(K=" + exponent_text(k) + ")";
    if (k == ExponentInterval(0.5)) name = "sqrt";
    if (k == ExponentInterval(1.0)) name = "id";
    return {name, [k](const Interval& x) { return pow(x, k); }};
}

UnaryGenerator quad_generator() {
    return {"quad", [](const Interval& x) {
                auto q = [](double t) {
                    const double s = 1.0 - t;
                    return 1.0 - s * s;
                };
                return Interval(q(x.lower()), q(x.upper()));
            }};
}

UnaryGenerator find_generator(const std::string& id) {
    if (id == "id") return power_generator(ExponentInterval(1.0));
    if (id == "sqrt") return power_generator(ExponentInterval(0.5));
    if (id == "quad") return quad_generator();
    const std::string prefix = "pow(K=";
    if (id.rfind(prefix, 0) == 0 && id.size() > prefix.size() + 1 && id.back() == ')') {
        const auto k = parse_exponent(id.substr(prefix.size(), id.size() - prefix.size() - 1));
        return power_generator(k);
    }
    throw std::invalid_argument("unknown generator '" + id + "'");
}

IVOverlap representable(const RealOverlap& g1, const RealOverlap& g2, double grid_step) {
    const auto pts = unit_grid(grid_step);
    for (double x : pts)
        for (double y : pts)
            if (g1(x, y) > g2(x, y)) {
                throw PreconditionError("G1 <= G2", g1.name + " exceeds " + g2.name,
                                        std::vector{Interval::degenerate(x), Interval::degenerate(y)});
            }
    const bool associative = g1.claims(Claim::Associative) && g2.claims(Claim::Associative);
    return IVOverlap("rep(" + g1.name + "," + g2.name + ")",
                     [a = g1.eval, b = g2.eval](const Interval& x, const Interval& y) {
                         return Interval(a(x.lower(), y.lower()), b(x.upper(), y.upper()));
                     },
                     RepresentableProvenance{g1, g2}, associative);
}

Projections projections(const IVOverlap& o) {
    return {[o](double x, double y) { return o(Interval::degenerate(x), Interval::degenerate(y)).lower(); },
            [o](double x, double y) { return o(Interval::degenerate(x), Interval::degenerate(y)).upper(); }};
}

Finding reconstructs_from_projections(const IVOverlap& o, std::span<const Interval> samples, double tolerance) {
    const auto p = projections(o);
    std::size_t n = 0;
    for (const auto& x : samples)
        for (const auto& y : samples) {
            ++n;
            const double lo = p.lower(x.lower(), y.lower());
            const double hi = p.upper(x.upper(), y.upper());
            const auto v = o(x, y);
            if (std::abs(v.lower() - lo) > tolerance || std::abs(v.upper() - hi) > tolerance) {
                return Finding::fail({x, y}, n, o.name() + " differs from its projection rebuild");
            }
        }
    return Finding::pass(n);
}

Finding is_strongly_positive(const IVOverlap& o, std::span<const Interval> samples) {
    std::size_t n = 0;
    for (const auto& x : samples)
        for (const auto& y : samples) {
            ++n;
            const auto v = o(x, y);
            if (v.lower() == 0.0 && v.upper() > 0.0 && x.lower() > 0.0 && y.lower() > 0.0) {
                return Finding::fail({x, y}, n, "O(X,Y) = " + to_string(v) + " with positive lower endpoints");
            }
        }
    return Finding::pass(n);
}

Finding is_inclusion_monotonic(const IVOverlap& o, std::span<const Interval> samples) {
    std::vector<Interval> outer(samples.begin(), samples.end());
    std::stable_sort(outer.begin(), outer.end(),
                     [](const Interval& a, const Interval& b) { return a.width() > b.width(); });
    std::vector<Interval> inner(samples.rbegin(), samples.rend());

    std::size_t n = 0;
    for (const auto& xo : outer) {
        for (const auto& yo : outer) {
            const auto big = o(xo, yo);
            for (const auto& xi : inner) {
                if (!subseteq(xi, xo)) continue;
                for (const auto& yi : inner) {
                    if (!subseteq(yi, yo)) continue;
                    ++n;
                    const auto small = o(xi, yi);
                    if (!subseteq(small, big)) {
                        return Finding::fail({xi, yi, xo, yo}, n,
                                             to_string(small) + " is not contained in " + to_string(big));
                    }
                }
            }
        }
    }
    return Finding::pass(n);
}

IVOverlap semi_representable(const RealAggregator& m1, const RealAggregator& m2, const std::array<RealOverlap, 8>& g) {
    if (m1.arity != 4 || m2.arity != 4) throw PreconditionError("arity", "M1 and M2 must be 4-ary");

    const auto pts = unit_grid(kRealGridStep);
    for (std::size_t i = 0; i < 4; ++i)
        for (double x : pts)
            for (double y : pts)
                if (g[i](x, y) > g[i + 4](x, y)) {
                    throw PreconditionError("G" + std::to_string(i + 1) + " <= G" + std::to_string(i + 5),
                                            g[i].name + " exceeds " + g[i + 4].name,
                                            std::vector{Interval::degenerate(x), Interval::degenerate(y)});
                }

    const auto pts4 = unit_grid(kGrid4Step);
    require_aggregation_function(m1, "M1", pts4);
    require_aggregation_function(m2, "M2", pts4);

    std::optional<std::vector<Interval>> witness;
    auto scan4 = [&](auto&& bad) {
        witness.reset();
        for_each_grid4(pts4, [&](std::span<const double> x) {
            if (bad(x)) {
                witness = degenerate_tuple(x);
                return false;
            }
            return true;
        });
        return witness.has_value();
    };

    // M1 <= M2 is required on the argument tuples the overlap feeds them,
    // not on all of [0,1]^4: projections x3 and x4 are a valid pair although
    // x3 > x4 somewhere in the cube.
    for (const auto& x : standard_sample())
        for (const auto& y : standard_sample()) {
            const double xl = x.lower(), xu = x.upper(), yl = y.lower(), yu = y.upper();
            const std::array<double, 4> lo{g[0](xl, yu), g[1](xu, yl), g[2](xl, yl), g[3](xu, yu)};
            const std::array<double, 4> hi{g[4](xl, yu), g[5](xu, yl), g[6](xl, yl), g[7](xu, yu)};
            if (m1(lo) > m2(hi)) {
                throw PreconditionError("M1 <= M2", m1.name + " exceeds " + m2.name, std::vector{x, y});
            }
        }

    // O1: G1 = G2, G5 = G6 and both aggregators symmetric in their first two arguments.
    for (double x : pts)
        for (double y : pts)
            if (g[0](x, y) != g[1](x, y) || g[4](x, y) != g[5](x, y)) {
                throw PreconditionError("O1", "requires G1 = G2 and G5 = G6",
                                        std::vector{Interval::degenerate(x), Interval::degenerate(y)});
            }
    if (scan4([&](std::span<const double> x) {
            const std::array<double, 4> s{x[1], x[0], x[2], x[3]};
            return m1(x) != m1(s) || m2(x) != m2(s);
        })) {
        throw PreconditionError("O1", "M1 and M2 must be commutative in the first two arguments", witness);
    }

    auto satisfies_m3_fourth = [&](const RealAggregator& m) {
        return !scan4([&](std::span<const double> x) { return m(x) == 0.0 && x[3] != 0.0; });
    };
    if (!satisfies_m3_fourth(m1) && !satisfies_m3_fourth(m2)) {
        throw PreconditionError("O2", "neither M1 nor M2 satisfies (M3) in the fourth component", witness);
    }
    auto satisfies_m4_third = [&](const RealAggregator& m) {
        return !scan4([&](std::span<const double> x) { return m(x) == 1.0 && x[2] != 1.0; });
    };
    if (!satisfies_m4_third(m1) && !satisfies_m4_third(m2)) {
        throw PreconditionError("O3", "neither M1 nor M2 satisfies (M4) in the third component", witness);
    }

    for (const auto* m : {&m1, &m2}) {
        auto f = [m](std::span<const double> x) {
            const double v = (*m)(x);
            return std::pair{v, v};
        };
        if (auto c = continuity_heuristic(4, f, kGrid4Jumps); !c) {
            throw PreconditionError("O5", m->name + " appears discontinuous: " + c.detail, c.witness);
        }
    }

    std::string name = "semi(" + m1.name + "," + m2.name;
    const bool uniform = std::all_of(g.begin(), g.end(), [&](const RealOverlap& h) { return h.name == g[0].name; });
    if (uniform) {
        name += "," + g[0].name;
    } else {
        for (const auto& h : g) name += "," + h.name;
    }
    name += ")";

    return IVOverlap(name,
                     [m1, m2, g](const Interval& x, const Interval& y) {
                         const double xl = x.lower(), xu = x.upper(), yl = y.lower(), yu = y.upper();
                         const std::array<double, 4> lo{g[0](xl, yu), g[1](xu, yl), g[2](xl, yl), g[3](xu, yu)};
                         const std::array<double, 4> hi{g[4](xl, yu), g[5](xu, yl), g[6](xl, yl), g[7](xu, yu)};
                         return Interval(m1(lo), m2(hi));
                     },
                     SemiProvenance{m1, m2, g});
}

Finding check_generator(const UnaryGenerator& g, std::span<const Interval> samples) {
    const auto zero = Interval::zero(), one = Interval::one();
    if (g(zero) != zero) return Finding::fail({zero}, 1, "g([0,0]) = " + to_string(g(zero)));
    if (g(one) != one) return Finding::fail({one}, 2, "g([1,1]) = " + to_string(g(one)));
    std::size_t n = 2;
    for (const auto& x : samples) {
        ++n;
        const auto gx = g(x);
        if (x != zero && x != one && (gx == zero || gx == one)) {
            return Finding::fail({x}, n, "g maps an inner interval to " + to_string(gx));
        }
        for (const auto& y : samples) {
            if (!leq_product(x, y)) continue;
            ++n;
            if (!leq_product(gx, g(y))) return Finding::fail({x, y}, n, "g is not monotone");
        }
    }
    return Finding::pass(n);
}

IVOverlap migrative_from_generator(const UnaryGenerator& g) {
    const auto sample = standard_sample();
    if (auto c = check_generator(g, sample); !c) {
        throw PreconditionError("generator", g.name + ": " + c.detail, c.witness);
    }
    const bool associative = g.name == "id";
    return IVOverlap("mig(" + g.name + ")",
                     [h = g.eval](const Interval& x, const Interval& y) { return h(product(x, y)); },
                     MigrativeProvenance{g}, associative);
}

IVOverlap migrative_canonical(const ExponentInterval& k) {
    const ExponentInterval half(k.k1() / 2.0, k.k2() / 2.0);
    auto g = power_generator(half);
    const bool associative = half == ExponentInterval(1.0);
    return IVOverlap("canonical(K=" + exponent_text(k) + ")",
                     [half](const Interval& x, const Interval& y) { return pow(product(x, y), half); },
                     MigrativeProvenance{g}, associative);
}

IVOverlap power_transform(const IVOverlap& o, int n, PowerDirection direction) {
    if (n < 2) throw std::invalid_argument("power_transform: n must be at least 2");
    const double e = direction == PowerDirection::Root ? 1.0 / n : static_cast<double>(n);
    const ExponentInterval k(e);
    const std::string name = std::string(direction == PowerDirection::Root ? "root(" : "pow(") + o.name() +
                             ",n=" + std::to_string(n) + ")";
    auto scale = [e](double t) { return t == 0.0 || t == 1.0 ? t : std::pow(t, e); };

    Provenance provenance = OpaqueProvenance{};
    if (const auto* rep = std::get_if<RepresentableProvenance>(&o.provenance())) {
        auto wrap = [&](const RealOverlap& g) {
            RealOverlap h = g;
            h.name = name + ":" + g.name;
            h.eval = [f = g.eval, scale](double x, double y) { return f(scale(x), scale(y)); };
            h.claimed.erase(Claim::Associative);
            h.claimed.erase(Claim::NeutralOne);
            return h;
        };
        provenance = RepresentableProvenance{wrap(rep->lower), wrap(rep->upper)};
    } else if (const auto* mig = std::get_if<MigrativeProvenance>(&o.provenance())) {
        UnaryGenerator h{name + ":" + mig->g.name, [f = mig->g.eval, k](const Interval& x) { return f(pow(x, k)); }};
        provenance = MigrativeProvenance{h};
    }
    return IVOverlap(name,
                     [o, k](const Interval& x, const Interval& y) { return o(pow(x, k), pow(y, k)); },
                     std::move(provenance));
}

IVOverlap midpoint_example() {
    return IVOverlap("midpoint",
                     [](const Interval& x, const Interval& y) { return meet(contract_half(x), contract_half(y)); },
                     OpaqueProvenance{});
}

Interval midpoint_closed_form(const Interval& x, const Interval& y) {
    constexpr double a = 0.75, b = 0.25;
    return Interval(std::min(a * x.lower() + b * x.upper(), a * y.lower() + b * y.upper()),
                    std::min(b * x.lower() + a * x.upper(), b * y.lower() + a * y.upper()));
}

IVOverlap iv_join(const IVOverlap& a, const IVOverlap& b) {
    Provenance provenance = OpaqueProvenance{};
    const auto* ra = std::get_if<RepresentableProvenance>(&a.provenance());
    const auto* rb = std::get_if<RepresentableProvenance>(&b.provenance());
    if (ra && rb) provenance = RepresentableProvenance{lattice_join(ra->lower, rb->lower), lattice_join(ra->upper, rb->upper)};
    return IVOverlap("join(" + a.name() + "," + b.name() + ")",
                     [a, b](const Interval& x, const Interval& y) { return join(a(x, y), b(x, y)); },
                     std::move(provenance));
}

IVOverlap iv_meet(const IVOverlap& a, const IVOverlap& b) {
    Provenance provenance = OpaqueProvenance{};
    const auto* ra = std::get_if<RepresentableProvenance>(&a.provenance());
    const auto* rb = std::get_if<RepresentableProvenance>(&b.provenance());
    if (ra && rb) provenance = RepresentableProvenance{lattice_meet(ra->lower, rb->lower), lattice_meet(ra->upper, rb->upper)};
    return IVOverlap("meet(" + a.name() + "," + b.name() + ")",
                     [a, b](const Interval& x, const Interval& y) { return meet(a(x, y), b(x, y)); },
                     std::move(provenance));
}

UnaryGenerator induced_generator(const IVOverlap& o) {
    return {"g[" + o.name() + "]", [o](const Interval& x) { return o(Interval::one(), x); }};
}

Finding check_migrative(const IVOverlap& f, std::span<const Interval> samples, double tolerance) {
    std::size_t n = 0;
    const auto one = Interval::one();
    for (const auto& alpha : samples)
        for (const auto& x : samples)
            for (const auto& y : samples) {
                ++n;
                const auto left = f(product(alpha, x), y);
                const auto right = f(x, product(alpha, y));
                if (!approx_equal(left, right, tolerance)) {
                    return Finding::fail({alpha, x, y}, n,
                                         "F(αX,Y) = " + to_string(left) + " but F(X,αY) = " + to_string(right));
                }
                // The alpha loop already covers every pair; test the g-form once per pair.
                if (&alpha == samples.data()) {
                    const auto direct = f(x, y);
                    const auto via_one = f(one, product(x, y));
                    if (!approx_equal(direct, via_one, tolerance)) {
                        return Finding::fail({one, x, y}, n,
                                             "F(X,Y) = " + to_string(direct) + " but F([1,1],XY) = " +
                                                 to_string(via_one));
                    }
                }
            }
    return Finding::pass(n);
}

Finding check_homogeneous(const IVOverlap& f, const ExponentInterval& k, std::span<const Interval> samples,
                          double tolerance) {
    std::size_t n = 0;
    for (const auto& alpha : samples) {
        const auto scale = pow(alpha, k);
        for (const auto& x : samples)
            for (const auto& y : samples) {
                ++n;
                const auto left = f(product(alpha, x), product(alpha, y));
                const auto right = product(scale, f(x, y));
                if (!approx_equal(left, right, tolerance)) {
                    return Finding::fail({alpha, x, y}, n,
                                         "F(αX,αY) = " + to_string(left) + " but α^K F(X,Y) = " + to_string(right));
                }
            }
    }
    return Finding::pass(n);
}

Finding check_self_duality(const IVOverlap& f, std::span<const Interval> samples) {
    std::vector<Interval> ordered{Interval::zero(), Interval::one()};
    for (const auto& s : samples)
        if (s != Interval::zero() && s != Interval::one()) ordered.push_back(s);
    std::size_t n = 0;
    auto test = [&](const Interval& x, const Interval& y) {
        ++n;
        const auto direct = f(x, y);
        const auto dual = complement(f(complement(x), complement(y)));
        return approx_equal(direct, dual, kPolynomialTolerance);
    };
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!test(ordered[i], ordered[j])) return Finding::fail({ordered[i], ordered[j]}, n, "self-duality fails");
    for (const auto& x : ordered)
        for (const auto& y : ordered)
            if (!test(x, y)) return Finding::fail({x, y}, n, "self-duality fails");
    return Finding::pass(n);
}

Finding check_neutral_one(const IVOverlap& o, std::span<const Interval> samples) {
    std::size_t n = 0;
    for (const auto& x : samples) {
        ++n;
        const auto v = o(Interval::one(), x);
        if (v != x) return Finding::fail({x}, n, "O([1,1],X) = " + to_string(v));
    }
    return Finding::pass(n);
}

Finding check_associative(const IVOverlap& o, std::span<const Interval> samples, double tolerance) {
    std::size_t n = 0;
    for (const auto& x : samples)
        for (const auto& y : samples)
            for (const auto& z : samples) {
                ++n;
                const auto left = o(o(x, y), z);
                const auto right = o(x, o(y, z));
                if (!approx_equal(left, right, tolerance)) {
                    return Finding::fail({x, y, z}, n, "O(O(X,Y),Z) = " + to_string(left) + " but O(X,O(Y,Z)) = " +
                                                           to_string(right));
                }
            }
    return Finding::pass(n);
}

}  // namespace ivowa
