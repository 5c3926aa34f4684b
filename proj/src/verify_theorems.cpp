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
#include <map>
#include <random>

#include "ivowa/error.hpp"
#include "ivowa/registry.hpp"
#include "ivowa/verify.hpp"

namespace ivowa {

namespace {

constexpr std::uint32_t kGowaSeed = 90210u;
constexpr std::size_t kMonotoneProbes = 2000;
constexpr std::size_t kRandomVectors = 1000;

struct HomogeneousTarget {
    std::string id;
    ExponentInterval k;
};

// Declared homogeneity orders of catalog members, used where a result is
// conditional on homogeneity.
const std::vector<HomogeneousTarget>& homogeneous_targets() {
    static const std::vector<HomogeneousTarget> t = {
        {"rep(product,product)", ExponentInterval(2.0)},
        {"rep(min,min)", ExponentInterval(1.0)},
        {"rep(product,min)", ExponentInterval(1.0, 2.0)},
        {"rep(minmax:p=2,minmax:p=2)", ExponentInterval(3.0)},
        {"mig(id)", ExponentInterval(2.0)},
        {"mig(sqrt)", ExponentInterval(1.0)},
        {"canonical(K=[1,1])", ExponentInterval(1.0)},
        {"canonical(K=[1,2])", ExponentInterval(1.0, 2.0)},
        {"canonical(K=[2,2])", ExponentInterval(2.0)},
    };
    return t;
}

std::string k_text(const ExponentInterval& k) {
    return "K=[" + format_real(k.k1()) + "," + format_real(k.k2()) + "]";
}

Finding first_failure(const std::vector<CheckReport>& reports, std::size_t count) {
    std::size_t samples = 0;
    for (const auto& r : reports) {
        samples += r.samples;
        if (r.verdict == Verdict::Fail) {
            return Finding::fail(r.witness.value_or(std::vector<Interval>{}), samples,
                                 r.check_id + " fails" + (r.detail.empty() ? "" : ": " + r.detail));
        }
    }
    return Finding::pass(samples ? samples : count);
}

Finding overlap_axioms(const IVOverlap& o, const VerifyOptions& opts) {
    auto r = run_axiom_suite(o, opts);
    r.pop_back();  // inclusion monotonicity is not an axiom
    return first_failure(r, 0);
}

Finding real_overlap_axioms(const RealOverlap& g, const VerifyOptions& opts) {
    return first_failure(run_axiom_suite(g, opts), 0);
}

Finding with_detail(Finding f, std::string detail) {
    f.detail = f.detail.empty() ? std::move(detail) : detail + ": " + f.detail;
    return f;
}

Finding check_idempotent(const IVOverlap& o, std::span<const Interval> s, double tol = kRootTolerance) {
    std::size_t n = 0;
    for (const auto& x : s) {
        ++n;
        if (!approx_equal(o(x, x), x, tol)) return Finding::fail({x}, n, "O(X,X) = " + to_string(o(x, x)));
    }
    return Finding::pass(n);
}

Finding equal_on_samples(const IVOverlap& a, const IVOverlap& b, std::span<const Interval> s, double tol) {
    std::size_t n = 0;
    for (const auto& x : s)
        for (const auto& y : s) {
            ++n;
            if (!approx_equal(a(x, y), b(x, y), tol)) {
                return Finding::fail({x, y}, n, a.name() + " gives " + to_string(a(x, y)) + ", " + b.name() +
                                                    " gives " + to_string(b(x, y)));
            }
        }
    return Finding::pass(n);
}

RealOverlap projection_as_real(const IVOverlap& o, bool upper) {
    const auto p = projections(o);
    return RealOverlap{o.name() + (upper ? ".upper" : ".lower"), upper ? p.upper : p.lower, {}, std::nullopt};
}

Finding real_homogeneous(const RealOverlap& g, double k, const std::vector<double>& pts, double tol) {
    std::size_t n = 0;
    for (double a : pts)
        for (double x : pts)
            for (double y : pts) {
                ++n;
                const double lhs = g(a * x, a * y);
                const double rhs = (a == 0.0 ? 0.0 : std::pow(a, k)) * g(x, y);
                if (std::abs(lhs - rhs) > tol) {
                    return Finding::fail({Interval::degenerate(a), Interval::degenerate(x), Interval::degenerate(y)},
                                         n, "G(ax,ay) = " + format_real(lhs) + ", a^k G(x,y) = " + format_real(rhs));
                }
            }
    return Finding::pass(n);
}

// Lazily computed per-operator facts shared by several checks.
class Facts {
public:
    Facts(const VerifyOptions& opts) : opts_(opts), samples_(opts.grid.intervals()) {
        for (const auto& id : builtin_iv_overlap_ids()) ops_.push_back(resolve_iv_overlap(id));
    }

    const std::vector<IVOverlap>& ops() const { return ops_; }
    const std::vector<Interval>& samples() const { return samples_; }
    const VerifyOptions& opts() const { return opts_; }

    const IVOverlap& op(const std::string& id) const {
        for (const auto& o : ops_)
            if (o.name() == id) return o;
        throw std::logic_error("not in catalog: " + id);
    }

    const Finding& migrative(const IVOverlap& o) {
        return memo(migrative_, o, [&] { return check_migrative(o, samples_); });
    }
    const Finding& neutral(const IVOverlap& o) {
        return memo(neutral_, o, [&] { return check_neutral_one(o, samples_); });
    }
    const Finding& idempotent(const IVOverlap& o) {
        return memo(idempotent_, o, [&] { return check_idempotent(o, samples_); });
    }
    const Finding& associative(const IVOverlap& o) {
        return memo(associative_, o, [&] { return check_associative(o, samples_, kRootTolerance); });
    }
    const Finding& axioms(const IVOverlap& o) {
        return memo(axioms_, o, [&] { return overlap_axioms(o, opts_); });
    }
    const Finding& inclusion(const IVOverlap& o) {
        return memo(inclusion_, o, [&] { return is_inclusion_monotonic(o, samples_); });
    }
    const Finding& rebuild(const IVOverlap& o) {
        return memo(rebuild_, o, [&] { return reconstructs_from_projections(o, samples_); });
    }
    const Finding& homogeneous(const IVOverlap& o, const ExponentInterval& k) {
        auto key = o.name() + "|" + k_text(k);
        auto it = homogeneous_.find(key);
        if (it == homogeneous_.end()) it = homogeneous_.emplace(key, check_homogeneous(o, k, samples_)).first;
        return it->second;
    }

private:
    template <typename F>
    const Finding& memo(std::map<std::string, Finding>& cache, const IVOverlap& o, F compute) {
        auto it = cache.find(o.name());
        if (it == cache.end()) it = cache.emplace(o.name(), compute()).first;
        return it->second;
    }

    VerifyOptions opts_;
    std::vector<Interval> samples_;
    std::vector<IVOverlap> ops_;
    std::map<std::string, Finding> migrative_, neutral_, idempotent_, associative_, axioms_, inclusion_, rebuild_,
        homogeneous_;
};

using Reports = std::vector<CheckReport>;

void add(Reports& out, const std::string& id, const std::string& target, const Finding& f, double tol) {
    out.push_back(CheckReport::from(id, target, f, tol));
}

// premise => conclusion, reported per target. A false premise passes.
Finding implication(const Finding& premise, const Finding& conclusion, const std::string& premise_text) {
    if (!premise) {
        Finding f = Finding::pass(premise.samples);
        f.detail = "vacuous: not " + premise_text;
        return f;
    }
    return conclusion;
}

// lhs <=> rhs, reported with whichever witness explains the disagreement.
Finding biconditional(const Finding& lhs, const Finding& rhs, const std::string& lhs_text, const std::string& rhs_text) {
    const std::size_t n = lhs.samples + rhs.samples;
    if (lhs.holds == rhs.holds) return Finding::pass(n);
    const auto& failing = lhs.holds ? rhs : lhs;
    return Finding::fail(failing.witness.value_or(std::vector<Interval>{}), n,
                         lhs_text + (lhs.holds ? " holds" : " fails") + " but " + rhs_text +
                             (rhs.holds ? " holds" : " fails"));
}

// ---- o-representability ---------------------------------------------------

void representability_checks(Facts& facts, Reports& out) {
    for (const auto& o : facts.ops()) {
        if (!o.is_representable()) continue;
        add(out, "representable.overlap", o.name(), facts.axioms(o), kExact);
    }
    for (const auto& o : facts.ops()) {
        if (!o.is_representable()) continue;
        add(out, "representable.projection-rebuild", o.name(), facts.rebuild(o), kPolynomialTolerance);
    }
    for (const auto& o : facts.ops()) {
        const auto sp = is_strongly_positive(o, facts.samples());
        Finding conclusion = real_overlap_axioms(projection_as_real(o, false), facts.opts());
        if (conclusion) conclusion = real_overlap_axioms(projection_as_real(o, true), facts.opts());
        add(out, "representable.sp-projections", o.name(),
            implication(sp, with_detail(conclusion, "projection is not an overlap"), "strongly positive"), kExact);
    }
    {
        const auto& o = facts.op("rep(lukasiewicz,min)");
        Finding f = facts.axioms(o);
        if (f) {
            const auto sp = is_strongly_positive(o, facts.samples());
            const auto lower = real_overlap_axioms(projection_as_real(o, false), facts.opts());
            if (sp) {
                f = Finding::fail({}, sp.samples, "expected a strong-positivity violation");
            } else if (lower) {
                f = Finding::fail({}, lower.samples, "expected the lower projection to fail an overlap axiom");
            } else {
                f = Finding::pass(sp.samples + lower.samples);
                f.detail = "not strongly positive at " + to_string((*sp.witness)[0]) + "; lower projection: " +
                           lower.detail;
            }
        }
        add(out, "representable.sp-necessary", o.name(), f, kExact);
    }
    for (const auto& o : facts.ops()) {
        add(out, "inclusion-monotone.characterization", o.name(),
            biconditional(facts.inclusion(o), facts.rebuild(o), "inclusion monotonicity", "projection rebuild"),
            kPolynomialTolerance);
    }
}

// ---- semi o-representability -----------------------------------------------

void semi_checks(Facts& facts, Reports& out) {
    const auto s = facts.samples();
    std::vector<IVOverlap> semis;
    for (const char* id : {"semi(p3,p4,product)", "semi(prod123,max,product)",
                           "semi(p3,p4,min,min,product,min,min,min,min,min)"}) {
        semis.push_back(resolve_iv_overlap(id));
    }
    for (const auto& o : semis) {
        const auto axioms = run_axiom_suite(o, facts.opts());
        add(out, "semi.commutative", o.name(), first_failure({axioms[0]}, 0), kExact);
        add(out, "semi.zero", o.name(), first_failure({axioms[1]}, 0), kExact);
        add(out, "semi.one", o.name(), first_failure({axioms[2]}, 0), kExact);
        add(out, "semi.monotone", o.name(), first_failure({axioms[3]}, 0), kExact);

        const auto& semi = std::get<SemiProvenance>(o.provenance());
        auto continuous = [](const RealAggregator& m) {
            return continuity_heuristic(
                4,
                [&m](std::span<const double> p) {
                    const double v = m(p);
                    return std::pair{v, v};
                },
                JumpBounds{0.1, 0.4, 0.025, 0.1, 0.5});
        };
        Finding m_cont = continuous(semi.m1);
        if (m_cont) m_cont = continuous(semi.m2);
        add(out, "semi.continuous", o.name(),
            biconditional(first_failure({axioms[4]}, 0), m_cont, "O5", "continuity of M1 and M2"), kExact);
    }
    add(out, "semi.collapse", "semi(p3,p4,product)",
        equal_on_samples(semis[0], facts.op("rep(product,product)"), s, kExact), kExact);

    Finding rejected = Finding::fail({}, 1, "semi(p4,p3,product) was accepted");
    try {
        (void)resolve_iv_overlap("semi(p4,p3,product)");
    } catch (const PreconditionError& e) {
        rejected = e.condition() == "M1 <= M2"
                       ? Finding::pass(1)
                       : Finding::fail(e.witness().value_or(std::vector<Interval>{}), 1,
                                       "rejected for '" + e.condition() + "' instead of M1 <= M2");
    }
    add(out, "semi.order-precondition", "semi(p4,p3,product)", rejected, kExact);
}

// ---- migrativity and homogeneity -------------------------------------------

void homogeneity_checks(Facts& facts, Reports& out) {
    const auto& s = facts.samples();
    const Interval zero = Interval::zero(), one = Interval::one();

    for (const auto& o : facts.ops()) {
        const auto f = check_self_duality(o, s);
        Finding r = Finding::pass(f.samples);
        if (f) {
            r = Finding::fail({}, f.samples, "self-duality holds on the sample");
        } else if (*f.witness != std::vector<Interval>{zero, one}) {
            r = Finding::fail(*f.witness, f.samples, "self-duality fails first elsewhere than ([0,0],[1,1])");
        }
        add(out, "self-duality.fails", o.name(), r, kExact);
    }
    for (const auto& o : facts.ops()) {
        const auto comm = run_axiom_suite(o, facts.opts()).front();
        add(out, "migrative.commutative", o.name(),
            implication(facts.migrative(o), first_failure({comm}, 0), "migrative"), kExact);
    }
    for (const auto& t : homogeneous_targets()) {
        const auto& o = facts.op(t.id);
        const Finding zero_case = o(zero, zero) == zero ? Finding::pass(1)
                                                        : Finding::fail({zero, zero}, 1, "F([0,0],[0,0]) != [0,0]");
        add(out, "homogeneous.zero", t.id + " " + k_text(t.k),
            implication(facts.homogeneous(o, t.k), zero_case, "homogeneous"), kExact);
    }
    const ExponentInterval unit(1.0), two(2.0);
    for (const auto& o : facts.ops()) {
        Finding premise = facts.homogeneous(o, unit);
        if (premise && o(one, one) != one) premise = Finding::fail({one, one}, 1, "F([1,1],[1,1]) != [1,1]");
        add(out, "homogeneous.idempotent", o.name(), implication(premise, facts.idempotent(o), "premise"),
            kRootTolerance);
    }
    for (const auto& o : facts.ops()) {
        Finding premise = facts.migrative(o);
        if (premise) premise = facts.idempotent(o);
        add(out, "migrative.idempotent-homogeneous", o.name(),
            implication(premise, facts.homogeneous(o, unit), "migrative and idempotent"), kRootTolerance);
    }
    for (const auto& o : facts.ops()) {
        Finding premise = facts.migrative(o);
        if (premise) premise = facts.neutral(o);
        add(out, "migrative.neutral-homogeneous", o.name(),
            implication(premise, facts.homogeneous(o, two), "migrative with neutral [1,1]"), kRootTolerance);
    }
    for (const auto& o : facts.ops()) {
        add(out, "migrative.idempotent-iff-homogeneous", o.name(),
            implication(facts.migrative(o),
                        biconditional(facts.homogeneous(o, unit), facts.idempotent(o), "homogeneity [1,1]",
                                      "idempotency"),
                        "migrative"),
            kRootTolerance);
    }
}

void migrative_checks(Facts& facts, Reports& out) {
    const auto& s = facts.samples();
    for (const auto& o : facts.ops()) {
        const auto g = induced_generator(o);
        std::size_t n = 0;
        Finding form = Finding::pass(0);
        for (const auto& x : s) {
            for (const auto& y : s) {
                ++n;
                if (!approx_equal(o(x, y), g(product(x, y)), kRootTolerance)) {
                    form = Finding::fail({x, y}, n, "O(X,Y) != O([1,1],XY)");
                    break;
                }
            }
            if (!form) break;
        }
        if (form) form.samples = n;
        add(out, "migrative.generator-form", o.name(), implication(facts.migrative(o), form, "migrative"),
            kRootTolerance);

        Finding rhs = check_generator(g, s);
        if (rhs) rhs = form;
        add(out, "migrative.characterization", o.name(),
            biconditional(facts.migrative(o), rhs, "migrativity", "generator form"), kRootTolerance);
    }
    for (const auto& o : facts.ops()) {
        if (!o.is_migrative()) continue;
        Finding both = facts.inclusion(o);
        if (both) both = facts.rebuild(o);
        add(out, "migrative.representable", o.name(), with_detail(both, "generator-built overlap"),
            kPolynomialTolerance);
    }
    const auto pts = unit_grid(facts.opts().real_step);
    for (const auto& t : homogeneous_targets()) {
        const auto& o = facts.op(t.id);
        if (!o.is_representable() && !o.is_migrative()) continue;
        for (const auto& k : {t.k, ExponentInterval(t.k.k1() + 1.0, t.k.k2() + 1.0)}) {
            Finding rhs = real_homogeneous(projection_as_real(o, false), k.k2(), pts, kRootTolerance);
            if (rhs) rhs = real_homogeneous(projection_as_real(o, true), k.k1(), pts, kRootTolerance);
            add(out, "homogeneous.representatives", t.id + " " + k_text(k),
                biconditional(facts.homogeneous(o, k), rhs, "homogeneity of O", "homogeneity of representatives"),
                kRootTolerance);
        }
    }
    for (const auto& k : {ExponentInterval(1.0), ExponentInterval(1.0, 2.0), ExponentInterval(2.0)}) {
        const auto canonical = migrative_canonical(k);
        Finding f = check_migrative(canonical, s);
        if (f) f = check_homogeneous(canonical, k, s);
        if (f && canonical(Interval::one(), Interval::one()) != Interval::one()) {
            f = Finding::fail({Interval::one(), Interval::one()}, 1, "F([1,1],[1,1]) != [1,1]");
        }
        for (const auto& o : facts.ops()) {
            if (!f) break;
            if (!facts.migrative(o) || !facts.homogeneous(o, k) || o(Interval::one(), Interval::one()) != Interval::one())
                continue;
            f = with_detail(equal_on_samples(o, canonical, s, kRootTolerance), o.name() + " differs");
        }
        add(out, "uniqueness.canonical", k_text(k), f, kRootTolerance);
    }
}

// ---- associativity and t-norms ----------------------------------------------

void tnorm_checks(Facts& facts, Reports& out) {
    const auto& s = facts.samples();
    std::vector<const IVOverlap*> assoc;
    for (const auto& o : facts.ops()) {
        if (o.claims_associative() && facts.associative(o)) assoc.push_back(&o);
    }
    for (const auto* o : assoc) {
        std::size_t n = 0;
        Finding f = Finding::pass(0);
        for (const auto& x : s) {
            ++n;
            const Interval g = (*o)(x, Interval::one());
            if (!approx_equal((*o)(g, Interval::one()), g, kRootTolerance)) {
                f = Finding::fail({x}, n, "g(g(X)) != g(X)");
                break;
            }
            if (!subseteq(g, x)) {
                f = Finding::fail({x}, n, "g(X) = " + to_string(g) + " is not contained in X");
                break;
            }
        }
        if (f) f.samples = n;
        add(out, "tnorm.idempotent-contractive", o->name(), f, kRootTolerance);
    }
    for (const auto* o : assoc) {
        const auto g = induced_generator(*o);
        const IVOverlap g_as_binary(g.name, [g](const Interval& x, const Interval&) { return g(x); },
                                    OpaqueProvenance{});
        std::size_t n = 0;
        Finding g_incl = Finding::pass(0);
        for (const auto& x : s)
            for (const auto& x2 : s) {
                if (!g_incl || !subseteq(x, x2)) continue;
                ++n;
                if (!subseteq(g(x), g(x2))) g_incl = Finding::fail({x, x2}, n, "g is not inclusion monotonic");
            }
        if (g_incl) g_incl.samples = n;
        Finding tnorm = facts.neutral(*o);
        if (tnorm) tnorm = facts.axioms(*o);
        add(out, "tnorm.inclusion-branch", o->name(), implication(g_incl, tnorm, "g inclusion monotonic"),
            kRootTolerance);
    }
    out.push_back(CheckReport::skipped("tnorm.surjective-branch", "catalog",
                                       "surjectivity of g cannot be decided from samples"));
    for (const auto* o : assoc) {
        Finding f = facts.neutral(*o);
        if (f) f = facts.axioms(*o);
        add(out, "tnorm.associative-overlap", o->name(), f, kRootTolerance);
    }
}

// ---- real overlaps -------------------------------------------------------

void real_checks(Facts& facts, Reports& out) {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"product", "min"}, {"minmax:p=2", "sqrtprod"}, {"powprod:p=2", "migquad"}};
    for (const auto& [a, b] : pairs) {
        const auto ga = find_overlap(a), gb = find_overlap(b);
        for (const auto& g : {lattice_join(ga, gb), lattice_meet(ga, gb)}) {
            add(out, "real.lattice", g.name, real_overlap_axioms(g, facts.opts()), kExact);
        }
    }
    for (const auto& [a, b] : pairs) {
        const auto g = convex_sum(0.3, 0.7, find_overlap(a), find_overlap(b));
        add(out, "real.convex-sum", g.name, real_overlap_axioms(g, facts.opts()), kExact);
    }
}

// ---- weighted vectors and IV-GOWA ---------------------------------------------

std::size_t grid_index(double x, double step) { return static_cast<std::size_t>(std::lround(x / step)); }

void weight_checks(Facts& facts, Reports& out) {
    const auto& s = facts.samples();
    const double step = facts.opts().grid.endpoint_step;
    const std::size_t ten = grid_index(1.0, step);
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
        for (const auto& m : builtin_aggregators(n)) {
            const WeightVector ones{std::vector<Interval>(n, Interval::one())};
            add(out, "weights.all-ones", m.name + " n=" + std::to_string(n),
                is_weighted_vector(m, ones) ? Finding::pass(1) : Finding::fail(ones.weights, 1, "M([1,1],...) != [1,1]"),
                kExact);
        }
    }
    auto weight_law = [&](const IVAggregator& m, auto predicate, const std::string& id) {
        std::size_t n = 0;
        for (const auto& w1 : s)
            for (const auto& w2 : s) {
                ++n;
                const WeightVector w{{w1, w2}};
                if (is_weighted_vector(m, w) != predicate(w1, w2)) {
                    add(out, id, m.name, Finding::fail({w1, w2}, n, "characterization disagrees"), kExact);
                    return;
                }
            }
        add(out, id, m.name, Finding::pass(n), kExact);
    };
    const auto one = Interval::one();
    weight_law(find_iv_aggregator("max", 2), [&](const Interval& a, const Interval& b) { return a == one || b == one; },
           "weights.max");
    weight_law(find_iv_aggregator("tsum", 2),
           [&](const Interval& a, const Interval& b) {
               return grid_index(a.lower(), step) + grid_index(b.lower(), step) >= ten;
           },
           "weights.tsum");
    for (auto order : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager}) {
        auto m = find_iv_aggregator("dirac", 2, order);
        m.name += "/" + std::string(to_string(order));
        weight_law(m, [&](const Interval& a, const Interval& b) { return a == one || b == one; }, "weights.dirac");
    }
    {
        const auto m = find_iv_aggregator("geomean", 2);
        Finding f = check_distributivity(m, facts.op("rep(product,product)"), s);
        weight_law(m, [&](const Interval& a, const Interval& b) { return a == one && b == one; }, "weights.geomean");
        add(out, "gowa.geomean-example", "geomean rep(product,product)", f, kRootTolerance);
    }
}

struct Config {
    GowaOperator op;
    std::string label;
};

std::vector<WeightVector> candidate_weights(AggregatorKind kind) {
    auto w = [](double a, double b, double c, double d) { return WeightVector{{Interval(a, b), Interval(c, d)}}; };
    switch (kind) {
        case AggregatorKind::Max: return {w(1, 1, 0.3, 0.5), w(0.2, 0.6, 1, 1), w(1, 1, 1, 1)};
        case AggregatorKind::TruncatedSum: return {w(0.5, 0.5, 0.5, 0.5), w(0.3, 0.3, 0.7, 0.7), w(1, 1, 0, 0)};
        default: return {w(1, 1, 1, 1)};
    }
}

std::string weights_text(const WeightVector& w) {
    std::string t = "W=(";
    for (std::size_t i = 0; i < w.size(); ++i) t += (i ? "," : "") + to_string(w.weights[i]);
    return t + ")";
}

std::vector<Config> valid_configs(Facts& facts, Reports& out) {
    std::vector<Config> configs;
    for (const auto& m : builtin_aggregators(2)) {
        for (const auto& o : facts.ops()) {
            std::optional<GowaBasis> basis;
            try {
                basis = GowaBasis::validate(m, o, facts.opts().grid);
            } catch (const PreconditionError&) {
                continue;
            }
            for (const auto& w : candidate_weights(m.kind))
                for (auto order : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager}) {
                    configs.push_back({GowaOperator(*basis, w, order),
                                       m.name + " " + o.name() + " " + weights_text(w) + " " +
                                           std::string(to_string(order))});
                }
        }
    }
    if (configs.empty()) out.push_back(CheckReport::skipped("gowa.idempotent", "catalog", "no valid configuration"));
    return configs;
}

void gowa_checks(Facts& facts, Reports& out) {
    const auto& s = facts.samples();

    for (const auto& o : facts.ops()) {
        add(out, "gowa.dirac-example", "dirac " + o.name(), check_distributivity(find_iv_aggregator("dirac", 2), o, s),
            kRootTolerance);
    }
    const auto& product_op = facts.op("rep(product,product)");
    for (const auto& m : builtin_aggregators(2)) {
        add(out, "gowa.homogeneous-distributive", m.name,
            biconditional(check_homogeneous_M(m, s), check_distributivity(m, product_op, s), "homogeneity of M",
                          "distributivity over the product"),
            kRootTolerance);
    }

    const auto configs = valid_configs(facts, out);
    for (const auto& c : configs) {
        std::size_t n = 0;
        Finding f = Finding::pass(0);
        for (const auto& x : s) {
            ++n;
            const std::vector<Interval> xs(c.op.arity(), x);
            if (!approx_equal(c.op(xs), x, kPolynomialTolerance)) {
                f = Finding::fail({x}, n, "IV-GOWA(C,C) = " + to_string(c.op(xs)));
                break;
            }
        }
        if (f) f.samples = n;
        add(out, "gowa.idempotent", c.label, f, kPolynomialTolerance);
    }

    std::mt19937 rng(kGowaSeed);
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    for (const auto& c : configs) {
        const std::size_t n = c.op.arity();
        Finding f = Finding::pass(0);
        const std::vector<Interval> zeros(n, Interval::zero()), ones(n, Interval::one());
        if (c.op(zeros) != Interval::zero()) f = Finding::fail(zeros, 1, "boundary [0,0] not preserved");
        if (f && c.op(ones) != Interval::one()) f = Finding::fail(ones, 2, "boundary [1,1] not preserved");
        std::size_t probes = 2;
        for (std::size_t t = 0; f && t < kMonotoneProbes; ++t) {
            std::vector<Interval> xs(n, Interval::zero()), ys(n, Interval::zero());
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = s[pick(rng)];
                const auto& y = s[pick(rng)];
                ys[i] = Interval(std::max(xs[i].lower(), y.lower()), std::max(xs[i].upper(), y.upper()));
            }
            if (sort_descending(c.op.order(), xs) != sort_descending(c.op.order(), ys)) continue;
            ++probes;
            const auto a = c.op(xs), b = c.op(ys);
            if (a.lower() > b.lower() + kPolynomialTolerance || a.upper() > b.upper() + kPolynomialTolerance) {
                auto witness = xs;
                witness.insert(witness.end(), ys.begin(), ys.end());
                f = Finding::fail(std::move(witness), probes, "raising inputs lowered the output");
            }
        }
        if (f) f.samples = probes;
        add(out, "gowa.aggregation-function", c.label, f, kPolynomialTolerance);
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_vector = [&](std::size_t n) {
        std::vector<Interval> xs;
        for (std::size_t i = 0; i < n; ++i) {
            double a = unit(rng), b = unit(rng);
            xs.emplace_back(std::min(a, b), std::max(a, b));
        }
        return xs;
    };
    const std::size_t n = 3;
    for (const char* id : {"tsum", "max"}) {
        for (auto order : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager}) {
            const auto m = find_iv_aggregator(id, n, order);
            const auto basis = GowaBasis::validate(m, product_op, facts.opts().grid);
            Finding f = Finding::pass(0);
            std::size_t count = 0;
            for (std::size_t i0 = 1; i0 <= n && f; ++i0) {
                const GowaOperator op(basis, selector_weights(n, i0), order);
                for (std::size_t t = 0; t < kRandomVectors && f; ++t) {
                    const auto xs = random_vector(n);
                    const auto expected = xs[sort_descending(order, xs)[i0 - 1]];
                    ++count;
                    if (!approx_equal(op(xs), expected, kPolynomialTolerance)) {
                        f = Finding::fail(xs, count, "selector " + std::to_string(i0) + " gave " + to_string(op(xs)));
                    }
                }
            }
            if (f) f.samples = count;
            add(out, "gowa.projection", std::string(id) + " rep(product,product) " + std::string(to_string(order)), f,
                kPolynomialTolerance);
        }
    }
    for (std::size_t k : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
        const auto m = find_iv_aggregator("tsum", k);
        const double w = 1.0 / static_cast<double>(k);
        const GowaOperator op(GowaBasis::validate(m, product_op, facts.opts().grid),
                              WeightVector{std::vector<Interval>(k, Interval(w, w))}, AdmissibleOrder::Lex1);
        Finding f = Finding::pass(0);
        std::size_t count = 0;
        for (std::size_t t = 0; t < kRandomVectors && f; ++t) {
            const auto xs = random_vector(k);
            double lo = 0.0, hi = 0.0;
            for (const auto& x : xs) {
                lo += x.lower();
                hi += x.upper();
            }
            const Interval mean(lo / static_cast<double>(k), std::min(1.0, hi / static_cast<double>(k)));
            ++count;
            if (!approx_equal(op(xs), mean, kPolynomialTolerance)) {
                f = Finding::fail(xs, count, "IV-GOWA = " + to_string(op(xs)) + ", mean = " + to_string(mean));
            }
        }
        if (f) f.samples = count;
        add(out, "gowa.arithmetic-mean", "tsum rep(product,product) n=" + std::to_string(k), f, kPolynomialTolerance);
    }
}

}  // namespace

std::vector<CheckReport> lattice_order_checks(const VerifyOptions& opts) {
    Reports out;
    const auto a = resolve_iv_overlap("rep(product,product)");
    const auto b = resolve_iv_overlap("rep(min,min)");
    const auto c = resolve_iv_overlap("mig(sqrt)");
    for (const auto& o : {iv_join(a, b), iv_join(c, a), iv_meet(a, b), iv_meet(c, b)}) {
        add(out, o.name().rfind("join", 0) == 0 ? "lattice.join" : "lattice.meet", o.name(), overlap_axioms(o, opts),
            kExact);
    }
    const auto s = opts.grid.intervals();
    for (const auto& id : builtin_iv_overlap_ids()) {
        const auto o = resolve_iv_overlap(id);
        const auto lo = power_transform(o, 2, PowerDirection::Power);
        const auto hi = power_transform(o, 2, PowerDirection::Root);
        std::size_t n = 0;
        Finding f = Finding::pass(0);
        for (const auto& x : s) {
            for (const auto& y : s) {
                ++n;
                const auto vl = lo(x, y), v = o(x, y), vh = hi(x, y);
                if (!leq_product(vl, v) || !leq_product(v, vh)) {
                    f = Finding::fail({x, y}, n, "O^2 <= O <= O^(1/2) fails");
                    break;
                }
                const bool interior = x.lower() > 0 && x.upper() < 1 && y.lower() > 0 && y.upper() < 1;
                if (interior && (vl == v || v == vh)) {
                    f = Finding::fail({x, y}, n, "sandwich not strict at an interior point");
                    break;
                }
                const bool corner = (x == Interval::zero() || x == Interval::one()) && x == y;
                if (corner && !(vl == v && v == vh)) {
                    f = Finding::fail({x, y}, n, "boundary value moved");
                    break;
                }
            }
            if (!f) break;
        }
        if (f) f.samples = n;
        add(out, "lattice.sandwich", id, f, kExact);
    }
    return out;
}

std::vector<CheckReport> run_theorem_suite(const VerifyOptions& opts) {
    Facts facts(opts);
    Reports out;
    representability_checks(facts, out);
    semi_checks(facts, out);
    homogeneity_checks(facts, out);
    migrative_checks(facts, out);
    tnorm_checks(facts, out);
    real_checks(facts, out);
    weight_checks(facts, out);
    gowa_checks(facts, out);
    for (const auto& r : lattice_order_checks(opts)) out.push_back(r);
    for (auto order : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager}) {
        for (const auto& r : admissible_order_checks(order, opts)) out.push_back(r);
    }
    return out;
}

const std::vector<std::string>& theorem_check_ids() {
    static const std::vector<std::string> ids = {
        "representable.overlap",
        "representable.projection-rebuild",
        "representable.sp-projections",
        "representable.sp-necessary",
        "inclusion-monotone.characterization",
        "semi.commutative",
        "semi.zero",
        "semi.one",
        "semi.monotone",
        "semi.continuous",
        "semi.collapse",
        "semi.order-precondition",
        "self-duality.fails",
        "migrative.commutative",
        "homogeneous.zero",
        "homogeneous.idempotent",
        "migrative.idempotent-homogeneous",
        "migrative.neutral-homogeneous",
        "migrative.idempotent-iff-homogeneous",
        "migrative.generator-form",
        "migrative.characterization",
        "migrative.representable",
        "homogeneous.representatives",
        "uniqueness.canonical",
        "tnorm.idempotent-contractive",
        "tnorm.inclusion-branch",
        "tnorm.surjective-branch",
        "tnorm.associative-overlap",
        "real.lattice",
        "real.convex-sum",
        "weights.all-ones",
        "weights.max",
        "weights.tsum",
        "weights.dirac",
        "weights.geomean",
        "gowa.geomean-example",
        "gowa.dirac-example",
        "gowa.homogeneous-distributive",
        "gowa.idempotent",
        "gowa.aggregation-function",
        "gowa.projection",
        "gowa.arithmetic-mean",
        "lattice.join",
        "lattice.meet",
        "lattice.sandwich",
        "order.total",
        "order.antisymmetric",
        "order.transitive",
        "order.refines-product",
    };
    return ids;
}

std::vector<CheckReport> order_survey(const VerifyOptions& opts) {
    Reports out;
    const auto s = opts.grid.intervals();
    // The suite restricts migrative => o-representable to generator-built
    // overlaps; here the implication is sampled for every catalog member.
    for (const auto& id : builtin_iv_overlap_ids()) {
        const auto o = resolve_iv_overlap(id);
        Finding both = is_inclusion_monotonic(o, s);
        if (both) both = reconstructs_from_projections(o, s);
        add(out, "survey.migrative-representable", id, implication(check_migrative(o, s), both, "migrative"),
            kPolynomialTolerance);
    }
    for (auto order : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager}) {
        for (const auto& id : builtin_iv_overlap_ids()) {
            const auto o = resolve_iv_overlap(id);
            std::size_t n = 0;
            Finding f = Finding::pass(0);
            for (const auto& x : s) {
                for (const auto& y : s)
                    for (const auto& y2 : s) {
                        if (!f || compare(order, y, y2) >= 0) continue;
                        ++n;
                        if (compare(order, o(x, y), o(x, y2)) > 0) {
                            f = Finding::fail({x, y, y2}, n, "Y < Y' but O(X,Y) > O(X,Y')");
                        }
                    }
                if (!f) break;
            }
            if (f) f.samples = n;
            add(out, "survey.order-monotone", id + " " + std::string(to_string(order)), f, kExact);
        }
    }
    return out;
}

}  // namespace ivowa
