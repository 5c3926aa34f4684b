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
#include <set>
#include <string>

#include "doctest.h"
#include "ivowa/registry.hpp"
#include "ivowa/verify.hpp"
#include "json.hpp"

using namespace ivowa;

namespace {

const std::vector<CheckReport>& theorem_reports() {
    static const auto reports = run_theorem_suite();
    return reports;
}

std::vector<const CheckReport*> with_verdict(const std::vector<CheckReport>& rs, Verdict v) {
    std::vector<const CheckReport*> out;
    for (const auto& r : rs)
        if (r.verdict == v) out.push_back(&r);
    return out;
}

}  // namespace

TEST_CASE("real axiom suite") {
    for (const auto& g : builtin_overlaps()) {
        CAPTURE(g.name);
        const auto rs = run_axiom_suite(g);
        REQUIRE(rs.size() == 5);
        if (g.name != "lukasiewicz") {
            CHECK(all_passed(rs));
            continue;
        }
        CHECK(rs[1].check_id == "GO2");
        CHECK(rs[1].verdict == Verdict::Fail);
        CHECK(*rs[1].witness == std::vector<Interval>{Interval(0.5, 0.5), Interval(0.5, 0.5)});
        CHECK(rs[2].verdict == Verdict::Pass);
    }
}

TEST_CASE("interval axiom suite over the catalog") {
    for (const auto& id : builtin_iv_overlap_ids()) {
        CAPTURE(id);
        const auto rs = run_axiom_suite(resolve_iv_overlap(id));
        REQUIRE(rs.size() == 6);
        for (std::size_t i = 0; i < 5; ++i) CHECK(rs[i].verdict == Verdict::Pass);
        const bool inclusion = rs[5].verdict == Verdict::Pass;
        CHECK(inclusion == (id != "midpoint" && id != "semi(prod123,max,product)"));
    }
}

TEST_CASE("aggregator axioms") {
    for (std::size_t n : {1, 2, 3}) {
        for (const auto& m : builtin_aggregators(n)) {
            CAPTURE(m.name);
            CHECK(all_passed(run_axiom_suite(m)));
        }
    }
}

TEST_CASE("admissible order laws") {
    for (auto ord : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager}) {
        const auto rs = admissible_order_checks(ord);
        REQUIRE(rs.size() == 4);
        CHECK(all_passed(rs));
    }
}

TEST_CASE("theorem suite emits exactly the documented ids") {
    const auto& rs = theorem_reports();
    std::vector<std::string> seen;
    for (const auto& r : rs)
        if (std::find(seen.begin(), seen.end(), r.check_id) == seen.end()) seen.push_back(r.check_id);
    CHECK(seen == theorem_check_ids());
}

TEST_CASE("theorem suite outcome") {
    const auto& rs = theorem_reports();
    // Dirac fails distributivity for every catalog overlap; nothing else fails.
    const auto failed = with_verdict(rs, Verdict::Fail);
    CHECK(failed.size() == builtin_iv_overlap_ids().size());
    for (const auto* r : failed) {
        CAPTURE(r->target);
        CHECK(r->check_id == "gowa.dirac-example");
        REQUIRE(r->witness.has_value());
        CHECK(r->witness->size() == 3);
    }
    const auto skipped = with_verdict(rs, Verdict::Skipped);
    REQUIRE(skipped.size() == 1);
    CHECK(skipped[0]->check_id == "tnorm.surjective-branch");
}

TEST_CASE("survey reports the migrative overlap that is not representable") {
    const auto rs = order_survey();
    std::set<std::string> targets;
    for (const auto& r : rs)
        if (r.check_id == "survey.migrative-representable" && r.verdict == Verdict::Fail) targets.insert(r.target);
    CHECK(targets == std::set<std::string>{"semi(prod123,max,product)"});
}

TEST_CASE("report formats") {
    const auto pass = CheckReport::from("O1", "midpoint", Finding::pass(12), 0);
    CHECK(to_text(pass) == "pass O1 midpoint samples=12 tolerance=0");
    CHECK(to_json_line(pass) ==
          R"({"check_id":"O1","target":"midpoint","verdict":"pass","witness":null,"samples":12,"tolerance":0.0})");

    const auto fail = CheckReport::from("inclusion-monotone", "midpoint",
                                        Finding::fail({Interval::one(), Interval(0, 0.5)}, 3, "why"), 1e-12);
    CHECK(to_text(fail) ==
          "fail inclusion-monotone midpoint samples=3 tolerance=1e-12 witness=([1,1],[0,0.5]) # why");
    const auto j = nlohmann::json::parse(to_json_line(fail));
    CHECK(j["verdict"] == "fail");
    CHECK(j["witness"] == nlohmann::json::parse("[[1.0,1.0],[0.0,0.5]]"));
    CHECK(j["tolerance"] == 1e-12);
    CHECK_FALSE(j.contains("detail"));

    const auto skip = CheckReport::skipped("x", "y", "reason");
    CHECK(to_string(skip.verdict) == "skipped");
    const std::vector<CheckReport> mixed{pass, skip};
    CHECK(all_passed(mixed));
}
