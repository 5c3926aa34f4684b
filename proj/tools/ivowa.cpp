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

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivowa/decision.hpp"
#include "ivowa/error.hpp"
#include "ivowa/registry.hpp"
#include "ivowa/verify.hpp"
#include "json.hpp"

namespace {

using namespace ivowa;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string witness_text(const std::optional<std::vector<Interval>>& w) {
    if (!w) return {};
    std::string t = "(";
    for (std::size_t i = 0; i < w->size(); ++i) t += (i ? "," : "") + to_string((*w)[i]);
    return t + ")";
}

int run_aggregate(const std::string& config_path, const std::string& matrix_path, bool as_json) {
    RunConfig config;
    DecisionMatrix matrix;
    try {
        config = load_config(config_path);
        matrix = load_matrix(matrix_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    AggregateResult result;
    try {
        result = aggregate(config, matrix);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what();
        if (e.witness()) std::cerr << " witness=" << witness_text(e.witness());
        std::cerr << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (as_json) {
        nlohmann::ordered_json doc;
        doc["aggregator"] = config.aggregator;
        doc["overlap"] = config.overlap;
        doc["order"] = std::string(to_string(config.order));
        auto w = nlohmann::ordered_json::array();
        for (const auto& x : result.weights.weights) w.push_back({x.lower(), x.upper()});
        doc["weights"] = std::move(w);
        auto ranking = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < result.ranking.size(); ++i) {
            const auto& r = result.ranking[i];
            nlohmann::ordered_json item;
            item["rank"] = i + 1;
            item["label"] = r.label;
            item["value"] = {r.value.lower(), r.value.upper()};
            item["key"] = {r.key.primary, r.key.secondary};
            ranking.push_back(std::move(item));
        }
        doc["ranking"] = std::move(ranking);
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }

    std::cout << "rank\tlabel\tvalue\tkey(" << to_string(config.order) << ")\n";
    for (std::size_t i = 0; i < result.ranking.size(); ++i) {
        const auto& r = result.ranking[i];
        std::cout << i + 1 << "\t" << r.label << "\t" << to_string(r.value) << "\t(" << format_real(r.key.primary)
                  << "," << format_real(r.key.secondary) << ")\n";
    }
    return kOk;
}

// "tsum" or "tsum:n=3"; nullopt when the id is not an aggregator.
std::optional<IVAggregator> aggregator_target(const std::string& id) {
    std::string name = id;
    std::size_t n = 2;
    if (const auto colon = id.find(":n="); colon != std::string::npos) {
        name = id.substr(0, colon);
        n = static_cast<std::size_t>(parse_real(id.substr(colon + 3)));
    }
    for (const auto& m : builtin_aggregators(std::max<std::size_t>(n, 1))) {
        if (m.name == name) return m;
    }
    return std::nullopt;
}

int run_verify(const std::vector<std::string>& ids, double step, double real_step, bool as_json) {
    if (ids.empty()) {
        std::cerr << "error: verify needs at least one target id (see `ivowa catalog`)\n";
        return kUsage;
    }
    VerifyOptions opts;
    std::vector<CheckReport> reports;
    try {
        opts.grid.endpoint_step = step;
        opts.real_step = real_step;
        (void)unit_grid(step);
        (void)unit_grid(real_step);
        for (const auto& id : ids) {
            std::vector<CheckReport> r;
            if (id == "theorems") {
                r = run_theorem_suite(opts);
            } else if (id == "lattice") {
                r = lattice_order_checks(opts);
            } else if (id == "survey") {
                for (auto order : {AdmissibleOrder::Lex1, AdmissibleOrder::Lex2, AdmissibleOrder::XuYager})
                    for (auto& x : admissible_order_checks(order, opts)) r.push_back(std::move(x));
                for (auto& x : order_survey(opts)) r.push_back(std::move(x));
            } else {
                std::optional<RealOverlap> g;
                try {
                    g = find_overlap(id);
                } catch (const std::invalid_argument&) {
                }
                if (g) {
                    r = run_axiom_suite(*g, opts);
                } else if (auto m = aggregator_target(id)) {
                    r = run_axiom_suite(*m, opts);
                } else {
                    r = run_axiom_suite(resolve_iv_overlap(id), opts);
                }
            }
            for (auto& x : r) reports.push_back(std::move(x));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    for (const auto& r : reports) std::cout << (as_json ? to_json_line(r) : to_text(r)) << "\n";
    return all_passed(reports) ? kOk : kCheckFailed;
}

int run_catalog() {
    std::cout << "real overlaps:\n";
    for (const auto& g : builtin_overlaps()) {
        std::cout << "  " << g.name << (g.claims_overlap() ? "" : "  (not an overlap)") << "\n";
    }
    std::cout << "4-ary aggregation functions:\n";
    for (const auto& m : builtin_aggregators4()) std::cout << "  " << m.name << "\n";
    std::cout << "generators:\n  id\n  sqrt\n  quad\n  pow(K=[a,b])\n";
    std::cout << "interval aggregators (append :n=<k> for arity in verify):\n";
    for (const auto& m : builtin_aggregators(2)) std::cout << "  " << m.name << "\n";
    std::cout << "interval overlaps:\n";
    for (const auto& id : builtin_iv_overlap_ids()) std::cout << "  " << id << "\n";
    std::cout << "admissible orders:\n  lex1\n  lex2\n  xuyager\n";
    std::cout << "suites:\n  theorems\n  lattice\n  survey\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-valued overlap functions and IV-GOWA aggregation"};
    app.require_subcommand(1);

    std::string config_path, matrix_path;
    bool aggregate_json = false;
    auto* agg = app.add_subcommand("aggregate", "Rank the alternatives of a decision matrix");
    agg->add_option("--config", config_path, "JSON run configuration")->required();
    agg->add_option("--matrix", matrix_path, "CSV or JSON decision matrix")->required();
    agg->add_flag("--json", aggregate_json, "Emit JSON");

    std::vector<std::string> ids;
    double step = 0.1;
    double real_step = kRealGridStep;
    bool verify_json = false;
    auto* ver = app.add_subcommand("verify", "Run axiom and theorem checks");
    ver->add_option("ids", ids, "Operator ids or suites: theorems, lattice, survey");
    ver->add_option("--step", step, "Endpoint step of the interval sample")->capture_default_str();
    ver->add_option("--real-step", real_step, "Step of the real grid")->capture_default_str();
    ver->add_flag("--json", verify_json, "Emit JSON lines");

    app.add_subcommand("catalog", "List every operator id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (*agg) return run_aggregate(config_path, matrix_path, aggregate_json);
    if (*ver) return run_verify(ids, step, real_step, verify_json);
    return run_catalog();
}
