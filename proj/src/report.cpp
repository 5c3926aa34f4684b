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

#include "ivowa/verify.hpp"
#include "json.hpp"

namespace ivowa {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

CheckReport CheckReport::from(std::string check_id, std::string target, const Finding& f, double tolerance) {
    CheckReport r;
    r.check_id = std::move(check_id);
    r.target = std::move(target);
    r.verdict = f.holds ? Verdict::Pass : Verdict::Fail;
    if (!f.holds) r.witness = f.witness.value_or(std::vector<Interval>{});
    r.samples = f.samples;
    r.tolerance = tolerance;
    r.detail = f.detail;
    return r;
}

CheckReport CheckReport::skipped(std::string check_id, std::string target, std::string reason) {
    CheckReport r;
    r.check_id = std::move(check_id);
    r.target = std::move(target);
    r.verdict = Verdict::Skipped;
    r.detail = std::move(reason);
    return r;
}

bool all_passed(std::span<const CheckReport> reports) {
    return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.verdict == Verdict::Fail; });
}

std::string to_text(const CheckReport& r) {
    std::string line = std::string(to_string(r.verdict)) + " " + r.check_id + " " + r.target +
                       " samples=" + std::to_string(r.samples) + " tolerance=" + format_real(r.tolerance);
    if (r.witness) {
        line += " witness=(";
        for (std::size_t i = 0; i < r.witness->size(); ++i) {
            if (i) line += ",";
            line += to_string((*r.witness)[i]);
        }
        line += ")";
    }
    if (!r.detail.empty()) line += " # " + r.detail;
    return line;
}

std::string to_json_line(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["target"] = r.target;
    j["verdict"] = std::string(to_string(r.verdict));
    if (r.witness) {
        auto w = nlohmann::ordered_json::array();
        for (const auto& x : *r.witness) w.push_back({x.lower(), x.upper()});
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["samples"] = r.samples;
    j["tolerance"] = r.tolerance;
    return j.dump();
}

}  // namespace ivowa
