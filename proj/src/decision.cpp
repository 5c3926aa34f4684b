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

#include "ivowa/decision.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ivowa/registry.hpp"
#include "json.hpp"

namespace ivowa {

namespace {

using json = nlohmann::json;

std::string position(std::optional<std::size_t> row, std::optional<std::size_t> column) {
    if (row && column) return "row " + std::to_string(*row) + ", column " + std::to_string(*column) + ": ";
    if (row) return "row " + std::to_string(*row) + ": ";
    return {};
}

// RFC 4180 records; a quoted field may contain commas, doubled quotes and
// line breaks.
std::vector<std::vector<std::string>> csv_records(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty()) throw ParseError("line " + std::to_string(line) + ": stray quote");
                quoted = true;
                any = true;
                break;
            case ',':
                record.push_back(std::move(field));
                field.clear();
                any = true;
                break;
            case '\r':
                break;
            case '\n':
                if (any || !field.empty()) {
                    record.push_back(std::move(field));
                    records.push_back(std::move(record));
                }
                field.clear();
                record.clear();
                any = false;
                ++line;
                break;
            default:
                field.push_back(c);
                any = true;
        }
    }
    if (quoted) throw ParseError("line " + std::to_string(line) + ": unterminated quote");
    if (any || !field.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

std::string cell_text(const Interval& x) {
    if (x.is_degenerate()) return format_real(x.lower());
    return "\"" + to_string(x) + "\"";
}

Interval json_interval(const json& j, std::optional<std::size_t> row, std::optional<std::size_t> column) {
    try {
        if (j.is_number()) {
            const double v = j.get<double>();
            return Interval(v, v);
        }
        if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
            return Interval(j[0].get<double>(), j[1].get<double>());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(position(row, column) + e.what(), row, column);
    }
    throw ParseError(position(row, column) + "expected [a,b] or a number, got " + j.dump(), row, column);
}

}  // namespace

ParseError::ParseError(const std::string& message, std::optional<std::size_t> row, std::optional<std::size_t> column)
    : std::runtime_error(message), row_(row), column_(column) {}

DecisionMatrix parse_matrix_csv(std::string_view text) {
    const auto records = csv_records(text);
    if (records.empty()) throw ParseError("empty matrix: a header row is required");
    const auto& header = records.front();
    if (header.size() < 2) throw ParseError("header needs a label column and at least one criterion");

    DecisionMatrix m;
    m.criteria.assign(header.begin() + 1, header.end());
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() != header.size()) {
            throw ParseError(position(r, std::nullopt) + "expected " + std::to_string(header.size()) +
                                 " fields, found " + std::to_string(rec.size()),
                             r);
        }
        m.alternatives.push_back(rec[0]);
        std::vector<Interval> row;
        for (std::size_t c = 1; c < rec.size(); ++c) {
            try {
                row.push_back(parse_interval(rec[c]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(position(r, c) + e.what(), r, c);
            }
        }
        m.cells.push_back(std::move(row));
    }
    if (m.alternatives.empty()) throw ParseError("matrix has no alternatives");
    return m;
}

DecisionMatrix parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("criteria") || !doc.contains("alternatives")) {
        throw ParseError("matrix JSON needs \"criteria\" and \"alternatives\"");
    }
    DecisionMatrix m;
    for (const auto& c : doc["criteria"]) {
        if (!c.is_string()) throw ParseError("criteria must be strings");
        m.criteria.push_back(c.get<std::string>());
    }
    if (m.criteria.empty()) throw ParseError("matrix has no criteria");
    std::size_t r = 0;
    for (const auto& alt : doc["alternatives"]) {
        ++r;
        if (!alt.is_object() || !alt.contains("label") || !alt["label"].is_string() || !alt.contains("cells") ||
            !alt["cells"].is_array()) {
            throw ParseError(position(r, std::nullopt) + "needs a string \"label\" and a \"cells\" array", r);
        }
        const auto& cells = alt["cells"];
        if (cells.size() != m.criteria.size()) {
            throw ParseError(position(r, std::nullopt) + "expected " + std::to_string(m.criteria.size()) +
                                 " cells, found " + std::to_string(cells.size()),
                             r);
        }
        m.alternatives.push_back(alt["label"].get<std::string>());
        std::vector<Interval> row;
        for (std::size_t c = 0; c < cells.size(); ++c) row.push_back(json_interval(cells[c], r, c + 1));
        m.cells.push_back(std::move(row));
    }
    if (m.alternatives.empty()) throw ParseError("matrix has no alternatives");
    return m;
}

DecisionMatrix parse_matrix(std::string_view text, MatrixFormat format) {
    return format == MatrixFormat::Json ? parse_matrix_json(text) : parse_matrix_csv(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DecisionMatrix load_matrix(const std::string& path) {
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return parse_matrix(read_file(path), is_json ? MatrixFormat::Json : MatrixFormat::Csv);
}

std::string emit_csv(const DecisionMatrix& m) {
    std::string out = "alternative";
    for (const auto& c : m.criteria) out += "," + csv_field(c);
    out += "\n";
    for (std::size_t r = 0; r < m.alternatives.size(); ++r) {
        out += csv_field(m.alternatives[r]);
        for (const auto& x : m.cells[r]) out += "," + cell_text(x);
        out += "\n";
    }
    return out;
}

std::string emit_json(const DecisionMatrix& m) {
    nlohmann::ordered_json doc;
    doc["criteria"] = m.criteria;
    auto alts = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.alternatives.size(); ++r) {
        nlohmann::ordered_json a;
        a["label"] = m.alternatives[r];
        auto cells = nlohmann::ordered_json::array();
        for (const auto& x : m.cells[r]) cells.push_back({x.lower(), x.upper()});
        a["cells"] = std::move(cells);
        alts.push_back(std::move(a));
    }
    doc["alternatives"] = std::move(alts);
    return doc.dump(2) + "\n";
}

RunConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed config JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "aggregator" && key != "overlap" && key != "weights" && key != "order" && key != "normalize" &&
            key != "tolerance") {
            throw ParseError("unknown config key '" + key + "'");
        }
    }
    RunConfig cfg;
    try {
        if (!doc.contains("aggregator") || !doc.contains("overlap") || !doc.contains("weights")) {
            throw ParseError("config needs \"aggregator\", \"overlap\" and \"weights\"");
        }
        cfg.aggregator = doc.at("aggregator").get<std::string>();
        cfg.overlap = doc.at("overlap").get<std::string>();
        if (!doc["weights"].is_array() || doc["weights"].empty()) throw ParseError("weights must be a non-empty array");
        for (std::size_t i = 0; i < doc["weights"].size(); ++i) {
            cfg.weights.weights.push_back(json_interval(doc["weights"][i], std::nullopt, std::nullopt));
        }
        if (doc.contains("order")) cfg.order = parse_order(doc["order"].get<std::string>());
        if (doc.contains("normalize")) cfg.normalize = doc["normalize"].get<bool>();
        if (doc.contains("tolerance")) {
            const double t = doc["tolerance"].get<double>();
            if (!(t >= 0.0)) throw ParseError("tolerance must be non-negative");
            cfg.tolerance = t;
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

AggregateResult aggregate(const RunConfig& config, const DecisionMatrix& matrix) {
    const std::size_t n = matrix.criteria.size();
    if (config.weights.size() != n) {
        throw std::invalid_argument("config has " + std::to_string(config.weights.size()) + " weights but the matrix has " +
                                    std::to_string(n) + " criteria");
    }
    const auto m = find_iv_aggregator(config.aggregator, n, config.order);
    const auto o = resolve_iv_overlap(config.overlap);
    const WeightVector w = config.normalize ? normalize_weights(m, config.weights) : config.weights;
    const GowaOperator op(GowaBasis::validate(m, o, SampleGrid{}, config.tolerance.value_or(kRootTolerance)), w,
                          config.order);

    AggregateResult result{w, {}};
    std::vector<Interval> values;
    for (const auto& row : matrix.cells) values.push_back(op(row));
    for (std::size_t r : sort_descending(config.order, values)) {
        result.ranking.push_back({r, matrix.alternatives[r], values[r], order_key(config.order, values[r])});
    }
    return result;
}

}  // namespace ivowa
