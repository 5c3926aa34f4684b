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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivowa/interval.hpp"
#include "ivowa/iv_owa.hpp"

namespace ivowa {

/// Rows are alternatives, columns are criteria.
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<Interval>> cells;

    bool operator==(const DecisionMatrix&) const = default;
};

enum class MatrixFormat { Csv, Json };

/// Malformed matrix or config input. Row and column are 1-based data
/// positions (header excluded) when the error concerns a single cell.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::optional<std::size_t> row = std::nullopt,
                        std::optional<std::size_t> column = std::nullopt);

    std::optional<std::size_t> row() const { return row_; }
    std::optional<std::size_t> column() const { return column_; }

private:
    std::optional<std::size_t> row_;
    std::optional<std::size_t> column_;
};

/**
 * CSV: a header row whose first field names the label column and whose
 * remaining fields name the criteria; each following row is a label and
 * one cell per criterion. Cells are `[a,b]` (quoted, since they contain a
 * comma) or a bare number for a degenerate interval.
 */
DecisionMatrix parse_matrix_csv(std::string_view text);

/// {"criteria": [...], "alternatives": [{"label": ..., "cells": [[a,b], ...]}]}
/// A bare number is accepted for a degenerate cell.
DecisionMatrix parse_matrix_json(std::string_view text);

DecisionMatrix parse_matrix(std::string_view text, MatrixFormat format);

/// Chooses the format from the extension (.json, otherwise CSV).
DecisionMatrix load_matrix(const std::string& path);

/// Shortest round-trip formatting, so parsing the output gives back an
/// identical matrix.
std::string emit_csv(const DecisionMatrix& m);
std::string emit_json(const DecisionMatrix& m);

struct RunConfig {
    std::string aggregator;
    std::string overlap;
    WeightVector weights;
    AdmissibleOrder order = AdmissibleOrder::Lex1;
    bool normalize = false;
    std::optional<double> tolerance;
};

/// Keys: aggregator, overlap, weights (array of [a,b]), order (optional,
/// default lex1), normalize (optional, default false), tolerance (optional
/// override of the distributivity tolerance). Unknown keys are rejected.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);

struct RankedAlternative {
    std::size_t row = 0;
    std::string label;
    Interval value = Interval::zero();
    OrderKey key{};
};

struct AggregateResult {
    WeightVector weights;
    /// Descending under the configured order; ties keep matrix row order.
    std::vector<RankedAlternative> ranking;
};

/**
 * Applies IV-GOWA row-wise. Throws std::invalid_argument for unknown ids or
 * a weight count that differs from the criteria count, and
 * PreconditionError when the operator preconditions fail.
 */
AggregateResult aggregate(const RunConfig& config, const DecisionMatrix& matrix);

std::string read_file(const std::string& path);

}  // namespace ivowa
