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
#include <span>
#include <string>
#include <vector>

#include "ivowa/interval.hpp"
#include "ivowa/iv_overlap.hpp"
#include "ivowa/iv_owa.hpp"
#include "ivowa/real_overlap.hpp"
#include "ivowa/sampling.hpp"

namespace ivowa {

enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Verdict v);

/// One named check against one target. `witness` is present iff the
/// verdict is Fail; `detail` is free text for humans and is not part of the
/// JSON record.
struct CheckReport {
    std::string check_id;
    std::string target;
    Verdict verdict = Verdict::Pass;
    std::optional<std::vector<Interval>> witness;
    std::size_t samples = 0;
    double tolerance = 0.0;
    std::string detail;

    static CheckReport from(std::string check_id, std::string target, const Finding& f, double tolerance);
    static CheckReport skipped(std::string check_id, std::string target, std::string reason);
};

/// Options shared by the suites.
struct VerifyOptions {
    SampleGrid grid{};
    double real_step = kRealGridStep;
};

/**
 * GO1-GO5 on the real grid. GO2 and GO3 are exact biconditionals visited
 * diagonal first from (1,1) downwards, then by growing |x-y|, so the witness
 * is the most symmetric violating point.
 */
std::vector<CheckReport> run_axiom_suite(const RealOverlap& g, const VerifyOptions& opts = {});

/// O1-O5 plus inclusion monotonicity on the interval sample. O5 is the jump
/// heuristic on degenerate inputs and on the endpoint parametrization.
std::vector<CheckReport> run_axiom_suite(const IVOverlap& o, const VerifyOptions& opts = {});

/// M1 (boundary) and M2 (monotone for the product order).
std::vector<CheckReport> run_axiom_suite(const IVAggregator& m, const VerifyOptions& opts = {});

/// Totality, antisymmetry and transitivity on `triples` random triples and
/// refinement of the product order on every comparable sampled pair.
std::vector<CheckReport> admissible_order_checks(AdmissibleOrder order, const VerifyOptions& opts = {},
                                                 std::size_t triples = 10000);

/// Join and meet of catalog overlaps are overlaps, and O^n < O < O^(1/n)
/// strictly at interior sampled points.
std::vector<CheckReport> lattice_order_checks(const VerifyOptions& opts = {});

/// One report id per implemented result over the shipped catalogs; includes
/// the lattice checks and the admissible-order laws.
std::vector<CheckReport> run_theorem_suite(const VerifyOptions& opts = {});

/// Every check id run_theorem_suite emits, in emission order.
const std::vector<std::string>& theorem_check_ids();

/// Informative checks outside the theorem suite: migrative => o-representable
/// over the whole catalog, and monotonicity of catalog overlaps for each
/// admissible order.
std::vector<CheckReport> order_survey(const VerifyOptions& opts = {});

/// True when no report failed (skipped reports do not count as failures).
bool all_passed(std::span<const CheckReport> reports);

std::string to_text(const CheckReport& r);
/// One JSON object with the fixed keys check_id, target, verdict, witness,
/// samples and tolerance; no trailing newline.
std::string to_json_line(const CheckReport& r);

}  // namespace ivowa
