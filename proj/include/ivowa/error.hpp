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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivowa/interval.hpp"

namespace ivowa {

/// A constructor's sampled precondition failed. `condition()` names the
/// violated condition; `witness()` carries the offending tuple when known.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string condition, const std::string& message,
                      std::optional<std::vector<Interval>> witness = std::nullopt)
        : std::invalid_argument(condition + ": " + message),
          condition_(std::move(condition)),
          witness_(std::move(witness)) {}

    const std::string& condition() const { return condition_; }
    const std::optional<std::vector<Interval>>& witness() const { return witness_; }

private:
    std::string condition_;
    std::optional<std::vector<Interval>> witness_;
};

}  // namespace ivowa
