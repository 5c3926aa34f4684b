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

#include <string>
#include <vector>

#include "ivowa/iv_overlap.hpp"

namespace ivowa {

/**
 * Structured interval overlap ids:
 *
 *   rep(G1,G2)              representable from two real overlaps
 *   semi(M1,M2,G)           semi-representable, one G for all eight slots
 *   semi(M1,M2,G1,...,G8)
 *   mig(g)                  g(XY) for a generator id, sqrt, quad, pow(K=[a,b])
 *   canonical(K=[a,b])      (XY)^(K/[2,2])
 *   midpoint
 *   pow(O,n=k), root(O,n=k)
 *   join(O1,O2), meet(O1,O2)
 *
 * Every IVOverlap::name() produced by the library parses back to an
 * equivalent operator.
 */
IVOverlap resolve_iv_overlap(const std::string& id);

/// Ids of the shipped interval overlap catalog. All are interval-valued
/// overlaps; `midpoint` is the one that is not o-representable.
const std::vector<std::string>& builtin_iv_overlap_ids();

/// Splits at commas outside parentheses and brackets.
std::vector<std::string> split_top_level(const std::string& text);

}  // namespace ivowa
