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

#include "ivowa/registry.hpp"

#include <array>
#include <stdexcept>

namespace ivowa {

namespace {

bool unwrap(const std::string& id, const std::string& head, std::string& body) {
    const std::string open = head + "(";
    if (id.rfind(open, 0) != 0 || id.back() != ')') return false;
    body = id.substr(open.size(), id.size() - open.size() - 1);
    return true;
}

std::vector<std::string> expect_args(const std::string& id, const std::string& body, std::size_t n) {
    auto args = split_top_level(body);
    if (args.size() != n) {
        throw std::invalid_argument("'" + id + "' expects " + std::to_string(n) + " arguments");
    }
    return args;
}

int parse_power(const std::string& id, const std::string& arg) {
    if (arg.rfind("n=", 0) != 0) throw std::invalid_argument("'" + id + "' needs n=<integer>");
    const double n = parse_real(arg.substr(2));
    if (n != static_cast<int>(n)) throw std::invalid_argument("'" + id + "': n must be an integer");
    return static_cast<int>(n);
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced brackets in '" + text + "'");
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced brackets in '" + text + "'");
    out.push_back(current);
    return out;
}

IVOverlap resolve_iv_overlap(const std::string& id) {
    std::string body;
    if (id == "midpoint") return midpoint_example();
    if (unwrap(id, "rep", body)) {
        const auto a = expect_args(id, body, 2);
        return representable(find_overlap(a[0]), find_overlap(a[1]));
    }
    if (unwrap(id, "semi", body)) {
        const auto a = split_top_level(body);
        if (a.size() != 3 && a.size() != 10) {
            throw std::invalid_argument("'" + id + "' expects 3 or 10 arguments");
        }
        std::array<RealOverlap, 8> g;
        for (std::size_t i = 0; i < 8; ++i) g[i] = find_overlap(a.size() == 3 ? a[2] : a[2 + i]);
        return semi_representable(find_aggregator4(a[0]), find_aggregator4(a[1]), g);
    }
    if (unwrap(id, "mig", body)) return migrative_from_generator(find_generator(body));
    if (unwrap(id, "canonical", body)) {
        if (body.rfind("K=", 0) != 0) throw std::invalid_argument("'" + id + "' needs K=[a,b]");
        return migrative_canonical(parse_exponent(body.substr(2)));
    }
    if (unwrap(id, "pow", body) || unwrap(id, "root", body)) {
        const auto a = expect_args(id, body, 2);
        const auto dir = id.rfind("root(", 0) == 0 ? PowerDirection::Root : PowerDirection::Power;
        return power_transform(resolve_iv_overlap(a[0]), parse_power(id, a[1]), dir);
    }
    if (unwrap(id, "join", body)) {
        const auto a = expect_args(id, body, 2);
        return iv_join(resolve_iv_overlap(a[0]), resolve_iv_overlap(a[1]));
    }
    if (unwrap(id, "meet", body)) {
        const auto a = expect_args(id, body, 2);
        return iv_meet(resolve_iv_overlap(a[0]), resolve_iv_overlap(a[1]));
    }
    throw std::invalid_argument("unknown interval overlap '" + id + "'");
}

const std::vector<std::string>& builtin_iv_overlap_ids() {
    static const std::vector<std::string> ids = {
        "rep(product,product)",
        "rep(min,min)",
        "rep(product,min)",
        "rep(minmax:p=2,minmax:p=2)",
        "rep(lukasiewicz,min)",
        "mig(id)",
        "mig(sqrt)",
        "mig(quad)",
        "canonical(K=[1,1])",
        "canonical(K=[1,2])",
        "canonical(K=[2,2])",
        "midpoint",
        "pow(rep(product,product),n=2)",
        "root(rep(product,product),n=2)",
        "semi(prod123,max,product)",
        "join(rep(product,product),rep(min,min))",
        "meet(rep(product,product),rep(min,min))",
    };
    return ids;
}

}  // namespace ivowa
