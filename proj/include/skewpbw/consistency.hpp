/*
   Copyright 2026 The skewpbw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "skewpbw/poly.hpp"
#include "skewpbw/presentation.hpp"

namespace skewpbw {

enum class CheckMode { Structural, Sampled };
const char* to_string(CheckMode m);

struct UnitCheck {
    std::size_t i, j;  // 0-based, i < j
    CoeffElem c;
    bool pass;
};

/// Condition (1) for one variable: sigma_i an endomorphism, delta_i a
/// sigma_i-derivation, sigma_i(r) != 0 for r != 0.
struct Condition1Item {
    std::size_t var;
    bool endomorphism_ok = true;
    bool derivation_ok = true;
    CheckMode derivation_mode = CheckMode::Structural;
    bool nonzero_ok = true;
    CheckMode nonzero_mode = CheckMode::Structural;
    /// Injectivity of sigma_i, reported on its own line. For an additive map
    /// it coincides with nonzero_ok; the label records how it was decided.
    std::string injectivity;
    std::string witness;  // first failure, empty when passing

    bool pass() const { return endomorphism_ok && derivation_ok && nonzero_ok; }
};

/// h(x_j x_i r) == h(p(x_j x_i) r).
struct Condition2Item {
    std::size_t i, j;
    CoeffElem r;
    std::string origin;  // "one", "generator", "random", "product"
    bool pass;
    Poly lhs, rhs;
};

/// h(x_k x_j x_i) == h(p(x_k x_j) x_i), i < j < k.
struct Condition3Item {
    std::size_t i, j, k;
    bool pass;
    Poly lhs, rhs;
};

struct ConsistencyReport {
    std::uint64_t presentation_id = 0;
    std::vector<UnitCheck> units;
    std::vector<Condition1Item> condition1;
    std::vector<Condition2Item> condition2;
    CheckMode condition2_mode = CheckMode::Sampled;
    std::vector<Condition3Item> condition3;
    bool overall = false;

    bool units_pass() const;
    bool condition1_pass() const;
    bool condition2_pass() const;
    bool condition3_pass() const;
    void finalize();
    /// Failing (i, j, k) triples of condition 3, 0-based.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> failing_triples() const;

    /// Human-readable summary; lists every failure with its witness.
    std::string to_text() const;
};

struct CheckOptions {
    int samples = 64;
    std::uint64_t seed = 0;
    int degree_bound = 2;
};

ConsistencyReport validate_structure(const PresentationPtr& p, const CheckOptions& opts = {});
Condition2Item check_condition2(const PresentationPtr& p, std::size_t i, std::size_t j, const CoeffElem& r);
Condition3Item check_condition3(const PresentationPtr& p, std::size_t i, std::size_t j, std::size_t k);
ConsistencyReport check_all(const PresentationPtr& p, const CheckOptions& opts = {});

}  // namespace skewpbw
