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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/algebra.hpp"
#include "skewpbw/consistency.hpp"

namespace skewpbw {

/// Data for a ring homomorphism out of A = sigma(R)<x_1..x_n>: a coefficient
/// map phi: R -> R' (landing in the constants of B) and images y_1..y_n in B.
struct HomSpec {
    HomSpec(PresentationPtr source, PresentationPtr target, RingMap phi, std::vector<Poly> y);

    /// phi = identity on R, y_i = x_i.
    static HomSpec identity(const PresentationPtr& p);

    PresentationPtr source;
    PresentationPtr target;
    RingMap phi;
    std::vector<Poly> y;
    /// Shared product engine of B; keeps its memo across calls.
    std::shared_ptr<const Algebra> target_algebra;
};

/// y_i phi(r) == phi(sigma_i(r)) y_i + phi(delta_i(r)).
struct HomCondition1Item {
    std::size_t var;
    CoeffElem r;
    std::string origin;  // "one", "generator", "random"
    bool pass;
    Poly lhs, rhs;
};

/// y_j y_i == phi(c_ij) y_i y_j + sum_k phi(a_ij^(k)) y_k + phi(d_ij), i < j.
struct HomCondition2Item {
    std::size_t i, j;
    bool pass;
    Poly lhs, rhs;
};

struct HomReport {
    bool source_consistent = false;
    bool target_consistent = false;
    std::vector<HomCondition1Item> condition1;
    std::vector<HomCondition2Item> condition2;
    bool overall = false;

    bool condition1_pass() const;
    bool condition2_pass() const;
    std::string to_text() const;
};

HomReport check_hom_conditions(const HomSpec& s, int samples = 64, std::uint64_t seed = 0);

/// phi~(sum r x^alpha) = sum phi(r) y^alpha, y^alpha = y_1^a1 * ... * y_n^an in B.
Poly extend_hom(const HomSpec& s, const Poly& f);

struct InverseReport {
    bool pass = false;
    /// First element on which a round trip failed, with its image.
    std::string witness;
};

/// back o forward = id_A and forward o back = id_B on the coefficient
/// generators, the variables, and `samples` random elements of each side.
InverseReport verify_mutual_inverse(const HomSpec& forward, const HomSpec& back, int samples = 32,
                                    std::uint64_t seed = 0);

struct BasisImageReport {
    std::size_t monomials = 0;  ///< standard monomials of degree <= D in A
    std::size_t rank = 0;       ///< rank of their images over Frac(R')
    bool independent() const { return rank == monomials; }
};

/// Rank of the images y^alpha, |alpha| <= max_degree, as coefficient vectors
/// over the standard basis of B. Fraction-free elimination over R'.
BasisImageReport basis_image_rank(const HomSpec& s, std::uint32_t max_degree);

}  // namespace skewpbw
