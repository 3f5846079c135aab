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
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/coeff.hpp"

namespace skewpbw {

/// x_j x_i = c x_i x_j + sum_k a[k] x_k + d, stored for i < j.
struct Relation {
    CoeffElem c;
    CoeffElem d;
    std::vector<CoeffElem> a;
};

/// The parameter system (sigma_i, delta_i, c_ij, d_ij, a_ij^(k)) of a
/// candidate skew PBW extension sigma(R)<x_1, ..., x_n>.
///
/// Construction checks only shape: sizes, rings and names. Whether the
/// data actually defines an extension (units c_ij, derivation laws, overlap
/// conditions) is the job of the consistency checker.
class Presentation {
public:
    using PairKey = std::pair<std::size_t, std::size_t>;

    /// Pairs missing from `relations` commute: c = 1, d = 0, a = 0.
    Presentation(RingPtr ring, std::vector<std::string> var_names, std::vector<RingMap> sigma,
                 std::vector<SigmaDerivation> delta, std::map<PairKey, Relation> relations, std::string label = {});

    const RingPtr& ring() const { return ring_; }
    std::size_t n() const { return var_names_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::string& label() const { return label_; }

    const RingMap& sigma(std::size_t i) const { return sigma_.at(i); }
    const SigmaDerivation& delta(std::size_t i) const { return delta_.at(i); }
    /// Stored relation for i < j (0-based).
    const Relation& relation(std::size_t i, std::size_t j) const;
    const std::map<PairKey, Relation>& relations() const { return relations_; }

    /// Stable content hash; equal parameter systems hash equally.
    std::uint64_t id() const { return id_; }
    /// Text the hash is computed from; also handy in diagnostics.
    std::string canonical_text() const;

    CoeffElem zero() const { return CoeffElem(ring_); }
    CoeffElem one() const { return CoeffElem(ring_, 1L); }

private:
    RingPtr ring_;
    std::vector<std::string> var_names_;
    std::vector<RingMap> sigma_;
    std::vector<SigmaDerivation> delta_;
    std::map<PairKey, Relation> relations_;
    std::string label_;
    std::uint64_t id_ = 0;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Parameters for the reversed pair: x_i x_j = c_ji x_j x_i + sum_k a_ji^(k) x_k + d_ji, i < j.
struct DerivedParams {
    CoeffElem c;
    CoeffElem d;
    std::vector<CoeffElem> a;
};

/// c_ji = c_ij^-1, a_ji^(k) = -c_ji a_ij^(k), d_ji = -c_ji d_ij. Requires c_ij to be a unit.
DerivedParams derived_params(const Presentation& p, std::size_t j, std::size_t i);
/// The same identities applied to arbitrary (c, d, a); used for the round-trip property.
DerivedParams invert_params(const CoeffElem& c, const CoeffElem& d, const std::vector<CoeffElem>& a);

}  // namespace skewpbw
