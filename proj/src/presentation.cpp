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

#include "skewpbw/presentation.hpp"

#include <set>

namespace skewpbw {

Presentation::Presentation(RingPtr ring, std::vector<std::string> var_names, std::vector<RingMap> sigma,
                           std::vector<SigmaDerivation> delta, std::map<PairKey, Relation> relations,
                           std::string label)
    : ring_(std::move(ring)),
      var_names_(std::move(var_names)),
      sigma_(std::move(sigma)),
      delta_(std::move(delta)),
      label_(std::move(label)) {
    const std::size_t n = var_names_.size();
    if (n == 0) throw Error("presentation needs at least one variable");
    std::set<std::string> names;
    for (const auto& v : var_names_) {
        if (v.empty()) throw Error("empty variable name");
        if (!names.insert(v).second) throw Error("duplicate variable name '" + v + "'");
        if (ring_->gen_index(v)) throw Error("variable name '" + v + "' clashes with a coefficient generator");
    }
    if (sigma_.size() != n) throw Error("need one sigma per variable");
    if (delta_.size() != n) throw Error("need one delta per variable");
    for (std::size_t i = 0; i < n; ++i) {
        if (!same_ring(sigma_[i].source(), ring_) || !same_ring(sigma_[i].target(), ring_))
            throw RingMismatch("sigma_" + std::to_string(i + 1) + " is not an endomorphism of " + ring_->to_string());
        if (!same_ring(delta_[i].twist().source(), ring_))
            throw RingMismatch("delta_" + std::to_string(i + 1) + " is not defined on " + ring_->to_string());
        for (std::size_t g = 0; g < ring_->num_gens(); ++g)
            if (delta_[i].twist().image(g) != sigma_[i].image(g))
                throw Error("delta_" + std::to_string(i + 1) + " must be twisted by sigma_" + std::to_string(i + 1));
    }

    for (auto& [key, rel] : relations) {
        const auto [i, j] = key;
        if (!(i < j && j < n))
            throw Error("relation indices must satisfy 1 <= i < j <= n, got (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")");
        if (rel.a.size() != n) throw Error("relation a-vector must have length n");
        auto check = [&](const CoeffElem& e) {
            if (!same_ring(e.ring(), ring_)) throw RingMismatch("relation parameter not in " + ring_->to_string());
        };
        check(rel.c);
        check(rel.d);
        for (const auto& e : rel.a) check(e);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto it = relations.find({i, j});
            if (it != relations.end())
                relations_.emplace(it->first, std::move(it->second));
            else
                relations_.emplace(PairKey{i, j}, Relation{one(), zero(), std::vector<CoeffElem>(n, zero())});
        }
    id_ = fnv1a64(canonical_text());
}

const Relation& Presentation::relation(std::size_t i, std::size_t j) const {
    auto it = relations_.find({i, j});
    if (it == relations_.end())
        throw Error("no stored relation for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "); need i < j");
    return it->second;
}

std::string Presentation::canonical_text() const {
    std::string s = "ring " + ring_->to_string() + "\nvars";
    for (const auto& v : var_names_) s += " " + v;
    s += "\n";
    for (std::size_t i = 0; i < n(); ++i) {
        s += "sigma" + std::to_string(i + 1);
        for (const auto& img : sigma_[i].images()) s += " [" + img.to_string() + "]";
        s += "\ndelta" + std::to_string(i + 1);
        for (const auto& img : delta_[i].images()) s += " [" + img.to_string() + "]";
        s += "\n";
    }
    for (const auto& [key, rel] : relations_) {
        s += "rel " + std::to_string(key.first + 1) + " " + std::to_string(key.second + 1) + " c[" +
             rel.c.to_string() + "] d[" + rel.d.to_string() + "] a";
        for (const auto& e : rel.a) s += " [" + e.to_string() + "]";
        s += "\n";
    }
    return s;
}

DerivedParams invert_params(const CoeffElem& c, const CoeffElem& d, const std::vector<CoeffElem>& a) {
    DerivedParams out{c.unit_inverse(), d, {}};
    out.d = -(out.c * d);
    out.a.reserve(a.size());
    for (const auto& e : a) out.a.push_back(-(out.c * e));
    return out;
}

DerivedParams derived_params(const Presentation& p, std::size_t j, std::size_t i) {
    if (!(i < j)) throw Error("derived_params expects j > i");
    const Relation& rel = p.relation(i, j);
    return invert_params(rel.c, rel.d, rel.a);
}

}  // namespace skewpbw
