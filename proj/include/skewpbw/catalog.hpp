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

#include <map>
#include <string>
#include <vector>

#include "skewpbw/presentation.hpp"

namespace skewpbw {

/// Structure constants of a finite-dimensional Lie algebra over QQ or GF(p),
/// antisymmetric by construction: only a < b is stored, with
/// [x_b, x_a] = sum_k entry[k] x_k (the a_ab^(k) of the enveloping-algebra relation).
class StructureConstants {
public:
    StructureConstants(RingPtr field, std::size_t n);

    const RingPtr& field() const { return field_; }
    std::size_t n() const { return n_; }

    /// Set [x_a, x_b] = value (0-based, a != b); [x_b, x_a] becomes -value.
    void set_bracket(std::size_t a, std::size_t b, const std::vector<CoeffElem>& value);
    void set_bracket(std::size_t a, std::size_t b, const std::vector<long>& value);
    /// [x_a, x_b] as a coefficient vector; zero for a == b.
    std::vector<CoeffElem> bracket(std::size_t a, std::size_t b) const;
    /// Bilinear extension to arbitrary vectors.
    std::vector<CoeffElem> bracket(const std::vector<CoeffElem>& u, const std::vector<CoeffElem>& v) const;

private:
    RingPtr field_;
    std::size_t n_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<CoeffElem>> entries_;
};

/// sigma = id, delta = 0, c = 1, d = 0, a = structure constants.
Presentation lie_presentation(const StructureConstants& sc, std::vector<std::string> var_names = {},
                              std::string label = {});

/// [[x_j,x_i],x_k] + [x_j,[x_k,x_i]] + [[x_k,x_j],x_i], expanded from the
/// structure constants alone.
std::vector<CoeffElem> jacobiator(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k);

StructureConstants sl2_constants(const RingPtr& field);
StructureConstants heisenberg_constants(const RingPtr& field);
StructureConstants so3_constants(const RingPtr& field);

namespace catalog {

using Params = std::map<std::string, std::string>;

struct Entry {
    std::string name;
    std::string description;
    std::vector<std::string> params;  // accepted parameter names
};

std::vector<Entry> entries();
std::vector<std::string> list();
/// Throws Error for unknown names, unknown parameters or bad values.
PresentationPtr get(const std::string& name, const Params& params = {});

/// "weyl3" -> ("weyl", {n: 3}); "name?k=v,k2=v2" sets parameters; other
/// names pass through.
PresentationPtr resolve(const std::string& spec);

}  // namespace catalog

}  // namespace skewpbw
