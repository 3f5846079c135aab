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

#include <json.hpp>

#include <string>

#include "skewpbw/consistency.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/universal.hpp"

namespace skewpbw {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class FormatError : public Error {
public:
    using Error::Error;
};

/// {"kind": "rationals" | "prime_field" | "poly" | "laurent", "p": P,
///  "vars": [...], "base": {...}}. A Laurent ring has exactly one var.
RingPtr ring_from_json(const Json& j);
Json ring_to_json(const CoeffRing& ring);

/// {"ring", "vars", "sigma", "delta", "relations", "label"}. sigma and delta
/// hold one object per variable mapping generator names to expressions;
/// missing generators keep sigma(g) = g and delta(g) = 0. Relations use
/// 1-based i < j; missing c, d, a default to 1, 0, 0 and missing pairs
/// commute. Unknown keys are rejected at every level.
PresentationPtr presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p);

/// "catalog:NAME" (NAME as accepted by catalog::resolve) or a JSON file path.
PresentationPtr load_presentation(const std::string& ref);

/// {"source", "target", "phi", "y"}: source and target are inline
/// presentation objects or references for load_presentation (relative paths
/// resolve against base_dir); phi maps source generators to expressions over
/// the target ring, defaulting to the same-named target generator; y lists
/// one expression over the target per source variable.
HomSpec homspec_from_json(const Json& j, const std::string& base_dir = ".");
HomSpec load_homspec(const std::string& path);

Json report_to_json(const ConsistencyReport& r);
Json hom_report_to_json(const HomReport& r);

/// Reads a whole file; throws FormatError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace skewpbw
