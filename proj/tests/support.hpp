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

#include <string>
#include <vector>

#include "skewpbw/algebra.hpp"
#include "skewpbw/catalog.hpp"
#include "skewpbw/words.hpp"

namespace skewpbw::testing {

/// Every catalog entry with default parameters, plus weyl n=2 and weyl over GF(5).
std::vector<PresentationPtr> catalog_all();

/// Word of length 0..max_len mixing variables and (nonzero) scalars.
Word random_word(const Presentation& p, std::size_t max_len, Rng& rng, double scalar_share = 0.35);
/// Integer combination of 1..max_terms random words.
FreeElem random_free(const Presentation& p, std::size_t max_len, int max_terms, Rng& rng);
/// Random standard word: scalars then nondecreasing variables.
Word random_standard_word(const Presentation& p, std::size_t max_vars, Rng& rng);

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};
/// Runs a shell command, capturing stdout and stderr separately.
CommandResult run_command(const std::string& cmd);

}  // namespace skewpbw::testing
