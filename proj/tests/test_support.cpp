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

#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace skewpbw::testing {

std::vector<PresentationPtr> catalog_all() {
    std::vector<PresentationPtr> out;
    for (const auto& name : catalog::list()) out.push_back(catalog::get(name));
    out.push_back(catalog::get("weyl", {{"n", "2"}}));
    out.push_back(catalog::get("weyl", {{"p", "5"}}));
    return out;
}

Word random_word(const Presentation& p, std::size_t max_len, Rng& rng, double scalar_share) {
    const auto len = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len)));
    const auto threshold = static_cast<std::uint32_t>(scalar_share * 4294967295.0);
    Word w;
    for (std::size_t k = 0; k < len; ++k) {
        if (p.n() == 0 || rng.next_u32() < threshold)
            w.emplace_back(random_nonzero_elem(p.ring(), 1, rng));
        else
            w.emplace_back(Var{static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.n()) - 1))});
    }
    return w;
}

FreeElem random_free(const Presentation& p, std::size_t max_len, int max_terms, Rng& rng) {
    FreeElem e;
    const auto terms = rng.uniform(1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) e.add_term(random_word(p, max_len, rng), rng.uniform(-3, 3));
    return e;
}

Word random_standard_word(const Presentation& p, std::size_t max_vars, Rng& rng) {
    Word w;
    const auto scalars = rng.uniform(0, 2);
    for (std::int64_t k = 0; k < scalars; ++k) w.emplace_back(random_nonzero_elem(p.ring(), 1, rng));
    std::vector<std::size_t> vars;
    const auto len = rng.uniform(0, static_cast<std::int64_t>(max_vars));
    for (std::int64_t k = 0; k < len && p.n() > 0; ++k)
        vars.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.n()) - 1)));
    std::sort(vars.begin(), vars.end());
    for (auto v : vars) w.emplace_back(Var{v});
    return w;
}

CommandResult run_command(const std::string& cmd) {
    const auto err_path = std::filesystem::temp_directory_path() /
                          ("skewpbw_stderr_" + std::to_string(::getpid()) + ".txt");
    CommandResult res;
    FILE* pipe = ::popen((cmd + " 2>" + err_path.string()).c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    res.err = ss.str();
    std::filesystem::remove(err_path);
    return res;
}

}  // namespace skewpbw::testing
