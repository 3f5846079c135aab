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

#include "skewpbw/rng.hpp"

#include <stdexcept>

namespace skewpbw {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis) {
    std::uint64_t h = basis;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng::Rng(std::uint64_t seed, std::string_view site)
    : seed_(splitmix64(seed ^ fnv1a64(site))), engine_(seed_ | 1ULL) {
    // warm up: the first outputs of an MCG from a low-entropy odd state are weak
    for (int i = 0; i < 4; ++i) engine_();
}

std::uint32_t Rng::next_u32() { return static_cast<std::uint32_t>(engine_() >> 32); }

std::uint64_t Rng::next_u64() {
    std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
    if (span == 0) return static_cast<std::int64_t>(next_u64());
    if (span <= 0xffffffffULL) {
        const std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * span;
        return lo + static_cast<std::int64_t>(m >> 32);
    }
    return lo + static_cast<std::int64_t>(next_u64() % span);
}

Rng Rng::split(std::string_view site) const {
    return Rng(seed_, site);
}

}  // namespace skewpbw
