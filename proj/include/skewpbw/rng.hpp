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
#include <random>
#include <string_view>

namespace skewpbw {

/// Reproducible pseudorandom stream used by every sampled check.
///
/// The generator is a 64-bit multiplicative congruential generator
/// (modulus 2^64, multiplier 0xf1357aea2e62a9c5, odd state). Each call site
/// derives its own stream from (seed, site label) through splitmix64, so two
/// checks that share a seed never share a stream. Only the high 32 bits of
/// the state are used as output. Bounded draws use Lemire's multiply-shift
/// reduction rather than std:: distributions, whose output is not specified
/// bit-for-bit across standard libraries.
class Rng {
public:
    using Engine = std::linear_congruential_engine<std::uint64_t, 0xf1357aea2e62a9c5ULL, 0, 0>;

    explicit Rng(std::uint64_t seed, std::string_view site = {});

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform integer in the closed range [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next_u32() & 1U) != 0; }

    /// Child stream for a nested call site; does not advance this stream.
    Rng split(std::string_view site) const;

private:
    std::uint64_t seed_;
    Engine engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis = 0xcbf29ce484222325ULL);

}  // namespace skewpbw
