// Copyright 2026 The cvdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVDENSE_RNG_HPP
#define CVDENSE_RNG_HPP

#include <cstdint>
#include <random>

namespace cvdense {

/// Generator used everywhere a seeded stream is required. All sampling
/// operations take an `Rng&` and never construct generators internally, so a
/// fixed seed and call sequence reproduce results exactly.
using Rng = std::mt19937_64;

/// splitmix64 output mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed for the `stream`-th independent substream of `base`. This is the
/// splitmix64 sequence started at `base`, which gives decorrelated seeds for
/// chunked parallel sampling while staying a pure function of its inputs.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix64(base + (stream + 1) * 0x9E3779B97F4A7C15ull);
}

}  // namespace cvdense

#endif
