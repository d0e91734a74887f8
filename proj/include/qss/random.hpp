// Copyright 2026 The qss Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qss {

/// Generator used by every sampling routine. One instance per Monte Carlo
/// stream; never shared between threads.
using Rng = std::mt19937_64;

/// Generator for stream `stream` of a campaign seeded with `seed`. Streams
/// with distinct (seed, stream) pairs are decorrelated through splitmix64.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) built from the top 53 bits of one draw, so the
/// sequence depends only on the engine and not on the standard library.
double uniform01(Rng &rng);

/// Index i drawn with probability weights[i] / sum(weights). Weights must be
/// non-negative with a positive sum.
std::size_t sample_index(std::span<const double> weights, Rng &rng);

} // namespace qss
