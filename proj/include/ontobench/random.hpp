// Copyright 2026 The ontobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOBENCH_RANDOM_HPP
#define ONTOBENCH_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ontobench {

using RngSeed = std::uint64_t;

/// SplitMix64 finalizer. Used only to derive engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random source.
///
/// Engine: std::mt19937_64. Seeding: the engine for (seed, stream) is seeded
/// with splitmix64(splitmix64(seed) ^ splitmix64(stream + 1)), so shard `i` of
/// a run always draws from the same sub-stream regardless of how many shards
/// exist or which thread runs them. Stream 0 is the unsharded stream.
class Rng {
   public:
    explicit Rng(RngSeed seed, std::uint64_t stream = 0);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Index i drawn with probability weights[i] / sum(weights).
    std::size_t pick(std::span<const double> cumulative);

    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
};

/// Running sums of `weights`, used by Rng::pick.
std::vector<double> cumulative_weights(std::span<const double> weights);

/// Upper-tail p-value of Pearson's chi-square statistic for observed counts
/// against expected probabilities. Cells with zero expected probability must
/// have zero counts, otherwise the p-value is 0.
double chi_square_p_value(std::span<const std::uint64_t> observed, std::span<const double> expected_probs);

}  // namespace ontobench

#endif
