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

#include "ontobench/random.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <numeric>
#include <stdexcept>

namespace ontobench {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(RngSeed seed, std::uint64_t stream) : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1))) {
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::pick(std::span<const double> cumulative) {
    if (cumulative.empty()) {
        throw std::invalid_argument("pick from an empty table");
    }
    double u = uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
        --it;
    }
    // Skip zero-width bins so impossible outcomes are never returned.
    std::size_t i = it - cumulative.begin();
    while (i > 0 && cumulative[i] == cumulative[i - 1]) {
        --i;
    }
    return i;
}

std::vector<double> cumulative_weights(std::span<const double> weights) {
    std::vector<double> out(weights.size());
    std::partial_sum(weights.begin(), weights.end(), out.begin());
    return out;
}

double chi_square_p_value(std::span<const std::uint64_t> observed, std::span<const double> expected_probs) {
    if (observed.size() != expected_probs.size()) {
        throw std::invalid_argument("chi-square: observed and expected sizes differ");
    }
    double n = 0;
    for (auto c : observed) {
        n += static_cast<double>(c);
    }
    double stat = 0;
    int cells = 0;
    for (std::size_t i = 0; i < observed.size(); i++) {
        double e = expected_probs[i] * n;
        if (e == 0) {
            if (observed[i] != 0) {
                return 0;
            }
            continue;
        }
        double d = static_cast<double>(observed[i]) - e;
        stat += d * d / e;
        cells++;
    }
    if (cells < 2) {
        return 1;
    }
    boost::math::chi_squared_distribution<double> dist(cells - 1);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace ontobench
