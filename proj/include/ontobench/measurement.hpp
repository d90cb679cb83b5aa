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

#ifndef ONTOBENCH_MEASUREMENT_HPP
#define ONTOBENCH_MEASUREMENT_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "ontobench/random.hpp"
#include "ontobench/state.hpp"

namespace ontobench {

class MeasurementError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Conditioning on an outcome the state assigns probability zero.
class ImpossibleOutcome : public MeasurementError {
   public:
    using MeasurementError::MeasurementError;
};

/// Projection on a slot whose particle an absorbing detector already took.
class ConsumedSlot : public MeasurementError {
   public:
    using MeasurementError::MeasurementError;
};

struct MeasurementOutcome {
    std::size_t slot;
    std::string label;
    double probability;
    Ket post_state;
};

/// Probability that a detector on `label` in `slot` fires. Zero for a
/// consumed slot. Does not collapse anything.
double detection_probability(const Ket &k, std::size_t slot, const std::string &label);

/// Projective detection with collapse. With `absorbing`, the slot is marked
/// consumed in the post-state.
///
/// Throws ConsumedSlot when the slot was already absorbed and
/// ImpossibleOutcome when the outcome has probability zero.
MeasurementOutcome project(const Ket &k, std::size_t slot, const std::string &label, bool absorbing = false);

/// Draws one joint basis label from distribution(k).
BasisLabel sample_outcome(const Ket &k, Rng &rng);

/// Convenience overload drawing from a fresh stream-0 generator.
BasisLabel sample_outcome(const Ket &k, RngSeed seed);

/// Counts of `shots` joint outcomes. Shots are split into fixed-size shards,
/// shard i drawing from Rng(seed, i + 1), so the result depends only on
/// (k, shots, seed).
std::map<BasisLabel, std::uint64_t> sample_counts(const Ket &k, std::uint64_t shots, RngSeed seed);

/// Entangles `k` with a fresh ancilla slot appended at the end: each term
/// gains marking[mode in `slot`]. Throws MeasurementError for unmapped modes.
Ket attach_ancilla(const Ket &k, std::size_t slot, const std::map<std::string, std::string> &marking);

}  // namespace ontobench

#endif
