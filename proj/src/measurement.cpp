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

#include "ontobench/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

namespace ontobench {

namespace {

constexpr std::uint64_t kShotsPerShard = 1 << 16;

void check_slot(const Ket &k, std::size_t slot) {
    if (slot >= k.slots()) {
        throw MeasurementError("slot " + std::to_string(slot) + " out of range");
    }
}

struct Sampler {
    std::vector<const BasisLabel *> labels;
    std::vector<double> cumulative;

    explicit Sampler(const Ket &k) {
        if (!k.normalized()) {
            throw StateError("sampling requires a normalized ket");
        }
        std::vector<double> weights;
        for (const auto &[label, amp] : k.terms()) {
            labels.push_back(&label);
            weights.push_back(std::norm(amp));
        }
        cumulative = cumulative_weights(weights);
    }
};

}  // namespace

double detection_probability(const Ket &k, std::size_t slot, const std::string &label) {
    check_slot(k, slot);
    if (k.is_consumed(slot)) {
        return 0;
    }
    double p = 0;
    for (const auto &[l, amp] : k.terms()) {
        if (l[slot] == label) {
            p += std::norm(amp);
        }
    }
    double n2 = k.norm_squared();
    return n2 == 0 ? 0 : p / n2;
}

MeasurementOutcome project(const Ket &k, std::size_t slot, const std::string &label, bool absorbing) {
    check_slot(k, slot);
    if (k.is_consumed(slot)) {
        throw ConsumedSlot("slot " + std::to_string(slot) + " was absorbed by an earlier detection");
    }
    if (!k.normalized()) {
        throw StateError("project requires a normalized ket");
    }
    KetBuilder b(k.slots());
    double p = 0;
    for (const auto &[l, amp] : k.terms()) {
        if (l[slot] == label) {
            b.add(l, amp);
            p += std::norm(amp);
        }
    }
    if (p == 0) {
        throw ImpossibleOutcome("outcome '" + label + "' on slot " + std::to_string(slot) + " has probability 0");
    }
    std::vector<bool> consumed = k.consumed();
    if (absorbing) {
        consumed[slot] = true;
    }
    b.set_consumed(std::move(consumed));
    return {slot, label, std::min(p, 1.0), std::move(b).build(true)};
}

BasisLabel sample_outcome(const Ket &k, Rng &rng) {
    Sampler s(k);
    return *s.labels[rng.pick(s.cumulative)];
}

BasisLabel sample_outcome(const Ket &k, RngSeed seed) {
    Rng rng(seed);
    return sample_outcome(k, rng);
}

std::map<BasisLabel, std::uint64_t> sample_counts(const Ket &k, std::uint64_t shots, RngSeed seed) {
    Sampler s(k);
    std::uint64_t shards = (shots + kShotsPerShard - 1) / kShotsPerShard;
    auto run_shard = [&](std::uint64_t shard) {
        std::vector<std::uint64_t> counts(s.labels.size());
        Rng rng(seed, shard + 1);
        std::uint64_t n = std::min(kShotsPerShard, shots - shard * kShotsPerShard);
        for (std::uint64_t i = 0; i < n; i++) {
            counts[rng.pick(s.cumulative)]++;
        }
        return counts;
    };
    std::vector<std::future<std::vector<std::uint64_t>>> pending;
    for (std::uint64_t shard = 0; shard < shards; shard++) {
        pending.push_back(std::async(std::launch::async, run_shard, shard));
    }
    std::vector<std::uint64_t> total(s.labels.size());
    for (auto &f : pending) {
        auto counts = f.get();
        for (std::size_t i = 0; i < total.size(); i++) {
            total[i] += counts[i];
        }
    }
    std::map<BasisLabel, std::uint64_t> result;
    for (std::size_t i = 0; i < total.size(); i++) {
        result[*s.labels[i]] = total[i];
    }
    return result;
}

Ket attach_ancilla(const Ket &k, std::size_t slot, const std::map<std::string, std::string> &marking) {
    check_slot(k, slot);
    KetBuilder b(k.slots() + 1);
    for (const auto &[l, amp] : k.terms()) {
        auto it = marking.find(l[slot]);
        if (it == marking.end()) {
            throw MeasurementError("ancilla marking has no entry for mode '" + l[slot] + "'");
        }
        BasisLabel out = l;
        out.push_back(it->second);
        b.add(std::move(out), amp);
    }
    std::vector<bool> consumed = k.consumed();
    consumed.push_back(false);
    b.set_consumed(std::move(consumed));
    return std::move(b).build();
}

}  // namespace ontobench
