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

#include "ontobench/rdm.hpp"

#include <charconv>
#include <cmath>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>

namespace ontobench {

namespace {

constexpr std::uint64_t kTrialsPerShard = 1 << 14;

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::optional<double> to_double(const std::string &s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

/// Splits `total` items into shards of `per_shard`, runs them concurrently and
/// sums the per-shard results.
template <typename Job>
std::uint64_t run_sharded(std::uint64_t total, std::uint64_t per_shard, Job job) {
    std::vector<std::future<std::uint64_t>> pending;
    for (std::uint64_t shard = 0; shard * per_shard < total; shard++) {
        std::uint64_t n = std::min(per_shard, total - shard * per_shard);
        pending.push_back(std::async(std::launch::async, job, shard, n));
    }
    std::uint64_t sum = 0;
    for (auto &f : pending) {
        sum += f.get();
    }
    return sum;
}

}  // namespace

DensityTable::DensityTable(std::map<std::string, double> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) {
        throw RdmError("density table is empty");
    }
    double total = 0;
    for (const auto &[cell, p] : cells_) {
        if (!std::isfinite(p) || p < 0) {
            throw RdmError("density of cell '" + cell + "' is not a nonnegative number");
        }
        total += p;
    }
    if (std::abs(total - 1) > 1e-9) {
        std::stringstream ss;
        ss << "density table sums to " << total << ", expected 1";
        throw RdmError(ss.str());
    }
}

DensityTable parse_density_csv(std::istream &in) {
    std::map<std::string, double> cells;
    std::string line;
    int line_no = 0;
    bool first_data = true;
    while (std::getline(in, line)) {
        line_no++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        auto comma = t.find(',');
        if (comma == std::string::npos) {
            throw RdmError("line " + std::to_string(line_no) + ": expected 'cell,probability'");
        }
        std::string cell = trim(std::string_view(t).substr(0, comma));
        std::string value = trim(std::string_view(t).substr(comma + 1));
        auto p = to_double(value);
        if (!p) {
            if (first_data) {
                first_data = false;
                continue;
            }
            throw RdmError("line " + std::to_string(line_no) + ": bad probability '" + value + "'");
        }
        first_data = false;
        if (cell.empty()) {
            throw RdmError("line " + std::to_string(line_no) + ": empty cell name");
        }
        if (!cells.emplace(cell, *p).second) {
            throw RdmError("line " + std::to_string(line_no) + ": duplicate cell '" + cell + "'");
        }
    }
    return DensityTable(std::move(cells));
}

Histogram sample_density(const DensityTable &d, std::uint64_t n, RngSeed seed) {
    if (n == 0) {
        throw RdmError("sample count must be positive");
    }
    std::vector<std::string> names;
    std::vector<double> weights;
    for (const auto &[cell, p] : d.cells()) {
        names.push_back(cell);
        weights.push_back(p);
    }
    auto cumulative = cumulative_weights(weights);

    std::uint64_t shards = (n + kTrialsPerShard - 1) / kTrialsPerShard;
    std::vector<std::future<std::vector<std::uint64_t>>> pending;
    for (std::uint64_t shard = 0; shard < shards; shard++) {
        pending.push_back(std::async(std::launch::async, [&, shard] {
            std::vector<std::uint64_t> counts(names.size());
            Rng rng(seed, shard + 1);
            std::uint64_t m = std::min(kTrialsPerShard, n - shard * kTrialsPerShard);
            for (std::uint64_t i = 0; i < m; i++) {
                counts[rng.pick(cumulative)]++;
            }
            return counts;
        }));
    }
    Histogram h;
    for (const auto &name : names) {
        h[name] = 0;
    }
    for (auto &f : pending) {
        auto counts = f.get();
        for (std::size_t i = 0; i < names.size(); i++) {
            h[names[i]] += counts[i];
        }
    }
    return h;
}

void write_histogram_csv(std::ostream &out, const Histogram &h) {
    std::uint64_t total = 0;
    for (const auto &[cell, count] : h) {
        total += count;
    }
    out << "cell,count,frequency\n";
    char buf[64];
    for (const auto &[cell, count] : h) {
        double freq = total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
        std::snprintf(buf, sizeof(buf), "%.9g", freq);
        out << cell << ',' << count << ',' << buf << '\n';
    }
}

void RdmPairConfig::validate() const {
    for (double p : branch_probabilities) {
        if (!std::isfinite(p) || p < 0) {
            throw RdmError("branch probabilities must be nonnegative");
        }
    }
    if (std::abs(branch_probabilities[0] + branch_probabilities[1] - 1) > 1e-12) {
        throw RdmError("branch probabilities must sum to 1");
    }
    if (!std::isfinite(tick) || !(tick > 0)) {
        throw RdmError("tick must be positive");
    }
    const Position *all[] = {&positions[0][0], &positions[0][1], &positions[1][0], &positions[1][1]};
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            if (*all[i] == *all[j]) {
                throw RdmError("pair positions must be distinct");
            }
        }
    }
}

CorrelationReport run_entangled_pair(const RdmPairConfig &cfg, double t_meas1, double t_meas2, bool freezing,
                                     std::uint64_t trials, RngSeed seed) {
    cfg.validate();
    if (!std::isfinite(t_meas1) || !std::isfinite(t_meas2) || t_meas1 < 0 || t_meas2 < t_meas1) {
        throw RdmError("measurement times must satisfy 0 <= t_meas1 <= t_meas2");
    }
    if (trials == 0) {
        throw RdmError("trials must be positive");
    }
    auto tick1 = static_cast<std::int64_t>(std::floor(t_meas1 / cfg.tick));
    auto tick2 = static_cast<std::int64_t>(std::floor(t_meas2 / cfg.tick));
    auto cumulative = cumulative_weights(cfg.branch_probabilities);

    auto job = [&](std::uint64_t shard, std::uint64_t n) {
        Rng rng(seed, shard + 1);
        std::uint64_t matches = 0;
        for (std::uint64_t i = 0; i < n; i++) {
            std::size_t branch_at_1 = rng.pick(cumulative);
            const Position &seen1 = cfg.positions[branch_at_1][0];
            std::size_t branch_at_2 = branch_at_1;
            // The branch is redrawn i.i.d. every tick, so only the draw of
            // the readout tick matters once a tick boundary is crossed.
            if (!freezing && tick2 != tick1) {
                branch_at_2 = rng.pick(cumulative);
            }
            const Position &seen2 = cfg.positions[branch_at_2][1];
            bool match = (seen1 == cfg.positions[0][0] && seen2 == cfg.positions[0][1]) ||
                         (seen1 == cfg.positions[1][0] && seen2 == cfg.positions[1][1]);
            matches += match;
        }
        return matches;
    };

    CorrelationReport report;
    report.trials = trials;
    report.matches = run_sharded(trials, kTrialsPerShard, job);
    report.mismatch_rate = 1 - static_cast<double>(report.matches) / static_cast<double>(trials);
    report.freezing = freezing;
    report.seed = seed;
    return report;
}

double presence_fraction(double p_present, std::uint64_t ticks, RngSeed seed) {
    if (!(p_present >= 0 && p_present <= 1)) {
        throw RdmError("presence probability must lie in [0, 1]");
    }
    if (ticks == 0) {
        throw RdmError("ticks must be positive");
    }
    std::uint64_t present = run_sharded(ticks, kTrialsPerShard, [&](std::uint64_t shard, std::uint64_t n) {
        Rng rng(seed, shard + 1);
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; i++) {
            hits += rng.uniform() < p_present;
        }
        return hits;
    });
    return static_cast<double>(present) / static_cast<double>(ticks);
}

void JumpRecord::validate() const {
    if (arrival.t < departure.t) {
        throw RdmError("jump arrives before it departs");
    }
}

DuplicationReport analyze_jump_frames(const JumpRecord &j, double c) {
    DuplicationReport r;
    r.interval = interval_class(j.departure, j.arrival, c);
    if (r.interval == IntervalClass::spacelike) {
        r.velocity = simultaneity_velocity(j.departure, j.arrival, c);
        r.common_time = boosted_time_closed_form(j.departure, j.arrival, c);
        r.duplication_frame_exists = true;
    }
    return r;
}

DuplicationReport analyze_pair_frames(const JumpRecord &a, const JumpRecord &b, double c) {
    DuplicationReport r;
    r.interval = interval_class(a.departure, b.arrival, c);
    if (r.interval == IntervalClass::spacelike) {
        r.velocity = simultaneity_velocity(a.departure, b.arrival, c);
        r.common_time = boost(a.departure, Frame(*r.velocity, c)).t;
        r.t2b_boosted = boosted_time_closed_form(a.departure, b.arrival, c);
        r.duplication_frame_exists = true;
        r.entanglement_violation_frame = true;
    }
    return r;
}

}  // namespace ontobench
