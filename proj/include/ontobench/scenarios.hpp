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

#ifndef ONTOBENCH_SCENARIOS_HPP
#define ONTOBENCH_SCENARIOS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ontobench/rdm.hpp"
#include "ontobench/relativity.hpp"
#include "ontobench/state.hpp"

namespace ontobench {

class ScenarioError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::string_view kReportSchemaVersion = "1";

struct Verdict {
    std::string name;
    bool pass;
    std::string detail;
};

/// Outcome of one scripted analysis. `params` holds every input, so running
/// the same scenario on `params` reproduces the report.
struct ScenarioReport {
    std::string scenario;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<Verdict> verdicts;

    /// Appends a verdict; throws ScenarioError on a duplicate name.
    void add_verdict(std::string name, bool pass, std::string detail);
    const Verdict &verdict(std::string_view name) const;
    bool all_pass() const;

    /// Serialized form: schema_version, scenario, params, results, verdicts.
    /// Object keys are sorted; amplitudes are [re, im] arrays.
    nlohmann::json to_json() const;
};

/// Ket as an object mapping "m1,m2,..." to [re, im].
nlohmann::json amplitude_table(const Ket &k);

/// Scenario names accepted by run_scenario.
const std::vector<std::string> &scenario_names();

/// Bundled default parameters of a scenario.
nlohmann::json scenario_defaults(std::string_view name);

/// Runs `name` with the bundled defaults overridden by `overrides`. Unknown
/// override keys are rejected.
ScenarioReport run_scenario(std::string_view name, const nlohmann::json &overrides = nlohmann::json::object());

ScenarioReport scenario_frame_ambiguity(const SpacetimeEvent &detection1, const SpacetimeEvent &detection2, double v,
                                        double c = 1.0, const std::string &outcome = "a");

ScenarioReport scenario_self_interaction();

/// `pair_a` and `pair_b` are the jumps of the two entangled particles used for
/// the frame analysis of synchronized jumps.
ScenarioReport scenario_rdm_entanglement(const RdmPairConfig &cfg, double t_meas1, double t_meas2,
                                         std::uint64_t trials, RngSeed seed, const JumpRecord &pair_a,
                                         const JumpRecord &pair_b, double c = 1.0);

ScenarioReport scenario_duplication(const JumpRecord &jump, double c = 1.0);

ScenarioReport scenario_vanishing(std::uint64_t ticks, RngSeed seed, double p_present = 0.5);

ScenarioReport scenario_hardy(std::uint64_t shots, RngSeed seed);

}  // namespace ontobench

#endif
