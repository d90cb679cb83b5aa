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

#include "ontobench/scenarios.hpp"

#include <cmath>
#include <sstream>

#include "ontobench/bundled.hpp"
#include "ontobench/measurement.hpp"
#include "ontobench/notation.hpp"
#include "ontobench/optics.hpp"

namespace ontobench {

using nlohmann::json;

namespace {

constexpr double kExactTol = 1e-12;

std::string join_label(const BasisLabel &label) {
    std::string s;
    for (std::size_t i = 0; i < label.size(); i++) {
        s += (i ? "," : "") + label[i];
    }
    return s;
}

json event_json(const SpacetimeEvent &e) {
    return {{"t", e.t}, {"x", e.x}};
}

SpacetimeEvent event_from(const json &j) {
    return {j.at("t").get<double>(), j.at("x").get<double>()};
}

JumpRecord jump_from(const json &j, std::string particle) {
    return {event_from(j.at("departure")), event_from(j.at("arrival")), std::move(particle)};
}

json jump_json(const JumpRecord &j) {
    return {{"departure", event_json(j.departure)}, {"arrival", event_json(j.arrival)}};
}

json duplication_json(const DuplicationReport &r) {
    json out = {{"interval", std::string(to_string(r.interval))},
                {"duplication_frame_exists", r.duplication_frame_exists},
                {"entanglement_violation_frame", r.entanglement_violation_frame}};
    out["velocity"] = r.velocity ? json(*r.velocity) : json(nullptr);
    out["common_time"] = r.common_time ? json(*r.common_time) : json(nullptr);
    if (r.t2b_boosted) {
        out["t2b_boosted"] = *r.t2b_boosted;
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

/// Verdict for an observed rate against a binomial expectation: within
/// 3 sigma, or exactly equal when sigma vanishes.
std::pair<bool, std::string> within_3_sigma(double observed, double expected, std::uint64_t n) {
    double sigma = std::sqrt(expected * (1 - expected) / static_cast<double>(n));
    bool ok = sigma == 0 ? observed == expected : std::abs(observed - expected) <= 3 * sigma;
    return {ok, "observed " + fmt(observed) + ", expected " + fmt(expected) + ", 3 sigma = " + fmt(3 * sigma)};
}

/// Squared modulus of every term matches `expected` and nothing else is present.
bool moduli_match(const Ket &k, const std::map<BasisLabel, double> &expected, double tol) {
    if (k.size() != expected.size()) {
        return false;
    }
    for (const auto &[label, p] : expected) {
        if (std::abs(std::norm(k.amplitude(label)) - p) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

void ScenarioReport::add_verdict(std::string name, bool pass, std::string detail) {
    for (const auto &v : verdicts) {
        if (v.name == name) {
            throw ScenarioError("duplicate verdict '" + name + "'");
        }
    }
    verdicts.push_back({std::move(name), pass, std::move(detail)});
}

const Verdict &ScenarioReport::verdict(std::string_view name) const {
    for (const auto &v : verdicts) {
        if (v.name == name) {
            return v;
        }
    }
    throw ScenarioError("no verdict '" + std::string(name) + "'");
}

bool ScenarioReport::all_pass() const {
    for (const auto &v : verdicts) {
        if (!v.pass) {
            return false;
        }
    }
    return true;
}

json ScenarioReport::to_json() const {
    json vs = json::array();
    for (const auto &v : verdicts) {
        vs.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    }
    return {{"schema_version", std::string(kReportSchemaVersion)},
            {"scenario", scenario},
            {"params", params},
            {"results", results},
            {"verdicts", vs}};
}

json amplitude_table(const Ket &k) {
    json out = json::object();
    for (const auto &[label, amp] : k.terms()) {
        out[join_label(label)] = json::array({amp.real(), amp.imag()});
    }
    return out;
}

const std::vector<std::string> &scenario_names() {
    static const std::vector<std::string> names = {"frame-ambiguity", "self-interaction", "rdm-entanglement",
                                                   "duplication",     "vanishing",        "hardy"};
    return names;
}

json scenario_defaults(std::string_view name) {
    try {
        return json::parse(bundled::scenario_config(name));
    } catch (const std::out_of_range &) {
        throw ScenarioError("unknown scenario '" + std::string(name) + "'");
    }
}

ScenarioReport run_scenario(std::string_view name, const json &overrides) {
    json p = scenario_defaults(name);
    for (const auto &[key, value] : overrides.items()) {
        if (!p.contains(key)) {
            throw ScenarioError("scenario '" + std::string(name) + "' has no parameter '" + key + "'");
        }
        p[key] = value;
    }
    try {
        if (name == "frame-ambiguity") {
            return scenario_frame_ambiguity(event_from(p.at("event1")), event_from(p.at("event2")),
                                            p.at("v").get<double>(), p.at("c").get<double>(),
                                            p.at("outcome").get<std::string>());
        }
        if (name == "self-interaction") {
            return scenario_self_interaction();
        }
        if (name == "rdm-entanglement") {
            RdmPairConfig cfg;
            const auto &pos = p.at("positions");
            for (int b = 0; b < 2; b++) {
                for (int q = 0; q < 2; q++) {
                    const auto &r = pos.at(b).at(q);
                    cfg.positions[b][q] = {r.at(0).get<double>(), r.at(1).get<double>(), r.at(2).get<double>()};
                }
            }
            cfg.branch_probabilities = {p.at("branch_probabilities").at(0).get<double>(),
                                        p.at("branch_probabilities").at(1).get<double>()};
            cfg.tick = p.at("tick").get<double>();
            return scenario_rdm_entanglement(cfg, p.at("t_meas1").get<double>(), p.at("t_meas2").get<double>(),
                                             p.at("trials").get<std::uint64_t>(), p.at("seed").get<RngSeed>(),
                                             jump_from(p.at("pair_jump_a"), "A"), jump_from(p.at("pair_jump_b"), "B"),
                                             p.at("c").get<double>());
        }
        if (name == "duplication") {
            JumpRecord j{event_from(p.at("departure")), event_from(p.at("arrival")), "1"};
            return scenario_duplication(j, p.at("c").get<double>());
        }
        if (name == "vanishing") {
            return scenario_vanishing(p.at("ticks").get<std::uint64_t>(), p.at("seed").get<RngSeed>(),
                                      p.at("p_present").get<double>());
        }
        if (name == "hardy") {
            return scenario_hardy(p.at("shots").get<std::uint64_t>(), p.at("seed").get<RngSeed>());
        }
    } catch (const json::exception &e) {
        throw ScenarioError("bad parameters for scenario '" + std::string(name) + "': " + e.what());
    }
    throw ScenarioError("unknown scenario '" + std::string(name) + "'");
}

ScenarioReport scenario_frame_ambiguity(const SpacetimeEvent &detection1, const SpacetimeEvent &detection2, double v,
                                        double c, const std::string &outcome) {
    Frame frame(v, c);
    if (interval_class(detection1, detection2, c) != IntervalClass::spacelike) {
        throw ScenarioError("detections must be spacelike separated; causal order is the same in every frame");
    }
    if (!(detection1.t < detection2.t)) {
        throw ScenarioError("detection 1 must precede detection 2 in the lab frame");
    }

    ScenarioReport r;
    r.scenario = "frame-ambiguity";
    r.params = {{"event1", event_json(detection1)},
                {"event2", event_json(detection2)},
                {"v", v},
                {"c", c},
                {"outcome", outcome}};

    Ket psi = parse_ket(bundled::state("path_pair"));
    Ket reduced = project(psi, 0, outcome).post_state;

    SpacetimeEvent events[] = {detection1, detection2};
    auto order = order_in_frame(events, frame);
    bool reversed = order.front() == 1;

    // State assigned on the hyperplane of simultaneity through the moment
    // just before detection 2: the lab sees detection 1 as already done, the
    // moving frame sees it as still ahead when the order is reversed.
    const Ket &lab_state = reduced;
    const Ket &boosted_state = reversed ? psi : reduced;
    bool ambiguity = !equal_up_to_phase(lab_state, boosted_state, kExactTol);

    r.results["boosted_times"] = {boost(detection1, frame).t, boost(detection2, frame).t};
    r.results["lab_order"] = {1, 2};
    r.results["frame_order"] = {order[0] + 1, order[1] + 1};
    r.results["order_reversed"] = reversed;
    r.results["lab_state_before_detection2"] = amplitude_table(lab_state);
    r.results["frame_state_before_detection2"] = amplitude_table(boosted_state);
    r.results["ambiguity"] = ambiguity;

    Ket ab = Ket::basis({outcome, reduced.terms().begin()->first[1]});
    r.add_verdict("lab_reduced_state", equal_up_to_phase(lab_state, ab, kExactTol),
                  "lab frame after t1: " + format_ket(lab_state));
    r.add_verdict("frame_state_consistent", equal_up_to_phase(boosted_state, reversed ? psi : reduced, kExactTol),
                  reversed ? "no detection before t2' in the moving frame: " + format_ket(boosted_state)
                           : "moving frame keeps the lab order");
    r.add_verdict("ambiguity_iff_reversed", ambiguity == reversed,
                  std::string("ambiguity=") + (ambiguity ? "true" : "false") +
                      ", order_reversed=" + (reversed ? "true" : "false"));
    return r;
}

ScenarioReport scenario_self_interaction() {
    ScenarioReport r;
    r.scenario = "self-interaction";
    OccupationKet one_particle = OccupationKet::from_ket(parse_ket(bundled::state("shared_particle")));
    OccupationKet two_electrons = OccupationKet::make({{{1, 1}, 1.0}}, true);
    double shared = occupation_pair_expectation(one_particle);
    double pair = occupation_pair_expectation(two_electrons);
    r.results["pair_occupation_one_particle"] = shared;
    r.results["pair_occupation_two_electrons"] = pair;
    r.add_verdict("one_particle_zero", shared == 0.0, "<n_A n_B> = " + fmt(shared) + " for (|1,0> + |0,1>)/sqrt2");
    r.add_verdict("two_electrons_one", pair == 1.0, "<n_A n_B> = " + fmt(pair) + " for |1,1>");
    r.add_verdict("no_self_interaction", shared == 0.0 && pair == 1.0,
                  "the packets of one particle never co-occur; two particles always do");
    return r;
}

ScenarioReport scenario_rdm_entanglement(const RdmPairConfig &cfg, double t_meas1, double t_meas2,
                                         std::uint64_t trials, RngSeed seed, const JumpRecord &pair_a,
                                         const JumpRecord &pair_b, double c) {
    ScenarioReport r;
    r.scenario = "rdm-entanglement";
    json positions = json::array();
    for (const auto &branch : cfg.positions) {
        json b = json::array();
        for (const auto &pos : branch) {
            b.push_back({pos.x, pos.y, pos.z});
        }
        positions.push_back(b);
    }
    r.params = {{"positions", positions},
                {"branch_probabilities", {cfg.branch_probabilities[0], cfg.branch_probabilities[1]}},
                {"tick", cfg.tick},
                {"t_meas1", t_meas1},
                {"t_meas2", t_meas2},
                {"trials", trials},
                {"seed", seed},
                {"pair_jump_a", jump_json(pair_a)},
                {"pair_jump_b", jump_json(pair_b)},
                {"c", c}};

    pair_a.validate();
    pair_b.validate();
    CorrelationReport off = run_entangled_pair(cfg, t_meas1, t_meas2, false, trials, seed);
    CorrelationReport on = run_entangled_pair(cfg, t_meas1, t_meas2, true, trials, seed);

    bool same_tick = std::floor(t_meas1 / cfg.tick) == std::floor(t_meas2 / cfg.tick);
    double p1 = cfg.branch_probabilities[0];
    double p2 = cfg.branch_probabilities[1];
    double expected_off = same_tick ? 0.0 : 1 - (p1 * p1 + p2 * p2);

    r.results["mismatch_rate_without_freezing"] = off.mismatch_rate;
    r.results["mismatch_rate_with_freezing"] = on.mismatch_rate;
    r.results["matches_without_freezing"] = off.matches;
    r.results["matches_with_freezing"] = on.matches;
    r.results["expected_mismatch_without_freezing"] = expected_off;
    r.results["same_tick_readout"] = same_tick;

    auto [ok, detail] = within_3_sigma(off.mismatch_rate, expected_off, trials);
    r.add_verdict("violation_without_freezing", ok, detail);
    r.add_verdict("restored_with_freezing", on.mismatch_rate == 0.0 && on.matches == trials,
                  "mismatch rate " + fmt(on.mismatch_rate) + " with freezing");

    DuplicationReport frames = analyze_pair_frames(pair_a, pair_b, c);
    r.results["pair_frame_analysis"] = duplication_json(frames);
    bool frames_ok = true;
    std::string frames_detail = "departure of A and landing of B are " + std::string(to_string(frames.interval));
    if (frames.entanglement_violation_frame) {
        double v = simultaneity_velocity(pair_a.departure, pair_b.arrival, c);
        double t_b = boost(pair_b.arrival, Frame(v, c)).t;
        frames_ok = std::abs(*frames.t2b_boosted - t_b) <= 1e-9 && std::abs(*frames.common_time - t_b) <= 1e-9;
        frames_detail += "; in the frame v=" + fmt(v) + " B lands at t'=" + fmt(t_b) + " as A leaves";
    }
    r.add_verdict("pair_frame_analysis_consistent", frames_ok, frames_detail);
    r.results["note"] =
        "the freezing rule is applied in the lab frame only; frames that reverse the readout order are reported, "
        "not simulated";
    return r;
}

ScenarioReport scenario_duplication(const JumpRecord &jump, double c) {
    jump.validate();
    ScenarioReport r;
    r.scenario = "duplication";
    r.params = {{"departure", event_json(jump.departure)}, {"arrival", event_json(jump.arrival)}, {"c", c}};

    DuplicationReport frames = analyze_jump_frames(jump, c);
    r.results["frame_analysis"] = duplication_json(frames);
    bool frames_ok = true;
    if (frames.duplication_frame_exists) {
        Frame f(*frames.velocity, c);
        double t1 = boost(jump.departure, f).t;
        double t2 = boost(jump.arrival, f).t;
        frames_ok = std::abs(*frames.velocity) < c && std::abs(t1 - t2) <= 1e-9 &&
                    std::abs(t1 - *frames.common_time) <= 1e-9;
    } else {
        frames_ok = !frames.velocity.has_value();
    }
    r.add_verdict("frame_analysis_consistent", frames_ok,
                  std::string("jump is ") + std::string(to_string(frames.interval)) +
                      (frames.duplication_frame_exists ? ", some frame sees the particle in both packets" : ""));

    // Absorbing detector on psi_A at t1.
    Ket psi = Ket::make(1, {{{"x1"}, 1.0}, {{"x2"}, 1.0}}, true);
    auto absorbed = project(psi, 0, "x1", true);
    double later = detection_probability(absorbed.post_state, 0, "x2");
    bool blocked = false;
    try {
        project(absorbed.post_state, 0, "x2");
    } catch (const ConsumedSlot &) {
        blocked = true;
    }
    r.results["absorbed_then_psi_b_probability"] = later;
    r.add_verdict("absorbing_detector_blocks_jump", blocked && later == 0.0,
                  "after absorption at x1 the particle is found in psi_B with probability " + fmt(later));

    // Non-absorbing detection through an ancilla marking x1 -> xi1, x2 -> xi2.
    Ket marked = attach_ancilla(psi, 0, {{"x1", "xi1"}, {"x2", "xi2"}});
    auto seen = project(marked, 1, "xi1");
    double redetect = detection_probability(seen.post_state, 1, "xi2");
    bool impossible = false;
    try {
        project(seen.post_state, 1, "xi2");
    } catch (const ImpossibleOutcome &) {
        impossible = true;
    }
    r.results["ancilla_first_detection_probability"] = seen.probability;
    r.results["ancilla_redetection_probability"] = redetect;
    r.add_verdict("ancilla_not_redetected", impossible && redetect == 0.0,
                  "ancilla found in xi1 is re-detected in xi2 with probability " + fmt(redetect));

    bool unobservable = blocked && later == 0.0 && impossible && redetect == 0.0;
    r.results["unobservable"] = unobservable;
    r.add_verdict("unobservable", unobservable, "no detector record reveals the particle in both packets");
    return r;
}

ScenarioReport scenario_vanishing(std::uint64_t ticks, RngSeed seed, double p_present) {
    if (ticks == 0) {
        throw ScenarioError("ticks must be positive");
    }
    ScenarioReport r;
    r.scenario = "vanishing";
    r.params = {{"ticks", ticks}, {"seed", seed}, {"p_present", p_present}};
    double f = presence_fraction(p_present, ticks, seed);
    r.results["presence_fraction"] = f;
    r.results["note"] = "presence in the surviving packet between the two detector times is not observable";
    auto [ok, detail] = within_3_sigma(f, p_present, ticks);
    r.add_verdict("half_presence", ok, detail);
    return r;
}

ScenarioReport scenario_hardy(std::uint64_t shots, RngSeed seed) {
    ScenarioReport r;
    r.scenario = "hardy";
    r.params = {{"shots", shots}, {"seed", seed}};
    r.results["bench"] = std::string(bundled::hardy_bench());

    BenchPlan plan = parse_bench(bundled::hardy_bench());
    auto snaps = compile_and_run(plan);
    const Ket *after_bs = nullptr;
    const Ket *final_state = nullptr;
    for (const auto &[name, k] : snaps) {
        if (name == "after_bs") {
            after_bs = &k;
        } else if (name == "final") {
            final_state = &k;
        }
    }
    if (after_bs == nullptr || final_state == nullptr || plan.stages.size() != 4) {
        throw ScenarioError("bundled hardy.bench does not have the expected layout");
    }
    const ModeMap &rec_plus = plan.stages[2].map;
    const ModeMap &rec_minus = plan.stages[3].map;
    const Ket &source = plan.initial_state;

    Ket only_plus = apply_to_slot(*after_bs, 0, rec_plus);
    Ket only_minus = apply_to_slot(*after_bs, 1, rec_minus);

    r.results["amplitudes"] = {{"source", amplitude_table(source)},
                               {"after_bs", amplitude_table(*after_bs)},
                               {"final", amplitude_table(*final_state)},
                               {"recombined_plus_only", amplitude_table(only_plus)},
                               {"recombined_minus_only", amplitude_table(only_minus)}};

    // Probabilities behind the first beam splitters.
    ProbabilityTable after_probs = distribution(*after_bs);
    ProbabilityTable final_probs = distribution(*final_state);
    json pj = json::object();
    for (const auto &[label, p] : after_probs) {
        pj[join_label(label)] = p;
    }
    json fj = json::object();
    for (const auto &[label, p] : final_probs) {
        fj[join_label(label)] = p;
    }
    r.results["probabilities"] = {{"after_bs", pj}, {"final", fj}};

    const double s12 = std::sqrt(12.0);
    const Amplitude i{0, 1};
    Ket printed_after_bs = Ket::make(2, {{{"c+", "c-"}, -3.0 / s12},
                                         {{"c+", "d-"}, i / s12},
                                         {{"d+", "c-"}, i / s12},
                                         {{"d+", "d-"}, -1.0 / s12}});
    r.add_verdict("after_bs_amplitudes", equal_exact(*after_bs, printed_after_bs, kExactTol),
                  "after BS+-: " + format_ket(*after_bs));

    double p_dd = after_probs.count({"d+", "d-"}) ? after_probs.at({"d+", "d-"}) : 0.0;
    r.results["p_dd"] = p_dd;
    bool dd_ok = std::abs(p_dd - 1.0 / 12) <= kExactTol;
    r.add_verdict("p_dd_one_twelfth", dd_ok, "P(d+,d-) = " + fmt(p_dd));

    double uu = std::abs(final_state->amplitude({"u'+", "u'-"}));
    r.results["uu_amplitude_modulus"] = uu;
    bool uu_ok = uu < kExactTol;
    r.add_verdict("no_uu_term", uu_ok, "|<u'+,u'-|final>| = " + fmt(uu));

    Ket source_relabeled = relabel(source, {{"u+", "u'+"}, {"v+", "v'+"}, {"u-", "u'-"}, {"v-", "v'-"}});
    r.add_verdict("final_equals_source", equal_up_to_phase(*final_state, source_relabeled, kExactTol),
                  "final: " + format_ket(*final_state));

    bool plus_moduli = moduli_match(only_plus,
                                    {{{"u'+", "c-"}, 1.0 / 6}, {{"v'+", "c-"}, 4.0 / 6}, {{"u'+", "d-"}, 1.0 / 6}},
                                    kExactTol);
    bool minus_moduli = moduli_match(only_minus,
                                     {{{"c+", "u'-"}, 1.0 / 6}, {{"c+", "v'-"}, 4.0 / 6}, {{"d+", "u'-"}, 1.0 / 6}},
                                     kExactTol);
    r.add_verdict("recombined_plus_moduli", plus_moduli, format_ket(only_plus));
    r.add_verdict("recombined_minus_moduli", minus_moduli, format_ket(only_minus));

    Ket plus_then_minus = apply_to_slot(only_plus, 1, rec_minus);
    Ket minus_then_plus = apply_to_slot(only_minus, 0, rec_plus);
    r.add_verdict("plus_then_minus_is_final", equal_exact(plus_then_minus, *final_state, kExactTol),
                  "completing slot 2 after slot 1");
    r.add_verdict("minus_then_plus_is_final", equal_exact(minus_then_plus, *final_state, kExactTol),
                  "completing slot 1 after slot 2");

    // In a frame where p- is detected on d- before p+ reaches BS'+.
    double cond_plus = detection_probability(project(only_plus, 1, "d-").post_state, 0, "u'+");
    // In a frame where p+ is detected on d+ before p- reaches BS'-.
    double cond_minus = detection_probability(project(only_minus, 0, "d+").post_state, 1, "u'-");
    r.results["conditional_u_plus_given_d_minus"] = cond_plus;
    r.results["conditional_u_minus_given_d_plus"] = cond_minus;
    bool cond_plus_ok = std::abs(cond_plus - 1) <= kExactTol;
    bool cond_minus_ok = std::abs(cond_minus - 1) <= kExactTol;
    r.add_verdict("s_prime_conditional", cond_plus_ok, "P(p+ -> U+ | p- on d-) = " + fmt(cond_plus));
    r.add_verdict("s_double_prime_conditional", cond_minus_ok, "P(p- -> U- | p+ on d+) = " + fmt(cond_minus));

    double p_uu = final_probs.count({"u'+", "u'-"}) ? final_probs.at({"u'+", "u'-"}) : 0.0;
    double joint = p_dd * cond_plus * cond_minus;
    r.results["p_uu"] = p_uu;
    r.results["p_dd_times_conditionals"] = joint;
    bool contradiction = dd_ok && uu_ok && cond_plus_ok && cond_minus_ok && joint > 0 && p_uu == 0.0;
    r.add_verdict("contradiction", contradiction,
                  "P(d+,d-) * P(U+|d-) * P(U-|d+) = " + fmt(joint) + " while P(U+,U-) = " + fmt(p_uu));

    Amplitude derived = only_plus.amplitude({"u'+", "c-"});
    r.results["sign_note"] =
        "coefficient of |u'+,c-> derived from the recombiner is " + fmt(derived.real() * std::sqrt(6.0)) +
        "/sqrt6 (printed form shows +1/sqrt6); moduli and the pairing of d- with u'+ agree";

    if (shots > 0) {
        auto counts_bs = sample_counts(*after_bs, shots, seed);
        auto counts_final = sample_counts(*final_state, shots, splitmix64(seed));
        json mc_bs = json::object();
        for (const auto &[label, n] : counts_bs) {
            mc_bs[join_label(label)] = static_cast<double>(n) / static_cast<double>(shots);
        }
        json mc_final = json::object();
        for (const auto &[label, n] : counts_final) {
            mc_final[join_label(label)] = static_cast<double>(n) / static_cast<double>(shots);
        }
        r.results["monte_carlo"] = {{"after_bs", mc_bs}, {"final", mc_final}};

        double f_dd = counts_bs.count({"d+", "d-"})
                          ? static_cast<double>(counts_bs.at({"d+", "d-"})) / static_cast<double>(shots)
                          : 0.0;
        auto [ok_dd, det_dd] = within_3_sigma(f_dd, 1.0 / 12, shots);
        r.add_verdict("mc_dd_frequency", ok_dd, det_dd);

        std::uint64_t n_uu = counts_final.count({"u'+", "u'-"}) ? counts_final.at({"u'+", "u'-"}) : 0;
        r.add_verdict("mc_no_uu", n_uu == 0, std::to_string(n_uu) + " joint U+ U- clicks in " + std::to_string(shots));

        bool others = counts_final.size() == 3;
        std::string det_others;
        for (const auto &[label, n] : counts_final) {
            auto [ok, d] = within_3_sigma(static_cast<double>(n) / static_cast<double>(shots), 1.0 / 3, shots);
            others = others && ok;
            det_others += join_label(label) + ": " + d + "; ";
        }
        r.add_verdict("mc_final_thirds", others, det_others);
    }
    return r;
}

}  // namespace ontobench
