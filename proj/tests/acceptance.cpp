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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are pinned below and must not be loosened.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "ontobench/bundled.hpp"
#include "ontobench/cli.hpp"
#include "ontobench/measurement.hpp"
#include "ontobench/notation.hpp"
#include "ontobench/optics.hpp"
#include "ontobench/rdm.hpp"
#include "ontobench/relativity.hpp"
#include "ontobench/scenarios.hpp"
#include "ontobench/state.hpp"
#include "test_util.hpp"

using namespace ontobench;

namespace {

constexpr double kExact = 1e-12;
constexpr double kInvariant = 1e-9;
constexpr double kSigmas = 3.0;
constexpr double kSignificance = 0.001;
constexpr std::uint64_t kShots = 1000000;
constexpr std::uint64_t kDensitySamples = 100000;
constexpr std::uint64_t kPairTrials = 10000;
constexpr std::uint64_t kPresenceTicks = 100000;
constexpr RngSeed kSeed = 0;

const Amplitude I{0, 1};

/// Accumulates failed checks for one criterion.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ = failed_ || !ok;
    }
    void near(double got, double want, double tol, const std::string &what) {
        std::ostringstream ss;
        ss.precision(17);
        ss << what << ": got " << got << ", want " << want << " +- " << tol;
        expect(std::abs(got - want) <= tol, ss.str());
    }
    bool failed() const {
        return failed_;
    }
    std::string summary() const {
        std::string s;
        for (const auto &f : failures_) {
            s += (s.empty() ? "" : "; ") + f;
        }
        return s;
    }

   private:
    bool failed_ = false;
    std::vector<std::string> failures_;
};

struct HardyRun {
    BenchPlan plan;
    Ket after_bs;
    Ket final_state;
};

HardyRun run_hardy() {
    BenchPlan plan = parse_bench(bundled::hardy_bench());
    auto snaps = compile_and_run(plan);
    HardyRun h{plan, Ket::zero(2), Ket::zero(2)};
    for (const auto &[name, k] : snaps) {
        if (name == "after_bs") {
            h.after_bs = k;
        } else if (name == "final") {
            h.final_state = k;
        }
    }
    return h;
}

double binomial_sigma(double p, double n) {
    return std::sqrt(p * (1 - p) / n);
}

void criterion_1(Check &c) {
    HardyRun h = run_hardy();
    oracle::Vec4 dense = oracle::kron_apply(oracle::splitter(), oracle::splitter(), oracle::hardy_source());
    const double s = std::sqrt(12.0);
    const char *plus[] = {"c+", "d+"};
    const char *minus[] = {"c-", "d-"};
    const Amplitude printed[] = {-3 / s, I / s, I / s, -1 / s};
    c.expect(h.after_bs.size() == 4, "after_bs has 4 terms");
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            Amplitude got = h.after_bs.amplitude({plus[i], minus[j]});
            std::string label = std::string(plus[i]) + minus[j];
            c.expect(std::abs(got - printed[2 * i + j]) <= kExact, "amplitude " + label + " vs printed value");
            c.expect(std::abs(got - dense[2 * i + j]) <= kExact, "amplitude " + label + " vs dense oracle");
        }
    }
}

void criterion_2(Check &c) {
    HardyRun h = run_hardy();
    c.near(distribution(h.after_bs).at({"d+", "d-"}), 1.0 / 12, kExact, "P(d+,d-)");
    auto counts = sample_counts(h.after_bs, kShots, kSeed);
    double f = static_cast<double>(counts[{"d+", "d-"}]) / static_cast<double>(kShots);
    c.near(f, 1.0 / 12, kSigmas * binomial_sigma(1.0 / 12, kShots), "Monte Carlo P(d+,d-)");
}

void criterion_3(Check &c) {
    HardyRun h = run_hardy();
    c.expect(std::abs(h.final_state.amplitude({"u'+", "u'-"})) < kExact, "no u'+ u'- amplitude");
    Ket relabeled =
        relabel(h.plan.initial_state, {{"u+", "u'+"}, {"v+", "v'+"}, {"u-", "u'-"}, {"v-", "v'-"}});
    c.expect(equal_up_to_phase(h.final_state, relabeled, kExact), "final equals relabeled source up to phase");
    oracle::Vec4 dense = oracle::kron_apply(
        oracle::recombiner(), oracle::recombiner(),
        oracle::kron_apply(oracle::splitter(), oracle::splitter(), oracle::hardy_source()));
    c.expect(std::abs(dense[0]) < kExact, "dense oracle has no u'+ u'- amplitude");
}

void criterion_4(Check &c) {
    HardyRun h = run_hardy();
    const ModeMap &rec_plus = h.plan.stages[2].map;
    const ModeMap &rec_minus = h.plan.stages[3].map;

    Ket plus_only = apply_to_slot(h.after_bs, 0, rec_plus);
    c.expect(plus_only.size() == 3, "plus-side partial state has 3 terms");
    c.near(std::norm(plus_only.amplitude({"u'+", "c-"})), 1.0 / 6, kExact, "|u'+ c-|^2");
    c.near(std::norm(plus_only.amplitude({"v'+", "c-"})), 2.0 / 3, kExact, "|v'+ c-|^2");
    c.near(std::norm(plus_only.amplitude({"u'+", "d-"})), 1.0 / 6, kExact, "|u'+ d-|^2");
    MeasurementOutcome dm = project(plus_only, 1, "d-");
    c.near(detection_probability(dm.post_state, 0, "u'+"), 1.0, kExact, "P(u'+ | d-)");

    Ket minus_only = apply_to_slot(h.after_bs, 1, rec_minus);
    c.expect(minus_only.size() == 3, "minus-side partial state has 3 terms");
    c.near(std::norm(minus_only.amplitude({"c+", "u'-"})), 1.0 / 6, kExact, "|c+ u'-|^2");
    c.near(std::norm(minus_only.amplitude({"c+", "v'-"})), 2.0 / 3, kExact, "|c+ v'-|^2");
    c.near(std::norm(minus_only.amplitude({"d+", "u'-"})), 1.0 / 6, kExact, "|d+ u'-|^2");
    MeasurementOutcome dp = project(minus_only, 0, "d+");
    c.near(detection_probability(dp.post_state, 1, "u'-"), 1.0, kExact, "P(u'- | d+)");

    c.expect(equal_exact(apply_to_slot(plus_only, 1, rec_minus), h.final_state, kExact),
             "plus then minus reproduces the final state");
    c.expect(equal_exact(apply_to_slot(minus_only, 0, rec_plus), h.final_state, kExact),
             "minus then plus reproduces the final state");
}

void criterion_5(Check &c) {
    HardyRun h = run_hardy();
    double p_dd = distribution(h.after_bs).at({"d+", "d-"});
    Ket plus_only = apply_to_slot(h.after_bs, 0, h.plan.stages[2].map);
    Ket minus_only = apply_to_slot(h.after_bs, 1, h.plan.stages[3].map);
    double cond_plus = detection_probability(project(plus_only, 1, "d-").post_state, 0, "u'+");
    double cond_minus = detection_probability(project(minus_only, 0, "d+").post_state, 1, "u'-");
    double p_uu = detection_probability(h.final_state, 0, "u'+") > 0
                      ? detection_probability(project(h.final_state, 0, "u'+").post_state, 1, "u'-") *
                            detection_probability(h.final_state, 0, "u'+")
                      : 0.0;
    c.near(p_dd * cond_plus * cond_minus, 1.0 / 12, kExact, "P(d,d) P(U+|d-) P(U-|d+)");
    c.expect(p_dd * cond_plus * cond_minus > 0, "product is positive");
    c.expect(p_uu == 0.0, "P(U+ and U-) is zero");

    ScenarioReport r = scenario_hardy(kShots, kSeed);
    for (const auto &v : r.verdicts) {
        c.expect(v.pass, "verdict " + v.name + ": " + v.detail);
    }
    std::ostringstream out, err;
    int code = cli::dispatch({"scenario", "hardy"}, out, err);
    c.expect(code == cli::kSuccess, "'scenario hardy' exit code " + std::to_string(code) + " " + err.str());
}

void criterion_6(Check &c) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> vel(-0.99, 0.99);
    std::uniform_real_distribution<double> unit(-1, 1);
    std::uniform_real_distribution<double> coord(-10, 10);

    double worst_round_trip = 0;
    for (int i = 0; i < 1000; i++) {
        double v = i == 0 ? 0.99 : i == 1 ? -0.99 : vel(rng);
        SpacetimeEvent e{unit(rng), unit(rng)};
        SpacetimeEvent back = boost(boost(e, Frame(v)), Frame(-v));
        worst_round_trip = std::max({worst_round_trip, std::abs(back.t - e.t), std::abs(back.x - e.x)});
    }
    c.expect(worst_round_trip < kExact, "boost round trip error " + std::to_string(worst_round_trip));

    for (int i = 0; i < 1000; i++) {
        SpacetimeEvent a{coord(rng), coord(rng)};
        SpacetimeEvent b{coord(rng), coord(rng)};
        Frame f(vel(rng));
        c.near(interval_squared(boost(a, f), boost(b, f)), interval_squared(a, b), kInvariant, "interval invariance");
    }

    for (int i = 0; i < 1000; i++) {
        SpacetimeEvent a{coord(rng), coord(rng)};
        double dx = coord(rng);
        if (std::abs(dx) < 0.1) {
            dx = 0.1;
        }
        SpacetimeEvent b{a.t + 0.9 * unit(rng) * dx, a.x + dx};
        double v = simultaneity_velocity(a, b);
        c.expect(std::abs(v) < 1, "simultaneity velocity below c");
        Frame f(v);
        c.near(boost(a, f).t, boost(b, f).t, kInvariant, "boosted times coincide");
        if (i < 100) {
            // Oracle: direct substitution into the boost formula.
            double g = 1 / std::sqrt(1 - v * v);
            double t_a = g * (a.t - a.x * v);
            c.near(boosted_time_closed_form(a, b), t_a, kInvariant, "closed form vs boost");
        }
    }

    c.near(simultaneity_velocity({1, 1}, {2, 4}), 1.0 / 3, kExact, "worked example velocity");
    c.near(boosted_time_closed_form({1, 1}, {2, 4}), 0.70711, 1e-5, "worked example common time (printed)");
    c.near(boosted_time_closed_form({1, 1}, {2, 4}), 1 / std::sqrt(2.0), kInvariant, "worked example common time");
}

void criterion_7(Check &c) {
    OccupationKet shared = OccupationKet::from_ket(parse_ket(bundled::state("shared_particle")));
    c.expect(occupation_pair_expectation(shared) == 0.0, "<n_A n_B> is exactly 0 for one shared particle");
    c.expect(occupation_pair_expectation(OccupationKet::make({{{1, 1}, 1.0}})) == 1.0,
             "<n_A n_B> is exactly 1 for two electrons");
}

void criterion_8(Check &c) {
    std::istringstream csv{std::string(bundled::density_after_bs())};
    DensityTable d = parse_density_csv(csv);
    Histogram h = sample_density(d, kDensitySamples, kSeed);
    std::vector<std::uint64_t> observed;
    std::vector<double> expected;
    for (const auto &[cell, p] : d.cells()) {
        observed.push_back(h[cell]);
        expected.push_back(p);
    }
    double p_value = chi_square_p_value(observed, expected);
    c.expect(p_value > kSignificance, "chi-square p-value " + std::to_string(p_value));

    RdmPairConfig cfg;
    cfg.positions = {{{{Position{0, 0, 0}, Position{10, 0, 0}}}, {{Position{1, 0, 0}, Position{11, 0, 0}}}}};
    CorrelationReport frozen = run_entangled_pair(cfg, 0.5, 2.5, true, kPairTrials, kSeed);
    c.expect(frozen.mismatch_rate == 0.0, "mismatch with freezing is exactly 0");
    CorrelationReport free = run_entangled_pair(cfg, 0.5, 2.5, false, kPairTrials, kSeed);
    c.near(free.mismatch_rate, 0.5, kSigmas * binomial_sigma(0.5, kPairTrials), "mismatch without freezing");

    double presence = presence_fraction(0.5, kPresenceTicks, kSeed);
    c.near(presence, 0.5, kSigmas * binomial_sigma(0.5, kPresenceTicks), "presence fraction");
}

void criterion_9(Check &c) {
    ScenarioReport moving = scenario_frame_ambiguity({1, 0}, {2, 5}, 0.8);
    c.expect(moving.results.at("order_reversed").get<bool>(), "order reverses at v=0.8");
    c.expect(moving.results.at("ambiguity").get<bool>(), "ambiguity at v=0.8");
    c.expect(moving.all_pass(), "frame-ambiguity verdicts at v=0.8");
    ScenarioReport lab = scenario_frame_ambiguity({1, 0}, {2, 5}, 0.0);
    c.expect(!lab.results.at("ambiguity").get<bool>(), "no ambiguity at v=0");
    c.expect(lab.all_pass(), "frame-ambiguity verdicts at v=0");
}

void criterion_10(Check &c) {
    const double h = 1 / std::sqrt(2.0);
    const double r = 1 / std::sqrt(3.0);
    struct Golden {
        const char *name;
        std::vector<std::pair<BasisLabel, Amplitude>> table;
    };
    std::vector<Golden> goldens = {
        {"path_pair", {{{"a", "b"}, h}, {{"c", "d"}, h}}},
        {"shared_particle", {{{"1", "0"}, h}, {{"0", "1"}, h}}},
        {"hardy_source", {{{"u+", "v-"}, I * r}, {{"v+", "v-"}, r}, {{"v+", "u-"}, I * r}}},
    };
    for (const auto &g : goldens) {
        Ket k = parse_ket(bundled::state(g.name));
        c.expect(k.size() == g.table.size(), std::string(g.name) + " term count");
        for (const auto &[label, amp] : g.table) {
            c.expect(std::abs(k.amplitude(label) - amp) <= kExact, std::string(g.name) + " amplitude");
        }
    }

    std::mt19937_64 rng(62);
    for (int t = 0; t < 100; t++) {
        Ket k = test::random_ket(rng, 1 + t % 3, 6, true);
        Ket back = parse_ket(format_ket(k, kRoundTripDigits));
        c.expect(equal_up_to_phase(back, k, kInvariant), "round trip of " + format_ket(k));
    }

    for (const char *bad : {"|a,b", "(|a> + |b>", "|a> + |b,c>", "2|a> +", "|a>/sqrt(-1)", "&"}) {
        try {
            parse_ket(bad);
            c.expect(false, std::string("no error for '") + bad + "'");
        } catch (const ParseError &e) {
            c.expect(e.line() >= 1 && e.col() >= 1, std::string("positioned error for '") + bad + "'");
        }
    }

    const std::string alphabet = "|<>,+-()/*i0123456789.e sqrt#\nab'_";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int t = 0; t < 2000; t++) {
        std::string s;
        int n = static_cast<int>(pick(rng));
        for (int i = 0; i < n; i++) {
            s += alphabet[pick(rng)];
        }
        try {
            parse_ket(s);
        } catch (const ParseError &e) {
            c.expect(e.line() >= 1 && e.col() >= 1, "positioned fuzz error");
        } catch (const StateError &) {
        }
    }
}

}  // namespace

int main() {
    std::vector<std::pair<const char *, std::function<void(Check &)>>> criteria = {
        {"hardy intermediate state", criterion_1},
        {"joint detection probability", criterion_2},
        {"final state", criterion_3},
        {"partial transforms", criterion_4},
        {"contradiction verdict", criterion_5},
        {"relativity", criterion_6},
        {"no self-interaction", criterion_7},
        {"rdm statistics", criterion_8},
        {"frame ambiguity", criterion_9},
        {"parser", criterion_10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %zu: %s%s%s\n", c.failed() ? "FAIL" : "PASS", i + 1, criteria[i].first,
                    c.failed() ? ": " : "", c.summary().c_str());
        failed += c.failed();
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
