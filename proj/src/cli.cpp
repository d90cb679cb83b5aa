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

#include "ontobench/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "ontobench/notation.hpp"
#include "ontobench/rdm.hpp"
#include "ontobench/relativity.hpp"
#include "ontobench/scenarios.hpp"

namespace ontobench::cli {

namespace {

constexpr const char *kUsage =
    "usage: ontobench <scenario NAME [--seed N] [--shots N] [--trials N] [--out PATH] | parse --check FILE | "
    "bench run FILE [--snapshots] [--out PATH] | boost --v V [--c C] --event T,X | "
    "rdm-sample --density FILE --samples N [--seed N] [--out PATH]>";

/// Error that maps to exit code 2 with a one-line message.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(std::ostream &out, const std::optional<std::string> &path, const std::string &content) {
    if (path) {
        write_atomically(*path, content);
    } else {
        out << content;
    }
}

struct ScenarioArgs {
    std::string name;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> out;
};

int run_scenario_command(const ScenarioArgs &a, std::ostream &out, std::ostream &err) {
    const auto &names = scenario_names();
    if (std::find(names.begin(), names.end(), a.name) == names.end()) {
        throw UsageError("unknown scenario '" + a.name + "'");
    }
    nlohmann::json defaults = scenario_defaults(a.name);
    nlohmann::json overrides = nlohmann::json::object();
    auto set = [&](const char *flag, const char *key, const std::optional<std::uint64_t> &value) {
        if (!value) {
            return;
        }
        if (!defaults.contains(key)) {
            throw UsageError(std::string(flag) + " does not apply to scenario '" + a.name + "'");
        }
        overrides[key] = *value;
    };
    set("--seed", "seed", a.seed);
    set("--shots", "shots", a.shots);
    // The presence simulation counts ticks; each tick is one Bernoulli trial.
    set("--trials", a.name == "vanishing" ? "ticks" : "trials", a.trials);

    ScenarioReport report = run_scenario(a.name, overrides);
    emit(out, a.out, report.to_json().dump(2) + "\n");
    for (const auto &v : report.verdicts) {
        if (!v.pass) {
            err << "verdict failed: " << v.name << ": " << v.detail << "\n";
        }
    }
    return report.all_pass() ? kSuccess : kVerdictFailed;
}

int run_parse_check(const std::string &path, std::ostream &out) {
    std::string text = read_file(path);
    try {
        if (path.ends_with(".ket")) {
            Ket k = parse_ket(text);
            out << "ok: " << path << ": ket with " << k.slots() << " slots, " << k.size() << " terms"
                << (k.normalized() ? ", normalized" : "") << "\n";
        } else if (path.ends_with(".bench")) {
            BenchPlan plan = parse_bench(text);
            out << "ok: " << path << ": bench with " << plan.slots << " slots, " << plan.stages.size() << " stages, "
                << plan.snapshots.size() << " snapshots\n";
        } else {
            throw UsageError("parse --check expects a .ket or .bench file");
        }
    } catch (const ParseError &e) {
        throw UsageError(e.located(path));
    }
    return kSuccess;
}

int run_bench(const std::string &path, bool snapshots, const std::optional<std::string> &out_path, std::ostream &out) {
    std::string text = read_file(path);
    std::vector<std::pair<std::string, Ket>> states;
    try {
        states = compile_and_run(parse_bench(text));
    } catch (const ParseError &e) {
        throw UsageError(e.located(path));
    }
    nlohmann::json snaps = nlohmann::json::object();
    for (const auto &[name, k] : states) {
        if (snapshots || name == "final") {
            snaps[name] = amplitude_table(k);
        }
    }
    nlohmann::json doc = {{"bench", path}, {"snapshots", snaps}};
    emit(out, out_path, doc.dump(2) + "\n");
    return kSuccess;
}

double parse_number(std::string_view s, const char *what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError(std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

int run_boost(double v, double c, const std::string &event, std::ostream &out) {
    auto comma = event.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--event expects T,X");
    }
    SpacetimeEvent e{parse_number(std::string_view(event).substr(0, comma), "event time"),
                     parse_number(std::string_view(event).substr(comma + 1), "event position")};
    std::optional<Frame> f;
    try {
        f.emplace(v, c);
    } catch (const RelativityError &ex) {
        throw UsageError(ex.what());
    }
    SpacetimeEvent b = boost(e, *f);
    out << nlohmann::json({{"t", b.t}, {"x", b.x}}).dump() << "\n";
    return kSuccess;
}

int run_rdm_sample(const std::string &density, std::uint64_t samples, std::uint64_t seed,
                   const std::optional<std::string> &out_path, std::ostream &out) {
    std::ifstream in(density);
    if (!in) {
        throw UsageError("cannot read '" + density + "'");
    }
    std::optional<DensityTable> table;
    try {
        table.emplace(parse_density_csv(in));
    } catch (const RdmError &e) {
        throw UsageError(density + ": " + e.what());
    }
    if (samples == 0) {
        throw UsageError("--samples must be positive");
    }
    std::ostringstream csv;
    write_histogram_csv(csv, sample_density(*table, samples, seed));
    emit(out, out_path, csv.str());
    return kSuccess;
}

}  // namespace

void write_atomically(const std::filesystem::path &path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        }
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("failed writing '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum-foundations simulation workbench", "ontobench"};
    app.require_subcommand(1);

    ScenarioArgs sa;
    auto *scenario = app.add_subcommand("scenario", "Run a scripted analysis and emit its JSON report");
    scenario->add_option("name", sa.name, "Scenario name")->required();
    scenario->add_option("--seed", sa.seed, "Master random seed");
    scenario->add_option("--shots", sa.shots, "Monte Carlo shots");
    scenario->add_option("--trials", sa.trials, "Monte Carlo trials");
    scenario->add_option("--out", sa.out, "Report path (default: standard output)");

    std::string check_path;
    auto *parse = app.add_subcommand("parse", "Validate a .ket or .bench file");
    parse->add_option("--check", check_path, "File to check")->required();

    std::string bench_path;
    bool bench_snapshots = false;
    std::optional<std::string> bench_out;
    auto *bench = app.add_subcommand("bench", "Bench layout commands");
    bench->require_subcommand(1);
    auto *bench_run = bench->add_subcommand("run", "Evolve a bench layout and print its states");
    bench_run->add_option("file", bench_path, "Bench file")->required();
    bench_run->add_flag("--snapshots", bench_snapshots, "Include every named snapshot");
    bench_run->add_option("--out", bench_out, "Output path (default: standard output)");

    double boost_v = 0;
    double boost_c = 1;
    std::string boost_event;
    auto *boost_cmd = app.add_subcommand("boost", "Lorentz-transform one event");
    boost_cmd->add_option("--v", boost_v, "Frame velocity")->required();
    boost_cmd->add_option("--c", boost_c, "Speed of light");
    boost_cmd->add_option("--event", boost_event, "Event as T,X")->required();

    std::string density_path;
    std::uint64_t samples = 0;
    std::uint64_t sample_seed = 0;
    std::optional<std::string> sample_out;
    auto *rdm = app.add_subcommand("rdm-sample", "Sample a density table into a histogram CSV");
    rdm->add_option("--density", density_path, "Density CSV (cell,probability)")->required();
    rdm->add_option("--samples", samples, "Number of draws")->required();
    rdm->add_option("--seed", sample_seed, "Random seed");
    rdm->add_option("--out", sample_out, "Output path (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << kUsage << "\n";
        return kUsageError;
    }

    try {
        if (*scenario) {
            return run_scenario_command(sa, out, err);
        }
        if (*parse) {
            return run_parse_check(check_path, out);
        }
        if (*bench_run) {
            return run_bench(bench_path, bench_snapshots, bench_out, out);
        }
        if (*boost_cmd) {
            return run_boost(boost_v, boost_c, boost_event, out);
        }
        if (*rdm) {
            return run_rdm_sample(density_path, samples, sample_seed, sample_out, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n" << kUsage << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        // Domain errors from the library: bad physical parameters.
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << kUsage << "\n";
    return kUsageError;
}

}  // namespace ontobench::cli
