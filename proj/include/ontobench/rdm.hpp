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

#ifndef ONTOBENCH_RDM_HPP
#define ONTOBENCH_RDM_HPP

// Monte Carlo engine for the random-discontinuous-motion particle model.
//
// Dynamics: at every tick of period tau the occupied cell (or, for an
// entangled pair, the occupied branch) is redrawn i.i.d. from the density.
// Pair jumps are synchronized in the lab frame, and the optional freezing
// rule is applied in that same frame: once particle 1 is read out, particle
// 2 keeps the branch it had at that moment.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontobench/random.hpp"
#include "ontobench/relativity.hpp"

namespace ontobench {

class RdmError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Probability of finding the particle in each named cell.
class DensityTable {
   public:
    /// Throws RdmError on negative or non-finite entries, an empty table, or
    /// a total that differs from 1 by more than 1e-9.
    explicit DensityTable(std::map<std::string, double> cells);

    const std::map<std::string, double> &cells() const {
        return cells_;
    }

   private:
    std::map<std::string, double> cells_;
};

/// Reads "cell,probability" lines. A header row whose second field is not a
/// number is skipped, as are blank lines and lines starting with '#'.
DensityTable parse_density_csv(std::istream &in);

using Histogram = std::map<std::string, std::uint64_t>;

/// n i.i.d. draws from `d`. Throws RdmError when n == 0.
Histogram sample_density(const DensityTable &d, std::uint64_t n, RngSeed seed);

/// Writes "cell,count,frequency" with a header row and LF line endings.
void write_histogram_csv(std::ostream &out, const Histogram &h);

struct Position {
    double x = 0;
    double y = 0;
    double z = 0;

    bool operator==(const Position &) const = default;
};

/// Two perfectly correlated position pairs: branch 0 puts particle 1 at r1
/// and particle 2 at r2, branch 1 puts them at r3 and r4.
struct RdmPairConfig {
    std::array<std::array<Position, 2>, 2> positions{};
    std::array<double, 2> branch_probabilities{0.5, 0.5};
    double tick = 1.0;

    /// Throws RdmError if probabilities don't sum to 1 within 1e-12, any is
    /// negative, positions repeat, or tick is not positive.
    void validate() const;
};

struct CorrelationReport {
    std::uint64_t trials = 0;
    std::uint64_t matches = 0;
    double mismatch_rate = 0;
    bool freezing = false;
    RngSeed seed = 0;
};

/// Simulates `trials` independent runs of a synchronized-jump pair read out
/// at t_meas1 (particle 1) and t_meas2 (particle 2). A trial matches when the
/// joint readout is (r1, r2) or (r3, r4).
///
/// Readouts in the same tick see the same branch. Requires
/// 0 <= t_meas1 <= t_meas2 and trials > 0.
CorrelationReport run_entangled_pair(const RdmPairConfig &cfg, double t_meas1, double t_meas2, bool freezing,
                                     std::uint64_t trials, RngSeed seed);

/// Fraction of `ticks` Bernoulli(p_present) draws that land in the packet.
double presence_fraction(double p_present, std::uint64_t ticks, RngSeed seed);

struct JumpRecord {
    SpacetimeEvent departure;
    SpacetimeEvent arrival;
    std::string particle;

    /// Throws RdmError when the arrival precedes the departure.
    void validate() const;
};

struct DuplicationReport {
    IntervalClass interval = IntervalClass::timelike;
    bool duplication_frame_exists = false;
    /// Velocity of the frame in which the two events are simultaneous.
    std::optional<double> velocity;
    /// Common time of the two events in that frame.
    std::optional<double> common_time;
    /// Pair analysis only: boosted landing time of particle B.
    std::optional<double> t2b_boosted;
    bool entanglement_violation_frame = false;
};

/// Frame analysis of a single jump: does some frame see the particle in both
/// packets at once?
DuplicationReport analyze_jump_frames(const JumpRecord &j, double c = 1.0);

/// Frame analysis of two synchronized jumps: particle A leaves its packet at
/// a.departure and particle B lands in its new packet at b.arrival. When
/// those events are spacelike, some frame sees B landing while A is still
/// leaving, which breaks the entanglement.
DuplicationReport analyze_pair_frames(const JumpRecord &a, const JumpRecord &b, double c = 1.0);

}  // namespace ontobench

#endif
