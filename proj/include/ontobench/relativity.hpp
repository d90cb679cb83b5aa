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

#ifndef ONTOBENCH_RELATIVITY_HPP
#define ONTOBENCH_RELATIVITY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ontobench {

class RelativityError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Relative tolerance on the interval discriminant (c dt)^2 - dx^2 below
/// which a pair counts as lightlike.
inline constexpr double kLightlikeTolerance = 1e-12;

/// A point in 1+1 dimensional spacetime.
struct SpacetimeEvent {
    double t = 0;
    double x = 0;
};

/// Inertial frame moving with velocity v along x relative to the lab.
class Frame {
   public:
    /// Throws RelativityError unless |v| < c and c > 0.
    explicit Frame(double v, double c = 1.0);

    double v() const {
        return v_;
    }
    double c() const {
        return c_;
    }
    double gamma() const;

   private:
    double v_;
    double c_;
};

enum class IntervalClass { timelike, spacelike, lightlike };

std::string_view to_string(IntervalClass c);

/// Lorentz transformation of `e` into frame `f`.
SpacetimeEvent boost(const SpacetimeEvent &e, const Frame &f);

/// (c dt)^2 - dx^2; positive for timelike pairs.
double interval_squared(const SpacetimeEvent &a, const SpacetimeEvent &b, double c = 1.0);

IntervalClass interval_class(const SpacetimeEvent &a, const SpacetimeEvent &b, double c = 1.0);

/// Velocity of the frame in which `a` and `b` are simultaneous,
/// v = (t_b - t_a) c^2 / (x_b - x_a). Throws RelativityError unless the pair
/// is spacelike.
double simultaneity_velocity(const SpacetimeEvent &a, const SpacetimeEvent &b, double c = 1.0);

/// The common time of `a` and `b` in their simultaneity frame, by the closed
/// form (x_b t_a - t_b x_a) / ((x_b - x_a) sqrt(1 - v^2/c^2)).
double boosted_time_closed_form(const SpacetimeEvent &a, const SpacetimeEvent &b, double c = 1.0);

/// Indices of `events` stably sorted by their time in frame `f`.
std::vector<std::size_t> order_in_frame(std::span<const SpacetimeEvent> events, const Frame &f);

}  // namespace ontobench

#endif
