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

#include "ontobench/relativity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ontobench {

Frame::Frame(double v, double c) : v_(v), c_(c) {
    if (!std::isfinite(c) || !(c > 0)) {
        throw RelativityError("c must be positive");
    }
    if (!std::isfinite(v) || !(std::abs(v) < c)) {
        throw RelativityError("|v| must be < c");
    }
}

double Frame::gamma() const {
    double beta = v_ / c_;
    return 1 / std::sqrt(1 - beta * beta);
}

std::string_view to_string(IntervalClass c) {
    switch (c) {
        case IntervalClass::timelike:
            return "timelike";
        case IntervalClass::spacelike:
            return "spacelike";
        case IntervalClass::lightlike:
            return "lightlike";
    }
    return "?";
}

SpacetimeEvent boost(const SpacetimeEvent &e, const Frame &f) {
    double g = f.gamma();
    double v = f.v();
    double c = f.c();
    return {g * (e.t - e.x * v / (c * c)), g * (e.x - e.t * v)};
}

double interval_squared(const SpacetimeEvent &a, const SpacetimeEvent &b, double c) {
    double ct = c * (b.t - a.t);
    double dx = b.x - a.x;
    return ct * ct - dx * dx;
}

IntervalClass interval_class(const SpacetimeEvent &a, const SpacetimeEvent &b, double c) {
    double ct = c * (b.t - a.t);
    double dx = b.x - a.x;
    double d = ct * ct - dx * dx;
    double scale = std::max(1.0, ct * ct + dx * dx);
    if (std::abs(d) <= kLightlikeTolerance * scale) {
        return IntervalClass::lightlike;
    }
    return d > 0 ? IntervalClass::timelike : IntervalClass::spacelike;
}

double simultaneity_velocity(const SpacetimeEvent &a, const SpacetimeEvent &b, double c) {
    switch (interval_class(a, b, c)) {
        case IntervalClass::timelike:
            throw RelativityError("events are timelike separated; no frame makes them simultaneous");
        case IntervalClass::lightlike:
            throw RelativityError("events are lightlike separated; the simultaneity frame would need |v| = c");
        case IntervalClass::spacelike:
            break;
    }
    return (b.t - a.t) * c * c / (b.x - a.x);
}

double boosted_time_closed_form(const SpacetimeEvent &a, const SpacetimeEvent &b, double c) {
    double v = simultaneity_velocity(a, b, c);
    double beta = v / c;
    return (b.x * a.t - b.t * a.x) / ((b.x - a.x) * std::sqrt(1 - beta * beta));
}

std::vector<std::size_t> order_in_frame(std::span<const SpacetimeEvent> events, const Frame &f) {
    std::vector<double> times(events.size());
    for (std::size_t i = 0; i < events.size(); i++) {
        times[i] = boost(events[i], f).t;
    }
    std::vector<std::size_t> order(events.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return times[i] < times[j]; });
    return order;
}

}  // namespace ontobench
