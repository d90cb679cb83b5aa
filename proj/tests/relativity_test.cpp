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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace ontobench;

namespace {

// Independent oracle: the boost written as a rapidity matrix acting on (ct, x).
SpacetimeEvent rapidity_boost(SpacetimeEvent e, double v, double c) {
    double eta = std::atanh(v / c);
    double ct = c * e.t;
    double ct2 = std::cosh(eta) * ct - std::sinh(eta) * e.x;
    double x2 = -std::sinh(eta) * ct + std::cosh(eta) * e.x;
    return {ct2 / c, x2};
}

SpacetimeEvent random_event(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-10, 10);
    return {u(rng), u(rng)};
}

/// Random spacelike pair with |dx| at least 1.1 |c dt|.
std::pair<SpacetimeEvent, SpacetimeEvent> random_spacelike(std::mt19937_64 &rng, double c) {
    std::uniform_real_distribution<double> u(-10, 10);
    std::uniform_real_distribution<double> ratio(0.0, 0.9);
    SpacetimeEvent a = random_event(rng);
    double dx = u(rng);
    if (std::abs(dx) < 0.1) {
        dx = 0.1;
    }
    double dt = ratio(rng) * dx / c * (u(rng) < 0 ? -1 : 1);
    return {a, {a.t + dt, a.x + dx}};
}

}  // namespace

TEST(frame, rejects_superluminal) {
    EXPECT_THROW(Frame(1.0), RelativityError);
    EXPECT_THROW(Frame(-1.5), RelativityError);
    EXPECT_THROW(Frame(0.5, 0.0), RelativityError);
    EXPECT_THROW(Frame(std::nan("")), RelativityError);
    try {
        Frame(1.5);
        FAIL();
    } catch (const RelativityError &e) {
        EXPECT_STREQ(e.what(), "|v| must be < c");
    }
    EXPECT_NEAR(Frame(0.5).gamma(), 1.15470, 1e-5);
}

TEST(boost, worked_example) {
    SpacetimeEvent e = boost({1, 1}, Frame(0.5));
    EXPECT_NEAR(e.t, 0.57735, 1e-5);
    EXPECT_NEAR(e.x, 0.57735, 1e-5);
}

TEST(boost, zero_velocity_is_identity) {
    SpacetimeEvent e = boost({3.25, -7.5}, Frame(0));
    EXPECT_EQ(e.t, 3.25);
    EXPECT_EQ(e.x, -7.5);
}

TEST(boost, matches_rapidity_oracle) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> vel(-0.99, 0.99);
    for (int i = 0; i < 1000; i++) {
        double c = i % 2 ? 1.0 : 3.0;
        double v = vel(rng) * c;
        SpacetimeEvent e = random_event(rng);
        SpacetimeEvent got = boost(e, Frame(v, c));
        SpacetimeEvent want = rapidity_boost(e, v, c);
        EXPECT_NEAR(got.t, want.t, 1e-9);
        EXPECT_NEAR(got.x, want.x, 1e-9);
    }
}

TEST(boost, round_trip) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> vel(-0.99, 0.99);
    std::uniform_real_distribution<double> coord(-1, 1);
    for (int i = 0; i < 1000; i++) {
        double v = vel(rng);
        SpacetimeEvent e{coord(rng), coord(rng)};
        SpacetimeEvent back = boost(boost(e, Frame(v)), Frame(-v));
        EXPECT_LT(std::abs(back.t - e.t), 1e-12);
        EXPECT_LT(std::abs(back.x - e.x), 1e-12);
    }
    for (double v : {0.99, -0.99}) {
        SpacetimeEvent e{1, 1};
        SpacetimeEvent back = boost(boost(e, Frame(v)), Frame(-v));
        EXPECT_LT(std::abs(back.t - e.t), 1e-12);
        EXPECT_LT(std::abs(back.x - e.x), 1e-12);
    }
}

TEST(interval_squared, invariant_under_boosts) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> vel(-0.99, 0.99);
    for (int i = 0; i < 1000; i++) {
        SpacetimeEvent a = random_event(rng);
        SpacetimeEvent b = random_event(rng);
        Frame f(vel(rng));
        EXPECT_NEAR(interval_squared(boost(a, f), boost(b, f)), interval_squared(a, b), 1e-9);
    }
}

TEST(interval_class, examples) {
    EXPECT_EQ(interval_class({0, 0}, {1, 3}), IntervalClass::spacelike);
    EXPECT_EQ(interval_class({0, 0}, {2, 1}), IntervalClass::timelike);
    EXPECT_EQ(interval_class({0, 0}, {1, 1}), IntervalClass::lightlike);
    EXPECT_EQ(interval_class({0, 0}, {1, -1}), IntervalClass::lightlike);
    EXPECT_EQ(interval_class({0, 0}, {1, 2}, 2.0), IntervalClass::lightlike);
    EXPECT_EQ(to_string(IntervalClass::spacelike), "spacelike");
}

TEST(interval_class, symmetric) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 200; i++) {
        SpacetimeEvent a = random_event(rng);
        SpacetimeEvent b = random_event(rng);
        EXPECT_EQ(interval_class(a, b), interval_class(b, a));
    }
}

TEST(simultaneity_velocity, examples) {
    double v = simultaneity_velocity({0, 0}, {1, 3});
    EXPECT_NEAR(v, 0.33333, 1e-5);
    EXPECT_NEAR(boost({0, 0}, Frame(v)).t, 0, 1e-12);
    EXPECT_NEAR(boost({1, 3}, Frame(v)).t, 0, 1e-12);

    v = simultaneity_velocity({1, 1}, {2, 4});
    EXPECT_NEAR(v, 0.33333, 1e-5);
    EXPECT_NEAR(boost({1, 1}, Frame(v)).t, 0.70711, 1e-5);
    EXPECT_NEAR(boost({2, 4}, Frame(v)).t, 0.70711, 1e-5);
}

TEST(simultaneity_velocity, rejects_causal_pairs) {
    EXPECT_THROW(simultaneity_velocity({0, 0}, {2, 1}), RelativityError);
    EXPECT_THROW(simultaneity_velocity({0, 0}, {1, 1}), RelativityError);
    EXPECT_THROW(simultaneity_velocity({0, 0}, {1, 0}), RelativityError);
    EXPECT_THROW(simultaneity_velocity({0, 0}, {0, 0}), RelativityError);
}

TEST(simultaneity_velocity, spacelike_pairs_become_simultaneous) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 1000; i++) {
        double c = i % 3 == 0 ? 2.5 : 1.0;
        auto [a, b] = random_spacelike(rng, c);
        double v = simultaneity_velocity(a, b, c);
        EXPECT_LT(std::abs(v), c);
        Frame f(v, c);
        EXPECT_NEAR(boost(a, f).t, boost(b, f).t, 1e-9);
    }
}

TEST(boosted_time_closed_form, examples) {
    EXPECT_NEAR(boosted_time_closed_form({1, 1}, {2, 4}), 0.70711, 1e-5);
    EXPECT_NEAR(boosted_time_closed_form({1, 1}, {2, 4}), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_EQ(boosted_time_closed_form({0, 0}, {1, 3}), 0.0);
    EXPECT_THROW(boosted_time_closed_form({0, 0}, {2, 1}), RelativityError);
}

TEST(boosted_time_closed_form, agrees_with_boost) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 100; i++) {
        auto [a, b] = random_spacelike(rng, 1.0);
        double v = simultaneity_velocity(a, b);
        double closed = boosted_time_closed_form(a, b);
        EXPECT_NEAR(closed, rapidity_boost(a, v, 1.0).t, 1e-9);
        EXPECT_NEAR(closed, rapidity_boost(b, v, 1.0).t, 1e-9);
    }
}

TEST(order_in_frame, reversal_example) {
    std::vector<SpacetimeEvent> ev{{1, 0}, {2, 5}};
    Frame f(0.8);
    EXPECT_NEAR(boost(ev[0], f).t, 1.6667, 1e-4);
    EXPECT_NEAR(boost(ev[1], f).t, -3.3333, 1e-4);
    EXPECT_EQ(order_in_frame(ev, f), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(order_in_frame(ev, Frame(0)), (std::vector<std::size_t>{0, 1}));
}

TEST(order_in_frame, stable_on_ties) {
    std::vector<SpacetimeEvent> ev{{1, 0}, {1, 0}, {0, 0}};
    EXPECT_EQ(order_in_frame(ev, Frame(0)), (std::vector<std::size_t>{2, 0, 1}));
}

TEST(order_in_frame, timelike_order_is_invariant) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> vel(-0.999, 0.999);
    std::uniform_real_distribution<double> frac(-0.95, 0.95);
    for (int i = 0; i < 100; i++) {
        SpacetimeEvent a = random_event(rng);
        double dt = 0.1 + std::abs(frac(rng)) * 5;
        SpacetimeEvent b{a.t + dt, a.x + frac(rng) * dt};
        std::vector<SpacetimeEvent> ev{a, b};
        for (int j = 0; j < 100; j++) {
            EXPECT_EQ(order_in_frame(ev, Frame(vel(rng))), (std::vector<std::size_t>{0, 1}));
        }
    }
}
