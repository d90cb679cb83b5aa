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

#include "ontobench/state.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace ontobench;

namespace {
const Amplitude I{0, 1};
}

TEST(ket_make, normalizes_bell_pair) {
    Ket k = Ket::make(2, {{{"a", "b"}, 1.0}, {{"c", "d"}, 1.0}}, true);
    ASSERT_EQ(k.size(), 2u);
    ASSERT_TRUE(k.normalized());
    ASSERT_NEAR(k.amplitude({"a", "b"}).real(), 0.70711, 1e-5);
    ASSERT_NEAR(k.amplitude({"c", "d"}).real(), 0.70711, 1e-5);
    ASSERT_NEAR(k.norm_squared(), 1, 1e-12);
}

TEST(ket_make, merges_duplicates) {
    Ket k = Ket::make(1, {{{"x"}, 0.5}, {{"x"}, 0.5}});
    ASSERT_EQ(k.size(), 1u);
    ASSERT_EQ(k.amplitude({"x"}), Amplitude(1.0));
}

TEST(ket_make, rejects_bad_arity) {
    ASSERT_THROW(Ket::make(2, {{{"a", "b", "c"}, 1.0}}), StateError);
    ASSERT_THROW(Ket::make(0, {}), StateError);
}

TEST(ket_make, rejects_zero_state_with_normalize) {
    ASSERT_THROW(Ket::make(1, {{{"x"}, 1.0}, {{"x"}, -1.0}}, true), StateError);
    ASSERT_THROW(Ket::make(1, {}, true), StateError);
}

TEST(ket_make, rejects_non_finite_and_empty_labels) {
    ASSERT_THROW(Ket::make(1, {{{"x"}, std::nan("")}}), StateError);
    ASSERT_THROW(Ket::make(1, {{{""}, 1.0}}), StateError);
}

TEST(ket_make, prunes_cancelled_terms) {
    Ket k = Ket::make(1, {{{"x"}, 1.0}, {{"y"}, 1e-16}, {{"z"}, 1.0}, {{"z"}, -1.0}});
    ASSERT_EQ(k.size(), 1u);
    ASSERT_EQ(k.amplitude({"y"}), Amplitude(0.0));
}

TEST(superpose, linear) {
    Ket x = Ket::basis({"x"});
    Ket k = superpose({{Amplitude(0.25, 1), x}, {Amplitude(0.5, -2), x}});
    ASSERT_EQ(k.amplitude({"x"}), Amplitude(0.75, -1));
}

TEST(superpose, builds_source_state_normalized) {
    double r = 1 / std::sqrt(3.0);
    Ket k = superpose({{I * r, Ket::basis({"u+", "v-"})},
                       {r, Ket::basis({"v+", "v-"})},
                       {I * r, Ket::basis({"v+", "u-"})}});
    ASSERT_NEAR(k.norm_squared(), 1, 1e-12);
    ASSERT_TRUE(k.normalized());
    ASSERT_EQ(k.size(), 3u);
}

TEST(superpose, empty_is_zero) {
    Ket k = superpose({});
    ASSERT_EQ(k.size(), 0u);
}

TEST(superpose, slot_mismatch) {
    ASSERT_THROW(superpose({{1.0, Ket::basis({"a"})}, {1.0, Ket::basis({"a", "b"})}}), StateError);
}

TEST(superpose, distributes_over_term_lists) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        Ket a = test::random_ket(rng, 2, 3, false);
        Ket b = test::random_ket(rng, 2, 3, false);
        Amplitude wa = test::random_amp(rng);
        Amplitude wb = test::random_amp(rng);
        Ket lhs = superpose({{wa, a}, {wb, b}});
        std::vector<std::pair<BasisLabel, Amplitude>> terms;
        for (const auto &[l, x] : a.terms()) {
            terms.emplace_back(l, wa * x);
        }
        for (const auto &[l, x] : b.terms()) {
            terms.emplace_back(l, wb * x);
        }
        Ket rhs = Ket::make(2, terms);
        ASSERT_TRUE(equal_exact(lhs, rhs, 1e-12));
    }
}

TEST(tensor, product_basis) {
    Ket k = tensor(Ket::basis({"a"}), Ket::basis({"b"}));
    ASSERT_EQ(k.slots(), 2u);
    ASSERT_EQ(k.amplitude({"a", "b"}), Amplitude(1.0));
}

TEST(tensor, norm_multiplicative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; trial++) {
        Ket a = test::random_ket(rng, 1, 3, false);
        Ket b = test::random_ket(rng, 2, 3, false);
        ASSERT_NEAR(tensor(a, b).norm(), a.norm() * b.norm(), 1e-12);
    }
}

TEST(tensor, zero_annihilates) {
    Ket k = tensor(Ket::zero(1), Ket::basis({"a", "b"}));
    ASSERT_EQ(k.slots(), 3u);
    ASSERT_TRUE(k.empty());
}

TEST(distribution, after_first_splitters) {
    double s = std::sqrt(12.0);
    Ket k = Ket::make(2, {{{"c+", "c-"}, -3 / s}, {{"c+", "d-"}, I / s}, {{"d+", "c-"}, I / s}, {{"d+", "d-"}, -1 / s}});
    auto d = distribution(k);
    ASSERT_NEAR(d.at({"c+", "c-"}), 0.75, 1e-12);
    ASSERT_NEAR(d.at({"c+", "d-"}), 1.0 / 12, 1e-12);
    ASSERT_NEAR(d.at({"d+", "c-"}), 1.0 / 12, 1e-12);
    ASSERT_NEAR(d.at({"d+", "d-"}), 1.0 / 12, 1e-12);
}

TEST(distribution, final_state_has_no_uu) {
    double r = 1 / std::sqrt(3.0);
    Ket k = Ket::make(2, {{{"u'+", "v'-"}, I * r}, {{"v'+", "u'-"}, I * r}, {{"v'+", "v'-"}, r}});
    auto d = distribution(k);
    ASSERT_EQ(d.size(), 3u);
    ASSERT_EQ(d.count({"u'+", "u'-"}), 0u);
    for (const auto &[l, p] : d) {
        ASSERT_NEAR(p, 1.0 / 3, 1e-12);
    }
}

TEST(distribution, single_term) {
    auto d = distribution(Ket::basis({"q"}));
    ASSERT_EQ(d.size(), 1u);
    ASSERT_EQ(d.at({"q"}), 1.0);
}

TEST(distribution, rejects_unnormalized) {
    ASSERT_THROW(distribution(Ket::make(1, {{{"x"}, 2.0}})), StateError);
}

TEST(distribution, sums_to_one_for_random_kets) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; trial++) {
        Ket k = test::random_ket(rng, 1 + trial % 3, 1 + trial % 7, true);
        double total = 0;
        for (const auto &[l, p] : distribution(k)) {
            ASSERT_GE(p, 0);
            ASSERT_LE(p, 1);
            total += p;
        }
        ASSERT_NEAR(total, 1, 1e-9);
        ASSERT_NEAR(k.norm_squared(), 1, 1e-12);
    }
}

TEST(equal_up_to_phase, global_phase) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; trial++) {
        Ket k = test::random_ket(rng, 2, 4, true);
        double theta = std::uniform_real_distribution<double>(-10, 10)(rng);
        ASSERT_TRUE(equal_up_to_phase(k, k.scaled(std::polar(1.0, theta)), 1e-12));
    }
}

TEST(equal_up_to_phase, different_support) {
    Ket a = Ket::make(2, {{{"u+", "v-"}, I}, {{"v+", "v-"}, 1.0}, {{"v+", "u-"}, I}}, true);
    double s = std::sqrt(12.0);
    Ket b = Ket::make(2, {{{"c+", "c-"}, -3 / s}, {{"c+", "d-"}, I / s}, {{"d+", "c-"}, I / s}, {{"d+", "d-"}, -1 / s}});
    ASSERT_FALSE(equal_up_to_phase(a, b, 1e-12));
    ASSERT_FALSE(equal_up_to_phase(a, Ket::basis({"u+", "v-"}), 1e-12));
}

TEST(equal_up_to_phase, relative_phase_matters) {
    Ket a = Ket::make(1, {{{"x"}, 1.0}, {{"y"}, 1.0}}, true);
    Ket b = Ket::make(1, {{{"x"}, 1.0}, {{"y"}, -1.0}}, true);
    ASSERT_FALSE(equal_up_to_phase(a, b, 1e-12));
    ASSERT_FALSE(equal_exact(a, a.scaled(I), 1e-12));
}

TEST(canonicalize_phase, idempotent) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; trial++) {
        Ket k = test::random_ket(rng, 2, 5, true);
        Ket once = canonicalize_phase(k);
        Ket twice = canonicalize_phase(once);
        ASSERT_TRUE(equal_exact(once, twice, 0.0));
        Amplitude first = once.terms().begin()->second;
        ASSERT_EQ(first.imag(), 0.0);
        ASSERT_GT(first.real(), 0.0);
    }
}

TEST(relabel, renames_all_slots) {
    Ket k = relabel(Ket::basis({"u+", "u-"}), {{"u+", "u'+"}, {"u-", "u'-"}});
    ASSERT_EQ(k.amplitude({"u'+", "u'-"}), Amplitude(1.0));
}

TEST(occupation, shared_particle_never_co_occupies) {
    double r = 1 / std::sqrt(2.0);
    OccupationKet k = OccupationKet::make({{{1, 0}, r}, {{0, 1}, r}});
    ASSERT_TRUE(k.normalized());
    ASSERT_EQ(occupation_pair_expectation(k), 0.0);
}

TEST(occupation, two_electrons) {
    ASSERT_EQ(occupation_pair_expectation(OccupationKet::make({{{1, 1}, 1.0}})), 1.0);
}

TEST(occupation, mixed_support) {
    // Oracle by enumeration: weights 1/3 each, only (1,1) has n_A n_B = 1.
    OccupationKet k = OccupationKet::make({{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 1.0}}, true);
    ASSERT_NEAR(occupation_pair_expectation(k), 1.0 / 3, 1e-15);
}

TEST(occupation, exact_zero_on_single_particle_support) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; trial++) {
        OccupationKet k =
            OccupationKet::make({{{1, 0}, test::random_amp(rng)}, {{0, 1}, test::random_amp(rng)}}, true);
        ASSERT_EQ(occupation_pair_expectation(k), 0.0);
    }
}

TEST(occupation, rejects_bad_occupancy) {
    ASSERT_THROW(OccupationKet::make({{{2, 0}, 1.0}}), StateError);
    ASSERT_THROW(OccupationKet::from_ket(Ket::basis({"1", "x"})), StateError);
    ASSERT_THROW(occupation_pair_expectation(OccupationKet::make({{{1, 0}, 2.0}})), StateError);
}
