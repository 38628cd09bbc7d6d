// Copyright 2026 The mubforge Authors
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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "mubforge/qpke.h"

using namespace mubforge;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Qpke, measurement_probabilities) {
    EXPECT_DOUBLE_EQ(p0(0, 5, Basis::Z), 1.0);
    EXPECT_NEAR(p0(16, 5, Basis::Z), 0.0, 1e-15);
    EXPECT_NEAR(p0(8, 5, Basis::Z), 0.5, 1e-15);
    EXPECT_NEAR(p0(8, 5, Basis::X), 1.0, 1e-15);
    for (uint64_t k = 0; k < 32; k++) {
        EXPECT_NEAR(p0_axis(k, 5, 0, 0), p0(k, 5, Basis::Z), 1e-14);
        EXPECT_NEAR(p0_axis(k, 5, kPi / 2, 0), p0(k, 5, Basis::X), 1e-14);
    }
}

TEST(Qpke, posterior_normalized) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; t++) {
        unsigned T = 1 + rng() % 6;
        Tally tally{static_cast<unsigned>(rng() % (T + 1)), static_cast<unsigned>(rng() % (T + 1))};
        double sum = 0;
        for (uint64_t k = 0; k < 64; k++) {
            sum += posterior(k, tally, 6, T);
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
    for (uint64_t k = 0; k < 8; k++) {
        EXPECT_NEAR(posterior(k, Tally{0, 0}, 3, 0), 1.0 / 8, 1e-15);
    }
    // Both bases report only zeros: k = 0 and k = 1 of four keys fit equally well.
    double best = 0;
    uint64_t arg = 99;
    for (uint64_t k = 0; k < 4; k++) {
        double p = posterior(k, Tally{1, 1}, 2, 1);
        if (p > best) {
            best = p;
            arg = k;
        }
    }
    EXPECT_TRUE(arg == 0 || arg == 1);
    EXPECT_NEAR(posterior(0, Tally{1, 1}, 2, 1), posterior(1, Tally{1, 1}, 2, 1), 1e-12);
}

TEST(Qpke, psuc_mean_matches_per_key_average) {
    TallyModel model(6, 3);
    double avg = 0;
    for (uint64_t k = 0; k < 64; k++) {
        double p = model.psuc(k);
        EXPECT_GE(p, 0.5 - 1e-12);
        EXPECT_LE(p, 1.0 + 1e-12);
        avg += p;
    }
    EXPECT_NEAR(avg / 64, model.psuc_mean(), 1e-12);
}

TEST(Qpke, oscillation_shrinks_with_t) {
    // One copy gives the same success for every key.
    TallyModel one(10, 1);
    EXPECT_NEAR(one.psuc(0), one.psuc(77), 1e-12);
    double prev = 1;
    for (unsigned T : {2u, 3u, 5u, 10u, 20u}) {
        TallyModel model(10, T);
        double lo = 1, hi = 0;
        for (uint64_t k = 0; k < 1024; k++) {
            double p = model.psuc(k);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        EXPECT_LT(hi - lo, prev) << T;
        prev = hi - lo;
    }
}

TEST(Qpke, individual_never_beats_collective) {
    for (unsigned T = 1; T <= 20; T++) {
        double mean = psuc_wbit_mean(8, T);
        EXPECT_LE(mean, popt(T) + 1e-12) << T;
        if (T > 1) {
            EXPECT_LE(mean, 1 - 1.0 / (6.0 * T) + 2e-3) << T;
        }
    }
}

TEST(Qpke, popt_values) {
    EXPECT_NEAR(popt(1), 0.5 + std::sqrt(2.0) / 4, 1e-12);
    for (unsigned T = 1; T < 60; T++) {
        EXPECT_LT(popt(T), popt(T + 1));
    }
    EXPECT_LT(std::abs(popt(50) - (1 - 1.0 / 400)), 5e-4);
}

TEST(Qpke, q_s_recursion) {
    for (double lambda : {-0.3, 0.0, 0.5, 0.9, 1.0}) {
        double q1 = q_s(lambda, 1);
        EXPECT_DOUBLE_EQ(q1, 0.5 + lambda / 2);
        for (unsigned s = 2; s <= 20; s++) {
            double rec = q1 * q_s(lambda, s - 1) + (1 - q1) * (1 - q_s(lambda, s - 1));
            EXPECT_NEAR(q_s(lambda, s), rec, 1e-12);
        }
    }
    EXPECT_DOUBLE_EQ(q_s(0, 7), 0.5);
}

TEST(Qpke, s_min_relations) {
    EXPECT_EQ(s_min(10, 0.5).exact, 1u);
    auto r = s_min(10, 0.01);
    EXPECT_LE(static_cast<double>(r.exact), r.bound + 1);
    EXPECT_LE(static_cast<double>(r.forward_exact), r.forward_bound + 1);
    EXPECT_NEAR(r.forward_exact, 2.0 / 3.0 * r.exact, 1.0);
    EXPECT_DOUBLE_EQ(forward_search(7, 1), 1 - 1.0 / 28);
    EXPECT_THROW(s_min(3, 0.0), std::invalid_argument);
}

TEST(Qpke, single_key_values) {
    EXPECT_DOUBLE_EQ(single_key_k(0, 8, 0), 1.0);
    auto b = single_key(8, 3, 0);
    EXPECT_NEAR(b.eve_mean, 0.75, 1e-12);
    EXPECT_NEAR(b.p_s, 0.5 + 0.5 * 0.125, 1e-12);
    for (double a : {-1.2, -0.4, 0.3, 1.0}) {
        auto ba = single_key(8, 1, a);
        EXPECT_NEAR(ba.eve_mean, ba.eve_closed, 1e-12) << a;
    }
    EXPECT_NEAR(single_ratio(alpha_min_single()), std::sqrt(3.0) - 1, 1e-9);
}

TEST(Qpke, double_key_values) {
    for (uint64_t k = 0; k < 16; k++) {
        EXPECT_NEAR(double_key_k(k, 4, 0), (2 + std::sqrt(2.0)) / 4, 1e-12);
    }
    for (double a : {-1.0, 0.2, 0.9}) {
        auto b = double_key(6, 1, a);
        EXPECT_NEAR(b.eve_mean, b.eve_closed, 1e-12) << a;
    }
    EXPECT_NEAR(double_ratio(alpha_min_double()), std::sqrt(2.0) * (std::sqrt(1 + std::sqrt(2.0)) - 1), 1e-9);
    EXPECT_NEAR(double_key(6, 200, 0).p_s, 0.5, 1e-12);
}

TEST(Qpke, probabilities_monotone_in_s) {
    for (double a : {0.0, alpha_min_double()}) {
        double prev = 1.0;
        for (unsigned s = 1; s <= 30; s++) {
            double p = double_key(4, s, a).p_s;
            EXPECT_LE(p, prev);
            EXPECT_GE(p, 0.5);
            prev = p;
        }
    }
}

TEST(Qpke, grid_argmin_matches_closed_form) {
    double best = 10, arg = 0;
    for (double a = -kPi / 2; a <= kPi / 2; a += 1e-3) {
        double v = single_ratio(a);
        if (v < best) {
            best = v;
            arg = a;
        }
    }
    EXPECT_NEAR(std::abs(arg), alpha_min_single(), 1e-3);
}

TEST(Qpke, alpha_averages_values) {
    auto a = alpha_averages();
    EXPECT_NEAR(a.single_full, 0.773, 2e-3);
    EXPECT_NEAR(a.double_full, 0.830, 2e-3);
    EXPECT_NEAR(a.single_third, 0.740, 2e-3);
    EXPECT_NEAR(a.double_lim, 0.816, 2e-3);
    EXPECT_NEAR(integrate([](double x) { return x * x; }, 0, 3), 9.0, 1e-10);
}

TEST(Qpke, holevo_prior_basics) {
    auto h1 = holevo_prior(8, 1);
    EXPECT_EQ(h1.C.rows(), 2);
    EXPECT_NEAR(h1.C.trace(), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(holevo_prior(8, 3).bound, 2.0);
    EXPECT_TRUE(holevo_prior(24, 4, 20).n_ok);
    EXPECT_FALSE(holevo_prior(8, 4, 20).n_ok);
    for (unsigned tau = 1; tau <= 8; tau++) {
        auto h = holevo_prior(10, tau);
        EXPECT_NEAR(h.C.trace(), 1.0, 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.C);
        EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
    }
}

TEST(Qpke, monte_carlo_is_reproducible) {
    auto a = monte_carlo(Attack::Single, 8, 0, 200000, 5, 1);
    auto b = monte_carlo(Attack::Single, 8, 0, 200000, 5, 3);
    EXPECT_EQ(a.successes, b.successes);
    auto one = monte_carlo(Attack::Double, 8, 0, 1, 1);
    EXPECT_TRUE(one.estimate == 0.0 || one.estimate == 1.0);
}

TEST(Qpke, monte_carlo_sweep_within_three_sigma) {
    for (double alpha : {0.0, 0.5, -1.1}) {
        for (unsigned n : {3u, 10u}) {
            auto s = monte_carlo(Attack::Single, n, alpha, 100000, 17 + n);
            EXPECT_NEAR(s.estimate, single_key(n, 1, alpha).eve_mean, 3 * s.stderr_) << alpha << " " << n;
            auto d = monte_carlo(Attack::Double, n, alpha, 100000, 29 + n);
            EXPECT_NEAR(d.estimate, double_key(n, 1, alpha).eve_mean, 3 * d.stderr_) << alpha << " " << n;
        }
    }
}

TEST(Qpke, figure_tables) {
    auto f = figure_csv("7.3", 10, 50, 5);
    EXPECT_EQ(f.substr(0, f.find('\n')), "s,p_alpha0,p_alphamin");
    EXPECT_EQ(std::count(f.begin(), f.end(), '\n'), 6);
    auto g = figure_csv("6.2", 6, 4);
    EXPECT_EQ(std::count(g.begin(), g.end(), '\n'), 5);
    EXPECT_THROW(figure_csv("9.9", 10, 5), std::invalid_argument);
}
