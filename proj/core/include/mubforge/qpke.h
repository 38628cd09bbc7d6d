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

// Attacks on the rotation-angle public-key scheme.
//
// A key integer k in Z_{2^n} becomes the qubit cos(k theta/2)|0> + sin(k theta/2)|1> with
// theta = pi / 2^{n-1}. The displaced variant applies R_x(alpha) first, so a measurement
// along the axis at angle phi in the z-x plane yields 0 with probability
// (1 + cos(alpha) cos(k theta - phi)) / 2.

#ifndef MUBFORGE_QPKE_H
#define MUBFORGE_QPKE_H

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mubforge {

enum class Basis { Z, X };

double theta(unsigned n);
double p0(uint64_t k, unsigned n, Basis b);
/// Zero-outcome probability along the z-x axis at angle phi for the displaced key state.
double p0_axis(uint64_t k, unsigned n, double phi, double alpha);

struct Tally {
    unsigned z0 = 0;
    unsigned x0 = 0;
};

/// p(tally | k) for T measurements in each basis.
double tally_likelihood(const Tally &t, uint64_t k, unsigned n, unsigned T);
/// p(k | tally) with a uniform prior over all 2^n keys.
double posterior(uint64_t k, const Tally &t, unsigned n, unsigned T);

/// Per-tally summary shared by the bit-estimation functions, n <= 16 and T <= 64.
class TallyModel {
   public:
    TallyModel(unsigned n, unsigned T);

    unsigned n() const { return n_; }
    unsigned T() const { return T_; }
    /// Success of guessing one codeword bit for key k.
    double psuc(uint64_t k) const;
    /// Average of psuc over k.
    double psuc_mean() const;

   private:
    unsigned n_;
    unsigned T_;
    // Indexed by z0 * (T+1) + x0.
    std::vector<double> p_tally_;
    std::vector<double> rz_;
    std::vector<double> rx_;
    std::vector<double> rnorm_;
    // Binomial pmfs per key, (T+1) entries each.
    std::vector<double> bz_;
    std::vector<double> bx_;
};

double psuc_wbit(uint64_t k, unsigned n, unsigned T);
double psuc_wbit_mean(unsigned n, unsigned T);

/// Optimal collective estimate with 2T copies.
double popt(unsigned T);

/// 1/2 + lambda^s / 2
double q_s(double lambda, unsigned s);

struct SMinResult {
    /// Smallest s with q_s(1 - 1/(3T), s) < 1/2 + epsilon.
    unsigned exact = 0;
    /// Sufficient linear bound 3T ln(1/(2 epsilon)).
    double bound = 0;
    /// Same search for the forward-search attack, lambda = 1 - 1/(2T).
    unsigned forward_exact = 0;
    double forward_bound = 0;
};
SMinResult s_min(unsigned T, double epsilon);

/// 1/2 + (1 - 1/(2T))^s / 2
double forward_search(unsigned T, unsigned s);

struct AttackBundle {
    /// Eve's success for one codeword bit, averaged over k.
    double eve_mean = 0;
    /// Closed-form value of eve_mean.
    double eve_closed = 0;
    /// Alice's success cos^2(alpha/2).
    double alice = 0;
    /// eve_closed / alice
    double ratio = 0;
    /// Success on the codeword parity, from the ratio via q_s.
    double p_s = 0;
};

/// Success of the single-key test on key k (sin^4 + cos^4 at alpha = 0).
double single_key_k(uint64_t k, unsigned n, double alpha);
AttackBundle single_key(unsigned n, unsigned s, double alpha);

/// Success of the double-key test on key k.
double double_key_k(uint64_t k, unsigned n, double alpha);
AttackBundle double_key(unsigned n, unsigned s, double alpha);

/// Relative success probabilities as functions of alpha.
double single_ratio(double alpha);
double double_ratio(double alpha);
/// Positive minimizers.
double alpha_min_single();
double alpha_min_double();
/// Edge of the alpha range where the double-key ratio stays at or below its alpha = 0 value.
double alpha_lim_double();

struct AlphaAverages {
    double single_full = 0;
    double double_full = 0;
    double single_third = 0;
    double double_lim = 0;
};
AlphaAverages alpha_averages();

/// Adaptive Simpson quadrature. Throws std::runtime_error when the depth limit is hit.
template <typename F>
double integrate(F f, double a, double b, double tol = 1e-10, int max_depth = 40);

struct HolevoPrior {
    Eigen::MatrixXd C;
    /// log2(tau + 1)
    double bound = 0;
    bool n_ok = false;
};
/// Coefficients of the prior state on the symmetric subspace. tau <= 64.
HolevoPrior holevo_prior(unsigned n, unsigned tau, double margin = 20);

enum class Attack { Single, Double };

struct MonteCarloResult {
    uint64_t trials = 0;
    uint64_t successes = 0;
    double estimate = 0;
    double stderr_ = 0;
};

/// Samples k and the codeword bit, draws the measurement outcomes and applies the attack's
/// decision rule. Work is split into fixed chunks with sub-seeds derived from `seed`, so the
/// result does not depend on `jobs`.
MonteCarloResult monte_carlo(Attack attack, unsigned n, double alpha, uint64_t trials, uint64_t seed, size_t jobs = 1);

/// CSV tables for the plots. Figures: "6.1" (k,psuc per T), "6.2" (T sweep), "6.3"
/// (s sweep per T), "7.3" (s sweep at alpha 0 and alpha_min).
std::string figure_csv(const std::string &fig, unsigned n, unsigned tmax, unsigned smax = 40);

}  // namespace mubforge

#include "mubforge/qpke_impl.h"

#endif
