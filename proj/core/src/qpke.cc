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

#include "mubforge/qpke.h"

#include <algorithm>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace mubforge {

namespace {

constexpr double kPi = std::numbers::pi;

void check_n(unsigned n, unsigned max_n) {
    if (n < 1 || n > max_n) {
        throw std::invalid_argument("qpke: n must be in 1.." + std::to_string(max_n));
    }
}

double log_choose(unsigned n, unsigned k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Binomial pmf with exact handling of p = 0 and p = 1.
double binom_pmf(unsigned T, unsigned t, double p) {
    if (p <= 0) {
        return t == 0 ? 1.0 : 0.0;
    }
    if (p >= 1) {
        return t == T ? 1.0 : 0.0;
    }
    return std::exp(log_choose(T, t) + t * std::log(p) + (T - t) * std::log1p(-p));
}

}  // namespace

double theta(unsigned n) {
    check_n(n, 62);
    return kPi / std::ldexp(1.0, static_cast<int>(n) - 1);
}

double p0(uint64_t k, unsigned n, Basis b) {
    double h = 0.5 * static_cast<double>(k) * theta(n);
    double c = b == Basis::Z ? std::cos(h) : std::cos(kPi / 4 - h);
    return c * c;
}

double p0_axis(uint64_t k, unsigned n, double phi, double alpha) {
    return 0.5 * (1 + std::cos(alpha) * std::cos(static_cast<double>(k) * theta(n) - phi));
}

double tally_likelihood(const Tally &t, uint64_t k, unsigned n, unsigned T) {
    if (t.z0 > T || t.x0 > T) {
        throw std::invalid_argument("tally_likelihood: counts exceed T");
    }
    return binom_pmf(T, t.z0, p0(k, n, Basis::Z)) * binom_pmf(T, t.x0, p0(k, n, Basis::X));
}

double posterior(uint64_t k, const Tally &t, unsigned n, unsigned T) {
    check_n(n, 20);
    uint64_t keys = uint64_t{1} << n;
    double total = 0;
    for (uint64_t j = 0; j < keys; j++) {
        total += tally_likelihood(t, j, n, T);
    }
    if (total <= 0) {
        throw std::domain_error("posterior: tally has zero probability");
    }
    return tally_likelihood(t, k, n, T) / total;
}

TallyModel::TallyModel(unsigned n, unsigned T) : n_(n), T_(T) {
    check_n(n, 16);
    if (T > 64) {
        throw std::invalid_argument("TallyModel: exact enumeration needs T <= 64");
    }
    size_t keys = size_t{1} << n;
    size_t w = T + 1;
    bz_.resize(keys * w);
    bx_.resize(keys * w);
    for (size_t k = 0; k < keys; k++) {
        double pz = p0(k, n, Basis::Z);
        double px = p0(k, n, Basis::X);
        for (unsigned t = 0; t <= T; t++) {
            bz_[k * w + t] = binom_pmf(T, t, pz);
            bx_[k * w + t] = binom_pmf(T, t, px);
        }
    }
    p_tally_.assign(w * w, 0);
    rz_.assign(w * w, 0);
    rx_.assign(w * w, 0);
    rnorm_.assign(w * w, 0);
    double th = theta(n);
    for (size_t k = 0; k < keys; k++) {
        double c = std::cos(k * th);
        double s = std::sin(k * th);
        for (unsigned a = 0; a <= T; a++) {
            double pa = bz_[k * w + a];
            if (pa == 0) {
                continue;
            }
            for (unsigned b = 0; b <= T; b++) {
                double p = pa * bx_[k * w + b];
                size_t idx = a * w + b;
                p_tally_[idx] += p;
                rz_[idx] += p * c;
                rx_[idx] += p * s;
            }
        }
    }
    for (size_t idx = 0; idx < w * w; idx++) {
        // Posterior-weighted Bloch vector; the 1/2^n factors cancel.
        if (p_tally_[idx] > 0) {
            rz_[idx] /= p_tally_[idx];
            rx_[idx] /= p_tally_[idx];
        }
        rnorm_[idx] = std::hypot(rz_[idx], rx_[idx]);
        p_tally_[idx] /= static_cast<double>(keys);
    }
}

double TallyModel::psuc(uint64_t k) const {
    size_t w = T_ + 1;
    size_t keys = size_t{1} << n_;
    if (k >= keys) {
        throw std::invalid_argument("TallyModel::psuc: key out of range");
    }
    double th = theta(n_);
    double c = std::cos(k * th);
    double s = std::sin(k * th);
    double total = 0;
    for (unsigned a = 0; a <= T_; a++) {
        for (unsigned b = 0; b <= T_; b++) {
            double p = bz_[k * w + a] * bx_[k * w + b];
            if (p == 0) {
                continue;
            }
            size_t idx = a * w + b;
            // A vanishing Bloch vector carries no information.
            double gain = rnorm_[idx] > 1e-15 ? (rz_[idx] * c + rx_[idx] * s) / (2 * rnorm_[idx]) : 0.0;
            total += p * (0.5 + gain);
        }
    }
    return total;
}

double TallyModel::psuc_mean() const {
    double total = 0;
    for (size_t idx = 0; idx < p_tally_.size(); idx++) {
        total += p_tally_[idx] * (0.5 + 0.5 * rnorm_[idx]);
    }
    return total;
}

double psuc_wbit(uint64_t k, unsigned n, unsigned T) {
    return TallyModel(n, T).psuc(k);
}

double psuc_wbit_mean(unsigned n, unsigned T) {
    return TallyModel(n, T).psuc_mean();
}

double popt(unsigned T) {
    if (T < 1) {
        throw std::invalid_argument("popt: T must be positive");
    }
    unsigned n = 2 * T;
    double sum = 0;
    for (unsigned i = 0; i < n; i++) {
        sum += std::exp(0.5 * (log_choose(n, i) + log_choose(n, i + 1)) - (n + 1) * std::log(2.0));
    }
    return 0.5 + sum;
}

double q_s(double lambda, unsigned s) {
    return 0.5 + 0.5 * std::pow(lambda, static_cast<double>(s));
}

double forward_search(unsigned T, unsigned s) {
    return q_s(1 - 1.0 / (2.0 * T), s);
}

SMinResult s_min(unsigned T, double epsilon) {
    if (!(epsilon > 0 && epsilon <= 0.5) || T < 1) {
        throw std::invalid_argument("s_min: need T >= 1 and epsilon in (0, 1/2]");
    }
    auto search = [epsilon](double lambda) {
        unsigned s = 1;
        while (q_s(lambda, s) >= 0.5 + epsilon) {
            s++;
        }
        return s;
    };
    SMinResult r;
    r.exact = search(1 - 1.0 / (3.0 * T));
    r.forward_exact = search(1 - 1.0 / (2.0 * T));
    r.bound = 3.0 * T * std::log(1 / (2 * epsilon));
    r.forward_bound = 2.0 * T * std::log(1 / (2 * epsilon));
    return r;
}

double single_ratio(double alpha) {
    double c = std::cos(alpha / 2);
    return (5 + std::cos(2 * alpha)) / (8 * c * c);
}

double double_ratio(double alpha) {
    double c = std::cos(alpha / 2);
    double ca = std::cos(alpha);
    return (1 + ca * ca / std::sqrt(2.0)) / (2 * c * c);
}

double alpha_min_single() {
    return 2 * std::acos(std::pow(0.75, 0.25));
}

double alpha_min_double() {
    double r = std::pow(std::sqrt(2.0) - 1, 0.75);
    return 2 * std::acos(r + r / std::sqrt(2.0));
}

double alpha_lim_double() {
    return 2 * std::acos(std::sqrt(1 + std::sqrt(2.0)) / 2);
}

double single_key_k(uint64_t k, unsigned n, double alpha) {
    double p = p0_axis(k, n, 0, alpha);
    return p * p + (1 - p) * (1 - p);
}

double double_key_k(uint64_t k, unsigned n, double alpha) {
    double z = p0_axis(k, n, 0, alpha);
    double x = p0_axis(k, n, kPi / 2, alpha);
    double plus = p0_axis(k, n, kPi / 4, alpha);
    double minus = p0_axis(k, n, -kPi / 4, alpha);
    return z * x * plus + (1 - z) * (1 - x) * (1 - plus) + z * (1 - x) * minus + (1 - z) * x * (1 - minus);
}

namespace {

template <typename F>
double key_average(unsigned n, F f) {
    check_n(n, 24);
    uint64_t keys = uint64_t{1} << n;
    double total = 0;
    for (uint64_t k = 0; k < keys; k++) {
        total += f(k);
    }
    return total / static_cast<double>(keys);
}

}  // namespace

AttackBundle single_key(unsigned n, unsigned s, double alpha) {
    AttackBundle b;
    b.eve_mean = key_average(n, [&](uint64_t k) { return single_key_k(k, n, alpha); });
    b.eve_closed = (5 + std::cos(2 * alpha)) / 8;
    double c = std::cos(alpha / 2);
    b.alice = c * c;
    b.ratio = b.eve_closed / b.alice;
    b.p_s = q_s(2 * b.ratio - 1, s);
    return b;
}

AttackBundle double_key(unsigned n, unsigned s, double alpha) {
    AttackBundle b;
    b.eve_mean = key_average(n, [&](uint64_t k) { return double_key_k(k, n, alpha); });
    double ca = std::cos(alpha);
    b.eve_closed = 0.5 + std::sqrt(2.0) / 4 * ca * ca;
    double c = std::cos(alpha / 2);
    b.alice = c * c;
    b.ratio = b.eve_closed / b.alice;
    b.p_s = q_s(2 * b.ratio - 1, s);
    return b;
}

AlphaAverages alpha_averages() {
    AlphaAverages r;
    r.single_full = integrate(single_ratio, -kPi / 2, kPi / 2, 1e-10) / kPi;
    r.double_full = integrate(double_ratio, -kPi / 2, kPi / 2, 1e-10) / kPi;
    r.single_third = integrate(single_ratio, -kPi / 3, kPi / 3, 1e-10) * 3 / (2 * kPi);
    double lim = alpha_lim_double();
    r.double_lim = integrate(double_ratio, -lim, lim, 1e-10) / (2 * lim);
    return r;
}

HolevoPrior holevo_prior(unsigned n, unsigned tau, double margin) {
    check_n(n, 24);
    if (tau < 1 || tau > 64) {
        throw std::invalid_argument("holevo_prior: tau must be in 1..64");
    }
    HolevoPrior h;
    h.C = Eigen::MatrixXd::Zero(tau + 1, tau + 1);
    uint64_t keys = uint64_t{1} << n;
    double th = theta(n);
    std::vector<double> f(tau + 1);
    for (uint64_t k = 0; k < keys; k++) {
        double c = std::cos(0.5 * k * th);
        double s = std::sin(0.5 * k * th);
        for (unsigned l = 0; l <= tau; l++) {
            f[l] = std::pow(c, tau - l) * std::pow(s, l);
        }
        for (unsigned l = 0; l <= tau; l++) {
            for (unsigned lp = 0; lp <= tau; lp++) {
                h.C(l, lp) += f[l] * f[lp];
            }
        }
    }
    for (unsigned l = 0; l <= tau; l++) {
        for (unsigned lp = 0; lp <= tau; lp++) {
            h.C(l, lp) *= std::exp(0.5 * (log_choose(tau, l) + log_choose(tau, lp))) / static_cast<double>(keys);
        }
    }
    h.bound = std::log2(tau + 1.0);
    h.n_ok = n >= std::log2(static_cast<double>(tau)) + margin;
    return h;
}

MonteCarloResult monte_carlo(Attack attack, unsigned n, double alpha, uint64_t trials, uint64_t seed, size_t jobs) {
    check_n(n, 62);
    if (trials < 1) {
        throw std::invalid_argument("monte_carlo: need at least one trial");
    }
    constexpr uint64_t kChunk = 1 << 16;
    uint64_t chunks = (trials + kChunk - 1) / kChunk;
    uint64_t key_mask = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    uint64_t half = uint64_t{1} << (n - 1);
    std::vector<uint64_t> wins(chunks, 0);
    auto run_chunk = [&](uint64_t chunk) {
        std::seed_seq seq{seed, chunk};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        uint64_t begin = chunk * kChunk;
        uint64_t end = std::min(trials, begin + kChunk);
        uint64_t ok = 0;
        for (uint64_t i = begin; i < end; i++) {
            uint64_t k = rng() & key_mask;
            bool w = rng() & 1;
            uint64_t kc = (k + (w ? half : 0)) & key_mask;
            bool guess;
            if (attack == Attack::Single) {
                bool a = u(rng) >= p0_axis(k, n, 0, alpha);
                bool c = u(rng) >= p0_axis(kc, n, 0, alpha);
                guess = a != c;
            } else {
                bool a = u(rng) >= p0_axis(k, n, 0, alpha);
                bool b = u(rng) >= p0_axis(k, n, kPi / 2, alpha);
                double phi = a == b ? kPi / 4 : -kPi / 4;
                bool c = u(rng) >= p0_axis(kc, n, phi, alpha);
                // The predicted ciphertext outcome equals the z outcome in all four cases.
                guess = c != a;
            }
            ok += guess == w;
        }
        wins[chunk] = ok;
    };
    jobs = std::max<size_t>(1, std::min<uint64_t>(jobs, chunks));
    if (jobs == 1) {
        for (uint64_t c = 0; c < chunks; c++) {
            run_chunk(c);
        }
    } else {
        std::vector<std::thread> threads;
        for (size_t t = 0; t < jobs; t++) {
            threads.emplace_back([&, t] {
                for (uint64_t c = t; c < chunks; c += jobs) {
                    run_chunk(c);
                }
            });
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    MonteCarloResult r;
    r.trials = trials;
    for (uint64_t w : wins) {
        r.successes += w;
    }
    r.estimate = static_cast<double>(r.successes) / static_cast<double>(trials);
    r.stderr_ = std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(trials));
    return r;
}

std::string figure_csv(const std::string &fig, unsigned n, unsigned tmax, unsigned smax) {
    std::ostringstream out;
    out.precision(12);
    auto t_list = [tmax](std::initializer_list<unsigned> ts) {
        std::vector<unsigned> r;
        for (unsigned t : ts) {
            if (t <= tmax) {
                r.push_back(t);
            }
        }
        return r;
    };
    if (fig == "6.1") {
        out << "T,k,psuc\n";
        for (unsigned T : t_list({1, 2, 5, 10})) {
            TallyModel model(n, T);
            for (uint64_t k = 0; k < (uint64_t{1} << n); k++) {
                out << T << "," << k << "," << model.psuc(k) << "\n";
            }
        }
    } else if (fig == "6.2") {
        out << "T,psuc_mean,bound,popt,popt_asymptote\n";
        for (unsigned T = 1; T <= tmax; T++) {
            out << T << "," << psuc_wbit_mean(n, T) << "," << 1 - 1.0 / (6.0 * T) << "," << popt(T) << ","
                << 1 - 1.0 / (8.0 * T) << "\n";
        }
    } else if (fig == "6.3") {
        out << "T,s,exact,bound\n";
        for (unsigned T : t_list({1, 2, 5, 10, 20, 50})) {
            double lambda = 2 * psuc_wbit_mean(n, T) - 1;
            for (unsigned s = 1; s <= smax; s++) {
                out << T << "," << s << "," << q_s(lambda, s) << "," << q_s(1 - 1.0 / (3.0 * T), s) << "\n";
            }
        }
    } else if (fig == "7.3") {
        out << "s,p_alpha0,p_alphamin\n";
        for (unsigned s = 1; s <= smax; s++) {
            out << s << "," << double_key(n, s, 0).p_s << "," << double_key(n, s, alpha_min_double()).p_s << "\n";
        }
    } else {
        throw std::invalid_argument("figure_csv: unknown figure '" + fig + "' (expected 6.1, 6.2, 6.3 or 7.3)");
    }
    return out.str();
}

}  // namespace mubforge
