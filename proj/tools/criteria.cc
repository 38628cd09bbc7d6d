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


#include "criteria.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"
#include "mubforge/entclass.h"
#include "mubforge/fibpoly.h"
#include "mubforge/mubgen.h"
#include "mubforge/qcompile.h"
#include "mubforge/qpke.h"
#include "mubforge/stabsearch.h"

namespace mubforge::cli {

namespace {

using nlohmann::json;

json load_json(const std::string &dir, const std::string &name) {
    std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return json::parse(in);
}

BitMatrix rows_of(const json &j) {
    return BitMatrix::from_rows(j.get<std::vector<std::string>>());
}

struct Golden {
    std::vector<size_t> structure;
    std::string family;
    BitMatrix C;
    BitMatrix G0;
    Circuit circuit;
};

std::vector<Golden> golden_sets(const std::string &dir) {
    std::vector<Golden> out;
    json doc = load_json(dir, "stabilizer_sets.json");
    for (const auto &s : doc["sets"]) {
        Golden g;
        g.structure = s["structure"].get<std::vector<size_t>>();
        g.family = s["family"];
        g.G0 = rows_of(s["G0"]);
        if (s.contains("B")) {
            auto b = rows_of(s["B"]);
            auto r = rows_of(s["R"]);
            g.C = group_stabilizer(b, r);
        } else {
            g.C = rows_of(s["C"]);
        }
        std::string text;
        for (const auto &l : s["circuit"]) {
            text += l.get<std::string>() + "\n";
        }
        g.circuit = read_circuit(text);
        out.push_back(std::move(g));
    }
    return out;
}

std::string shape_str(const std::vector<size_t> &v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

FactorDb open_db(const CriteriaOptions &o) {
    return o.factors.empty() ? FactorDb::load_default() : FactorDb::load(o.factors);
}

// Tolerances and limits.
constexpr double kUnbiasedTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kClosedTol = 1e-12;
constexpr double kMinRatioTol = 1e-6;
constexpr double kAverageTol = 2e-3;
constexpr double kWbitSlack = 2e-3;
constexpr double kAsymptoteTol = 5e-4;
constexpr double kSigmas = 3.0;

struct Check {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

Check identity_suite_check(const CriteriaOptions &) {
    Check c;
    auto rep = identity_suite(20260101, 500, 300);
    if (!rep.ok) {
        c.fail(rep.failure);
    }
    c.detail = c.pass ? "500 trials, no counterexample" : c.detail;
    return c;
}

Check triangle_table_check(const CriteriaOptions &o) {
    Check c;
    auto db = open_db(o);
    auto tab = load_json(o.data_dir, "fib_tables.json")["triangle"];
    for (unsigned m = 2; m <= 64; m++) {
        auto b = triangle_B(m, rows_of(tab[std::to_string(m)]));
        if (!validate_stabilizer(fib_stabilizer(b), m, db.factors(m, +1))) {
            c.fail("m=" + std::to_string(m) + " rejected");
        }
    }
    if (c.pass) {
        c.detail = "m=2..64 accepted";
    }
    return c;
}

Check companion_table_check(const CriteriaOptions &o) {
    Check c;
    auto db = open_db(o);
    size_t n = 0;
    json tab = load_json(o.data_dir, "fib_tables.json")["companion"];
    for (const auto &[key, s] : tab.items()) {
        size_t m = std::stoul(key);
        if (m > 20) {
            continue;
        }
        n++;
        if (!has_full_fibonacci_index(hankel_B(m, s.get<std::string>()), db)) {
            c.fail("m=" + key + " lacks index 2^m+1");
        }
    }
    if (c.pass) {
        c.detail = std::to_string(n) + " strings accepted";
    }
    return c;
}

Check wiedemann_check(const CriteriaOptions &o) {
    Check c;
    auto db = open_db(o);
    if (db.factors(32, +1) != FactorList{BigUint(641), BigUint(6700417)}) {
        c.fail("factors of 2^32+1 differ from 641*6700417");
    }
    for (unsigned k = 0; k <= 7; k++) {
        if (!wiedemann_test(k, db)) {
            c.fail("k=" + std::to_string(k) + " failed");
        }
    }
    if (c.pass) {
        c.detail = "k=0..7 verified";
    }
    return c;
}

Check unbiasedness_check(const CriteriaOptions &o) {
    Check c;
    auto tab = load_json(o.data_dir, "fib_tables.json")["triangle"];
    double worst = 0;
    for (size_t m = 1; m <= 4; m++) {
        auto b = m == 1 ? BitMatrix::identity(1) : triangle_B(m, rows_of(tab[std::to_string(m)]));
        ComplexMatrix u = build_unitary(b);
        auto rep = verify_mub(cyclic_bases(u), kUnbiasedTol);
        worst = std::max(worst, rep.max_probability_deviation);
        if (!rep.ok) {
            c.fail("m=" + std::to_string(m) + " overlap deviation " + std::to_string(rep.max_probability_deviation));
        }
        size_t d = size_t{1} << m;
        ComplexMatrix p = ComplexMatrix::Identity(d, d);
        for (size_t k = 0; k <= d; k++) {
            p = p * u;
        }
        double dev = (p - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
        if (dev >= kUnbiasedTol) {
            c.fail("m=" + std::to_string(m) + " U^(d+1) deviates by " + std::to_string(dev));
        }
    }
    if (c.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
        c.detail = buf;
    }
    return c;
}

Check structure_check(const CriteriaOptions &o) {
    Check c;
    auto db = open_db(o);
    auto r = search_triangle(3, db.factors(3, +1));
    auto n = structure_vector(generate_classes(fib_stabilizer(r.B), standard_g0(3)));
    if (n != std::vector<size_t>{3, 0, 6}) {
        c.fail("Fibonacci m=3 gives " + shape_str(n));
    }
    size_t checked = 1;
    for (const auto &g : golden_sets(o.data_dir)) {
        checked++;
        auto got = structure_vector(generate_classes(g.C, g.G0));
        if (got != g.structure) {
            c.fail(g.family + " " + shape_str(g.structure) + " gives " + shape_str(got));
        }
    }
    if (c.pass) {
        c.detail = std::to_string(checked) + " generators reproduce their labels";
    }
    return c;
}

Check group_count_check(const CriteriaOptions &o) {
    Check c;
    auto db = open_db(o);
    std::vector<GroupPair> hits;
    for (auto &p : search_group(3, db)) {
        if (p.structure == std::vector<size_t>{2, 3, 4}) {
            hits.push_back(std::move(p));
        }
    }
    size_t reduced = dedup_group(hits).size();
    c.detail = std::to_string(hits.size()) + " pairs, " + std::to_string(reduced) + " after dedup";
    if (hits.size() != 126 || reduced != 18) {
        c.fail(c.detail + ", expected 126 and 18");
    }
    return c;
}

Check compilation_check(const CriteriaOptions &o) {
    Check c;
    auto sets = golden_sets(o.data_dir);
    size_t exact = 0;
    std::string first_bad;
    for (const auto &g : sets) {
        if (circuit_symplectic(g.circuit) == g.C) {
            exact++;
        } else if (first_bad.empty()) {
            first_bad = g.family + " " + shape_str(g.structure);
        }
        if (g.C.rows() <= 8 && !verify_compilation(g.C, compile(g.C)).ok()) {
            c.fail("compile(C) fails verification for " + shape_str(g.structure));
        }
    }
    auto tab = load_json(o.data_dir, "fib_tables.json")["triangle"];
    std::vector<BitMatrix> bs{BitMatrix::identity(1), fermat_B(1), fermat_B(2)};
    for (size_t m = 2; m <= 4; m++) {
        bs.push_back(triangle_B(m, rows_of(tab[std::to_string(m)])));
    }
    for (const auto &b : bs) {
        auto rep = verify_fibonacci_compilation(b, compile_fibonacci(b), kUnbiasedTol);
        if (!rep.ok()) {
            c.fail("Fibonacci circuit for m=" + std::to_string(b.rows()) + " deviates from the unitary");
        }
    }
    for (unsigned k = 0; k <= 6; k++) {
        size_t m = size_t{1} << k;
        auto n = gate_counts(compile_fibonacci(fermat_B(k)));
        if (n.s != 1 || n.cz != m - 1 || n.h != m) {
            c.fail("Fermat k=" + std::to_string(k) + " gate counts differ");
        }
    }
    if (exact != sets.size()) {
        c.fail("listed circuits reproduce C for " + std::to_string(exact) + " of " + std::to_string(sets.size()) +
               " sets; first mismatch " + first_bad);
    }
    if (c.pass) {
        c.detail = "all circuits exact";
    }
    return c;
}

Check trace_check(const CriteriaOptions &) {
    Check c;
    for (unsigned k : {1u, 2u}) {
        size_t m = size_t{1} << k;
        ComplexMatrix v = build_V_recursive(k);
        Complex tr = trace_minor(v, 1);
        Complex minors = trace_minor(v, 2);
        double scale = std::pow(2.0, m / 2.0);
        if (std::abs(tr - Complex(0, -scale)) >= kTraceTol) {
            c.fail("trace at m=" + std::to_string(m));
        }
        if (std::abs(minors - Complex(-std::pow(2.0, m), 0)) >= kTraceTol) {
            c.fail("minor sum at m=" + std::to_string(m));
        }
    }
    if (c.pass) {
        c.detail = "m=2,4";
    }
    return c;
}

Check closed_form_check(const CriteriaOptions &) {
    Check c;
    auto expect = [&c](const char *what, double got, double want, double tol) {
        if (!(std::abs(got - want) <= tol)) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s = %.12f, want %.12f", what, got, want);
            c.fail(buf);
        }
    };
    expect("single-key", single_key(10, 1, 0).eve_mean, 0.75, kClosedTol);
    expect("double-key", double_key(10, 1, 0).eve_mean, (2 + std::sqrt(2.0)) / 4, kClosedTol);
    expect("single ratio at minimum", single_ratio(alpha_min_single()), std::sqrt(3.0) - 1, kMinRatioTol);
    expect("double ratio at minimum", double_ratio(alpha_min_double()),
           std::sqrt(2.0) * (std::sqrt(1 + std::sqrt(2.0)) - 1), kMinRatioTol);
    auto a = alpha_averages();
    expect("single average", a.single_full, 0.773, kAverageTol);
    expect("double average", a.double_full, 0.830, kAverageTol);
    expect("single third average", a.single_third, 0.740, kAverageTol);
    expect("double limited average", a.double_lim, 0.816, kAverageTol);
    if (c.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "averages %.4f %.4f %.4f %.4f", a.single_full, a.double_full, a.single_third,
                      a.double_lim);
        c.detail = buf;
    }
    return c;
}

Check bounds_check(const CriteriaOptions &) {
    Check c;
    for (unsigned T = 2; T <= 50; T++) {
        double mean = psuc_wbit_mean(10, T);
        if (mean > 1 - 1.0 / (6.0 * T) + kWbitSlack) {
            c.fail("T=" + std::to_string(T) + " exceeds 1 - 1/(6T)");
        }
        if (mean > popt(T) + 1e-12) {
            c.fail("T=" + std::to_string(T) + " exceeds popt");
        }
    }
    double asym = std::abs(popt(50) - (1 - 1.0 / 400));
    if (asym > kAsymptoteTol) {
        c.fail("popt(50) is " + std::to_string(asym) + " from 1 - 1/(8T)");
    }
    for (double eps : {0.1, 0.05, 0.01}) {
        for (unsigned T = 2; T <= 50; T++) {
            auto r = s_min(T, eps);
            if (std::abs(r.forward_exact - 2.0 / 3.0 * r.exact) > 1.0) {
                c.fail("s_min ratio off at T=" + std::to_string(T));
            }
        }
    }
    if (c.pass) {
        c.detail = "T=2..50";
    }
    return c;
}

Check monte_carlo_check(const CriteriaOptions &o) {
    Check c;
    std::mt19937_64 seeds(424242);
    double worst = 0;
    for (int run = 0; run < 10; run++) {
        double alpha = run % 2 ? alpha_min_double() : 0.0;
        for (Attack attack : {Attack::Single, Attack::Double}) {
            uint64_t seed = seeds();
            auto mc = monte_carlo(attack, 10, alpha, o.mc_trials, seed, o.jobs);
            double want = attack == Attack::Single ? single_key(10, 1, alpha).eve_mean : double_key(10, 1, alpha).eve_mean;
            double z = std::abs(mc.estimate - want) / mc.stderr_;
            worst = std::max(worst, z);
            if (!(z < kSigmas)) {
                c.fail("run " + std::to_string(run) + " off by " + std::to_string(z) + " sigma");
            }
        }
    }
    if (c.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst %.2f sigma", worst);
        c.detail = buf;
    }
    return c;
}

BitMatrix symmetric_from_code(size_t m, uint64_t code) {
    BitMatrix b(m, m);
    size_t k = 0;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i; j < m; j++, k++) {
            bool v = (code >> k) & 1;
            b.set(i, j, v);
            b.set(j, i, v);
        }
    }
    return b;
}

Check oracle_check(const CriteriaOptions &o) {
    Check c;
    auto db = open_db(o);
    size_t accepted = 0;
    for (size_t m = 2; m <= 3; m++) {
        auto plus = db.factors(static_cast<unsigned>(m), +1);
        size_t bits = m * (m + 1) / 2;
        for (uint64_t code = 0; code < (uint64_t{1} << bits); code++) {
            auto b = symmetric_from_code(m, code);
            bool valid = validate_stabilizer(fib_stabilizer(b), m, plus);
            accepted += valid;
            if (valid != has_full_fibonacci_index(b, db)) {
                c.fail("disagreement at B=" + b.str());
            }
        }
    }
    for (size_t m = 1; m <= 5; m++) {
        if (count_symmetric_invertible(m) != BigUint(count_symmetric_invertible_exhaustive(m))) {
            c.fail("a(" + std::to_string(m) + ") mismatch");
        }
    }
    if (c.pass) {
        c.detail = std::to_string(accepted) + " symmetric B accepted for m=2,3";
    }
    return c;
}

struct Entry {
    const char *name;
    Check (*run)(const CriteriaOptions &);
    /// Wall-clock budget in seconds; 0 means none.
    double budget;
};

const Entry kEntries[kCriteriaCount] = {
    {"fibonacci identities", identity_suite_check, 5},
    {"triangle corner table", triangle_table_check, 60},
    {"companion table", companion_table_check, 30},
    {"fermat recursion", wiedemann_check, 120},
    {"mutual unbiasedness", unbiasedness_check, 0},
    {"structure vectors", structure_check, 0},
    {"group set count", group_count_check, 0},
    {"circuit compilation", compilation_check, 0},
    {"trace identities", trace_check, 0},
    {"qpke closed forms", closed_form_check, 0},
    {"qpke bounds", bounds_check, 0},
    {"monte carlo", monte_carlo_check, 0},
    {"brute-force oracle", oracle_check, 0},
};

}  // namespace

std::string default_golden_dir() {
    if (const char *env = std::getenv("MUBFORGE_GOLDEN_DIR"); env && *env) {
        return env;
    }
    if (std::filesystem::exists(MUBFORGE_SOURCE_GOLDEN_DIR)) {
        return MUBFORGE_SOURCE_GOLDEN_DIR;
    }
    return MUBFORGE_INSTALLED_GOLDEN_DIR;
}

std::vector<CriterionResult> run_criteria(const CriteriaOptions &options,
                                          const std::function<void(const CriterionResult &)> &report) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteriaCount; id++) {
        if (!options.only.empty() && !options.only.count(id)) {
            continue;
        }
        const Entry &e = kEntries[id - 1];
        CriterionResult r;
        r.id = id;
        r.name = e.name;
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = e.run(options);
        } catch (const std::exception &ex) {
            c.fail(std::string("error: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (e.budget > 0 && r.seconds > e.budget) {
            c.fail("took " + std::to_string(r.seconds) + " s, budget " + std::to_string(e.budget) + " s");
        }
        r.pass = c.pass;
        r.detail = c.detail;
        if (report) {
            report(r);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult &r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %2d ", r.pass ? "PASS" : "FAIL", r.id);
    char secs[32];
    std::snprintf(secs, sizeof secs, " [%.2fs]", r.seconds);
    return buf + r.name + ": " + r.detail + secs;
}

}  // namespace mubforge::cli
