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


#include "cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "criteria.h"
#include "mubforge/entclass.h"
#include "mubforge/fibpoly.h"
#include "mubforge/mubgen.h"
#include "mubforge/qcompile.h"
#include "mubforge/qpke.h"
#include "mubforge/stabsearch.h"

namespace mubforge::cli {

using nlohmann::json;

namespace {

// Raised for bad input files; maps to the usage exit code.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json rows_json(const BitMatrix &m) {
    return m.row_strings();
}

BitMatrix rows_of(const json &j, const char *field) {
    if (!j.contains(field)) {
        throw InputError(std::string("missing field '") + field + "'");
    }
    const json &v = j[field];
    if (!v.is_array() || v.empty()) {
        throw InputError(std::string("field '") + field + "' must be a non-empty array of bit strings");
    }
    std::vector<std::string> rows;
    for (size_t i = 0; i < v.size(); i++) {
        if (!v[i].is_string()) {
            throw InputError(std::string("field '") + field + "' row " + std::to_string(i) + " is not a string");
        }
        rows.push_back(v[i].get<std::string>());
    }
    try {
        return BitMatrix::from_rows(rows);
    } catch (const std::exception &e) {
        throw InputError(std::string("field '") + field + "': " + e.what());
    }
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    f << text;
}

std::string shape_str(const std::vector<size_t> &v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<size_t> parse_shape(const std::string &s) {
    std::vector<size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) {
            throw InputError("bad structure vector '" + s + "'");
        }
        out.push_back(v);
    }
    return out;
}

FactorDb open_db(const std::string &path) {
    try {
        return path.empty() ? FactorDb::load_default() : FactorDb::load(path);
    } catch (const std::runtime_error &e) {
        throw InputError(e.what());
    }
}

MubSet fib_set(const BitMatrix &b, const std::string &family, const std::string &provenance) {
    MubSet s;
    s.m = b.rows();
    s.B = b;
    s.C = fib_stabilizer(b);
    s.G0 = standard_g0(s.m);
    s.family = family;
    s.provenance = provenance;
    return s;
}

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Circuit preparing the start basis from the computational basis, when G0 has a simple shape.
std::optional<Circuit> start_circuit(const BitMatrix &g0) {
    size_t m = g0.cols();
    auto top = g0.block(0, 0, m, m);
    auto bottom = g0.block(m, 0, m, m);
    if (top.is_identity() && is_symmetric(bottom)) {
        return compile_inhomogeneous(bottom);
    }
    if (top.is_zero() && bottom.is_identity()) {
        Circuit c{m, {}};
        for (size_t q = 0; q < m; q++) {
            c.gates.push_back(Gate::h(q));
        }
        return c;
    }
    return std::nullopt;
}

bool fib_form(const MubSet &s) {
    return s.B && !s.R && is_symmetric(*s.B) && s.C == fib_stabilizer(*s.B) && s.G0 == standard_g0(s.m);
}

// ---- search -------------------------------------------------------------

struct SearchArgs {
    std::string family;
    size_t m = 0;
    unsigned k = 0;
    std::string factors;
    std::string out;
    std::string matrix_out;
    size_t jobs = 1;
    size_t limit = 1;
    std::string target;
    uint64_t samples = 0;
    uint64_t seed = 1;
    size_t r_start = 1;
};

int cmd_search(const SearchArgs &a, std::ostream &out, std::ostream &err) {
    Family fam;
    try {
        fam = parse_family(a.family);
    } catch (const std::invalid_argument &) {
        err << "search: unknown family '" << a.family << "'\n";
        return kUsage;
    }
    auto need_m = [&](size_t lo, size_t hi) {
        if (a.m < lo || a.m > hi) {
            throw InputError("search: --m must be in " + std::to_string(lo) + ".." + std::to_string(hi) + " for family " +
                             a.family);
        }
    };
    std::vector<MubSet> sets;
    bool many = false;
    switch (fam) {
        case Family::Triangle: {
            need_m(2, 128);
            auto db = open_db(a.factors);
            auto r = search_triangle(a.m, db.factors(static_cast<unsigned>(a.m), +1), a.r_start);
            auto s = fib_set(r.B, "triangle", "triangle-search");
            sets.push_back(s);
            err << "corner " << r.A.rows() << "x" << r.A.cols() << " after " << r.tried << " candidates\n";
            break;
        }
        case Family::Companion: {
            need_m(2, 40);
            auto db = open_db(a.factors);
            auto str = search_companion(a.m, db);
            sets.push_back(fib_set(hankel_B(a.m, str), "companion", "companion-search s=" + str));
            break;
        }
        case Family::Fermat: {
            if (a.k > 12) {
                throw InputError("search: --k must be at most 12 for family fermat");
            }
            sets.push_back(fib_set(fermat_B(a.k), "fermat", "fermat-recursion k=" + std::to_string(a.k)));
            break;
        }
        case Family::Group: {
            need_m(1, 4);
            many = true;
            auto db = open_db(a.factors);
            std::optional<std::vector<size_t>> target;
            if (!a.target.empty()) {
                target = parse_shape(a.target);
            }
            for (const auto &p : search_group(a.m, db)) {
                if (target && p.structure != *target) {
                    continue;
                }
                MubSet s;
                s.m = a.m;
                s.B = p.B;
                s.R = p.R;
                s.C = group_stabilizer(p.B, p.R);
                s.G0 = standard_g0(a.m);
                s.family = "group";
                s.provenance = p.fibonacci_equivalent ? "group-search fibonacci-equivalent" : "group-search";
                s.structure = p.structure;
                sets.push_back(std::move(s));
                if (a.limit && sets.size() >= a.limit) {
                    break;
                }
            }
            break;
        }
        case Family::GeneralSymplectic: {
            need_m(1, 4);
            many = true;
            GeneralSearchOptions o;
            o.m = a.m;
            o.limit = a.limit;
            o.jobs = a.jobs;
            o.samples = a.samples;
            o.seed = a.seed;
            if (!a.target.empty()) {
                o.target = parse_shape(a.target);
            }
            for (auto &c : search_general(o)) {
                MubSet s;
                s.m = a.m;
                s.C = c.C;
                s.G0 = c.G0;
                s.B = c.B;
                s.R = c.R;
                s.family = "general";
                s.provenance = c.provenance;
                if (a.m <= 4) {
                    s.structure = structure_vector(generate_classes(s.C, s.G0));
                }
                sets.push_back(std::move(s));
            }
            break;
        }
    }
    if (sets.empty()) {
        err << "search: no candidate found\n";
        return kVerificationFailed;
    }
    std::string text = many ? write_mubsets(sets) : to_json(sets[0]).dump(2) + "\n";
    write_text(a.out, text, out);
    if (!a.matrix_out.empty()) {
        write_text(a.matrix_out, write_matrix_text(sets[0].B ? *sets[0].B : sets[0].C), out);
    }
    return kOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
    std::string input;
    std::string factors;
    double tol = 1e-9;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &) {
    auto sets = read_mubsets(read_text(a.input), a.input);
    bool all = true;
    for (size_t i = 0; i < sets.size(); i++) {
        const MubSet &s = sets[i];
        std::string tag = "set " + std::to_string(i) + ": ";
        if (!is_symplectic(s.C)) {
            out << tag << "symplectic check failed\n";
            all = false;
            continue;
        }
        bool valid;
        if (s.m <= 16) {
            valid = validate_set(s.C, s.G0);
        } else {
            valid = s.G0 == standard_g0(s.m) && validate_stabilizer(s.C, s.m, open_db(a.factors).factors(s.m, +1));
        }
        out << tag << "m=" << s.m << " family=" << (s.family.empty() ? "-" : s.family)
            << " partition=" << (valid ? "ok" : "failed");
        all = all && valid;
        if (valid && s.m <= 8) {
            auto n = structure_vector(generate_classes(s.C, s.G0));
            out << " structure=" << shape_str(n);
            if (s.structure && *s.structure != n) {
                out << " (labelled " << shape_str(*s.structure) << ", mismatch)";
                all = false;
            }
        }
        if (valid && s.m <= 4) {
            ComplexMatrix u;
            std::optional<Circuit> start = start_circuit(s.G0);
            if (fib_form(s)) {
                u = build_unitary(*s.B);
            } else if (start) {
                u = simulate(compile(s.C));
            }
            if (start && u.size()) {
                ComplexMatrix w = simulate(*start);
                std::vector<ComplexMatrix> bases;
                ComplexMatrix p = w;
                size_t d = size_t{1} << s.m;
                for (size_t j = 0; j <= d; j++) {
                    bases.push_back(p);
                    p = u * p;
                }
                auto rep = verify_mub(bases, a.tol);
                // U^(d+1) W is W up to a global phase.
                double cycle = phase_distance(p, w);
                bool ok = rep.ok && cycle < a.tol;
                out << " mub=" << (ok ? "ok" : "failed") << " max_dev=" << fmt("%.2e", rep.max_probability_deviation);
                all = all && ok;
            } else {
                out << " mub=skipped";
            }
        }
        out << "\n";
    }
    return all ? kOk : kVerificationFailed;
}

// ---- compile ------------------------------------------------------------

struct CompileArgs {
    std::string input;
    std::string out;
    std::string check;
    size_t index = 0;
    double tol = 1e-9;
};

int cmd_compile(const CompileArgs &a, std::ostream &out, std::ostream &err) {
    auto sets = read_mubsets(read_text(a.input), a.input);
    if (a.index >= sets.size()) {
        err << "compile: --index " << a.index << " out of range (" << sets.size() << " sets)\n";
        return kUsage;
    }
    const MubSet &s = sets[a.index];
    if (!is_symplectic(s.C)) {
        err << "symplectic check failed\n";
        return kVerificationFailed;
    }
    Circuit circ;
    bool fib = fib_form(s);
    if (!a.check.empty()) {
        try {
            circ = read_circuit(read_text(a.check));
        } catch (const std::runtime_error &e) {
            throw InputError(a.check + ": " + e.what());
        }
    } else {
        circ = fib ? compile_fibonacci(*s.B) : compile(s.C);
    }
    std::ostream &report = a.out.empty() && a.check.empty() ? err : out;
    CompilationReport rep = fib ? verify_fibonacci_compilation(*s.B, circ, a.tol) : verify_compilation(s.C, circ, a.tol);
    auto n = gate_counts(circ);
    report << "gates: S=" << n.s << " CZ=" << n.cz << " H=" << n.h << " CX=" << n.cx << "\n";
    report << "symplectic: " << (rep.symplectic_ok ? "ok" : "failed") << "\n";
    if (s.m <= 4) {
        report << "unitary: " << (rep.unitary_ok ? "ok" : "failed") << " max_deviation=" << fmt("%.2e", rep.max_deviation)
               << "\n";
    } else {
        report << "unitary: skipped (m > 4)\n";
    }
    if (a.check.empty()) {
        write_text(a.out, write_circuit(circ), out);
    }
    return rep.ok() ? kOk : kVerificationFailed;
}

// ---- qpke ---------------------------------------------------------------

struct QpkeArgs {
    std::string fig;
    std::string mc;
    unsigned n = 10;
    unsigned tmax = 50;
    unsigned smax = 40;
    double alpha = 0;
    uint64_t trials = 1000000;
    uint64_t seed = 1;
    size_t jobs = 1;
    unsigned T = 10;
    double eps = 0.01;
    std::string out;
};

int cmd_qpke(const QpkeArgs &a, std::ostream &out, std::ostream &err) {
    if (!a.fig.empty()) {
        std::string csv;
        try {
            csv = figure_csv(a.fig, a.n, a.tmax, a.smax);
        } catch (const std::invalid_argument &e) {
            err << "qpke: " << e.what() << "\n";
            return kUsage;
        }
        write_text(a.out, csv, out);
        return kOk;
    }
    std::ostringstream o;
    if (!a.mc.empty()) {
        Attack attack;
        if (a.mc == "single") {
            attack = Attack::Single;
        } else if (a.mc == "double") {
            attack = Attack::Double;
        } else {
            err << "qpke: --mc must be single or double\n";
            return kUsage;
        }
        auto r = monte_carlo(attack, a.n, a.alpha, a.trials, a.seed, a.jobs);
        double want = attack == Attack::Single ? single_key(a.n, 1, a.alpha).eve_mean : double_key(a.n, 1, a.alpha).eve_mean;
        o << "trials=" << r.trials << " successes=" << r.successes << " estimate=" << fmt("%.6f", r.estimate)
          << " stderr=" << fmt("%.6f", r.stderr_) << " analytic=" << fmt("%.6f", want) << "\n";
        write_text(a.out, o.str(), out);
        return kOk;
    }
    auto sk = single_key(a.n, 1, a.alpha);
    auto dk = double_key(a.n, 1, a.alpha);
    auto av = alpha_averages();
    auto sm = s_min(a.T, a.eps);
    o << "single_key " << fmt("%.12f", sk.eve_mean) << "\n";
    o << "double_key " << fmt("%.12f", dk.eve_mean) << "\n";
    o << "alpha_min_single " << fmt("%.9f", alpha_min_single()) << " ratio " << fmt("%.9f", single_ratio(alpha_min_single()))
      << "\n";
    o << "alpha_min_double " << fmt("%.9f", alpha_min_double()) << " ratio " << fmt("%.9f", double_ratio(alpha_min_double()))
      << "\n";
    o << "alpha_lim_double " << fmt("%.9f", alpha_lim_double()) << "\n";
    o << "averages " << fmt("%.6f", av.single_full) << " " << fmt("%.6f", av.double_full) << " "
      << fmt("%.6f", av.single_third) << " " << fmt("%.6f", av.double_lim) << "\n";
    o << "s_min T=" << a.T << " eps=" << a.eps << " exact=" << sm.exact << " bound=" << fmt("%.3f", sm.bound)
      << " forward_exact=" << sm.forward_exact << " forward_bound=" << fmt("%.3f", sm.forward_bound) << "\n";
    write_text(a.out, o.str(), out);
    return kOk;
}

// ---- selftest -----------------------------------------------------------

struct SelftestArgs {
    std::string data;
    std::string factors;
    size_t jobs = 1;
    std::string only;
    std::string expect_fail;
    uint64_t mc_trials = 1000000;
};

std::set<int> parse_ids(const std::string &s) {
    std::set<int> ids;
    for (size_t v : parse_shape(s)) {
        if (v < 1 || v > static_cast<size_t>(kCriteriaCount)) {
            throw InputError("criterion id " + std::to_string(v) + " out of range");
        }
        ids.insert(static_cast<int>(v));
    }
    return ids;
}

int cmd_selftest(const SelftestArgs &a, std::ostream &out) {
    CriteriaOptions o;
    o.data_dir = a.data.empty() ? default_golden_dir() : a.data;
    o.factors = a.factors;
    o.jobs = a.jobs;
    o.mc_trials = a.mc_trials;
    if (!a.only.empty()) {
        o.only = parse_ids(a.only);
    }
    std::set<int> expected = a.expect_fail.empty() ? std::set<int>{} : parse_ids(a.expect_fail);
    std::set<int> failed;
    run_criteria(o, [&](const CriterionResult &r) {
        out << format_result(r) << "\n" << std::flush;
        if (!r.pass) {
            failed.insert(r.id);
        }
    });
    size_t ran = o.only.empty() ? kCriteriaCount : o.only.size();
    out << ran - failed.size() << "/" << ran << " criteria passed\n";
    std::set<int> expected_here;
    for (int id : expected) {
        if (o.only.empty() || o.only.count(id)) {
            expected_here.insert(id);
        }
    }
    if (!expected_here.empty()) {
        out << (failed == expected_here ? "failures match the expected set\n" : "failures differ from the expected set\n");
    }
    return failed == expected_here ? kOk : kVerificationFailed;
}

}  // namespace

json to_json(const MubSet &s) {
    json j;
    j["m"] = s.m;
    j["family"] = s.family;
    j["provenance"] = s.provenance;
    j["C"] = rows_json(s.C);
    j["G0"] = rows_json(s.G0);
    if (s.B) {
        j["B"] = rows_json(*s.B);
    }
    if (s.R) {
        j["R"] = rows_json(*s.R);
    }
    if (s.structure) {
        j["structure"] = *s.structure;
    }
    return j;
}

MubSet mubset_from_json(const json &j) {
    if (!j.is_object()) {
        throw InputError("set must be a JSON object");
    }
    MubSet s;
    if (j.contains("B")) {
        s.B = rows_of(j, "B");
    }
    if (j.contains("R")) {
        s.R = rows_of(j, "R");
    }
    if (j.contains("C")) {
        s.C = rows_of(j, "C");
    } else if (s.B && s.R) {
        s.C = group_stabilizer(*s.B, *s.R);
    } else if (s.B) {
        s.C = fib_stabilizer(*s.B);
    } else {
        throw InputError("missing field 'C'");
    }
    if (s.C.rows() != s.C.cols() || s.C.rows() % 2) {
        throw InputError("C must be 2m x 2m, got " + std::to_string(s.C.rows()) + "x" + std::to_string(s.C.cols()));
    }
    s.m = s.C.rows() / 2;
    if (j.contains("m") && j["m"].get<size_t>() != s.m) {
        throw InputError("field 'm' disagrees with the size of C");
    }
    s.G0 = j.contains("G0") ? rows_of(j, "G0") : standard_g0(s.m);
    if (s.G0.rows() != 2 * s.m || s.G0.cols() != s.m) {
        throw InputError("G0 must be 2m x m");
    }
    s.family = j.value("family", "");
    s.provenance = j.value("provenance", "");
    if (j.contains("structure")) {
        s.structure = j["structure"].get<std::vector<size_t>>();
    }
    return s;
}

std::string write_mubsets(const std::vector<MubSet> &sets) {
    json arr = json::array();
    for (const auto &s : sets) {
        arr.push_back(to_json(s));
    }
    json j;
    j["sets"] = arr;
    return j.dump(2) + "\n";
}

std::vector<MubSet> read_mubsets(const std::string &text, const std::string &origin) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] != '{') {
        // Bit-grid matrix: m x m symmetric B or 2m x 2m C.
        BitMatrix a;
        try {
            a = read_matrix_text(text);
        } catch (const std::exception &e) {
            throw InputError(origin + ": " + e.what());
        }
        MubSet s;
        if (a.rows() == a.cols() && is_symmetric(a) && a.rows() > 0) {
            s = fib_set(a, "", "matrix file");
        } else {
            s.C = a;
            if (a.rows() != a.cols() || a.rows() % 2) {
                throw InputError(origin + ": matrix is neither m x m symmetric nor 2m x 2m");
            }
            s.m = a.rows() / 2;
            s.G0 = standard_g0(s.m);
        }
        if (s.m == 0) {
            s.m = s.C.rows() / 2;
        }
        return {s};
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(origin + ": " + e.what());
    }
    std::vector<MubSet> out;
    try {
        if (j.is_object() && j.contains("sets")) {
            for (size_t i = 0; i < j["sets"].size(); i++) {
                try {
                    out.push_back(mubset_from_json(j["sets"][i]));
                } catch (const std::exception &e) {
                    throw InputError("set " + std::to_string(i) + ": " + e.what());
                }
            }
        } else {
            out.push_back(mubset_from_json(j));
        }
    } catch (const std::exception &e) {
        throw InputError(origin + ": " + e.what());
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cyclic mutually unbiased bases for qubits: search, verify, compile, analyze."};
    app.name("mubforge");
    app.require_subcommand(1);
    app.set_version_flag("--version", "mubforge 0.1.0");

    SearchArgs sa;
    auto *search = app.add_subcommand("search", "Find a stabilizer matrix for a family");
    search->add_option("--family", sa.family, "triangle, companion, fermat, group or general")->required();
    search->add_option("--m", sa.m, "Number of qubits");
    search->add_option("--k", sa.k, "Fermat level, m = 2^k");
    search->add_option("--factors", sa.factors, "Factor table file")->check(CLI::ExistingFile);
    search->add_option("--out", sa.out, "Output JSON path (default stdout)");
    search->add_option("--matrix-out", sa.matrix_out, "Also write B (or C) as a bit grid");
    search->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--limit", sa.limit, "Maximum hits for group/general (0 = all)");
    search->add_option("--target", sa.target, "Structure vector filter, e.g. 2,3,4");
    search->add_option("--samples", sa.samples, "Random candidates for general search");
    search->add_option("--seed", sa.seed, "Seed for sampled search");
    search->add_option("--r-start", sa.r_start, "Smallest corner size for triangle search")->check(CLI::PositiveNumber);

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Check a stored set");
    verify->add_option("input", va.input, "Set file (JSON or bit grid)")->required()->check(CLI::ExistingFile);
    verify->add_option("--factors", va.factors, "Factor table file")->check(CLI::ExistingFile);
    verify->add_option("--tol", va.tol, "Numerical tolerance")->check(CLI::PositiveNumber);

    CompileArgs ca;
    auto *comp = app.add_subcommand("compile", "Emit and verify a Clifford circuit for C");
    comp->add_option("input", ca.input, "Set file (JSON or bit grid)")->required()->check(CLI::ExistingFile);
    comp->add_option("--out", ca.out, "Circuit output path (default stdout)");
    comp->add_option("--check", ca.check, "Verify this circuit file instead of compiling")->check(CLI::ExistingFile);
    comp->add_option("--index", ca.index, "Which set in a multi-set file");
    comp->add_option("--tol", ca.tol, "Numerical tolerance")->check(CLI::PositiveNumber);

    unsigned wk = 0;
    std::string wfactors;
    auto *wied = app.add_subcommand("wiedemann", "Check the Fermat construction at level k");
    wied->add_option("--k", wk, "Level, 0..11")->required()->check(CLI::Range(0u, 11u));
    wied->add_option("--factors", wfactors, "Factor table file")->check(CLI::ExistingFile);

    QpkeArgs qa;
    auto *qpke = app.add_subcommand("qpke", "Security tables, figure data and Monte Carlo");
    qpke->add_option("--fig", qa.fig, "Figure data: 6.1, 6.2, 6.3 or 7.3");
    qpke->add_option("--mc", qa.mc, "Monte Carlo attack: single or double");
    qpke->add_option("--n", qa.n, "Key qubit count")->check(CLI::Range(1u, 60u));
    qpke->add_option("--tmax", qa.tmax, "Largest T")->check(CLI::PositiveNumber);
    qpke->add_option("--smax", qa.smax, "Largest s")->check(CLI::PositiveNumber);
    qpke->add_option("--alpha", qa.alpha, "Displacement angle");
    qpke->add_option("--trials", qa.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    qpke->add_option("--seed", qa.seed, "Monte Carlo seed");
    qpke->add_option("--jobs", qa.jobs, "Worker threads")->check(CLI::PositiveNumber);
    qpke->add_option("--T", qa.T, "Copies for the s_min line")->check(CLI::PositiveNumber);
    qpke->add_option("--eps", qa.eps, "Target advantage for the s_min line")->check(CLI::Range(1e-300, 0.5));
    qpke->add_option("--out", qa.out, "Output path (default stdout)");
    qpke->get_option("--fig")->excludes("--mc");

    std::string kind = "fibonacci";
    size_t rows = 32;
    std::string fout;
    auto *fractal = app.add_subcommand("fractal", "Print a coefficient triangle");
    fractal->add_option("--kind", kind, "fibonacci, charpoly or pascal")
        ->check(CLI::IsMember({"fibonacci", "charpoly", "pascal"}));
    fractal->add_option("--rows", rows, "Number of rows")->check(CLI::Range(size_t{1}, size_t{4096}));
    fractal->add_option("--out", fout, "Output path (default stdout)");

    SelftestArgs st;
    auto *self = app.add_subcommand("selftest", "Run the acceptance checks");
    self->add_option("--data", st.data, "Golden table directory")->check(CLI::ExistingDirectory);
    self->add_option("--factors", st.factors, "Factor table file")->check(CLI::ExistingFile);
    self->add_option("--jobs", st.jobs, "Worker threads")->check(CLI::PositiveNumber);
    self->add_option("--only", st.only, "Comma-separated criterion ids");
    self->add_option("--expect-fail", st.expect_fail, "Criteria known to fail; exit 0 when exactly these fail");
    self->add_option("--mc-trials", st.mc_trials, "Trials per Monte Carlo run")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << "mubforge 0.1.0\n";
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "mubforge: " << e.what() << "\n";
        err << "run 'mubforge --help' for usage\n";
        return kUsage;
    }

    try {
        if (*search) {
            return cmd_search(sa, out, err);
        }
        if (*verify) {
            return cmd_verify(va, out, err);
        }
        if (*comp) {
            return cmd_compile(ca, out, err);
        }
        if (*wied) {
            bool ok = wiedemann_test(wk, open_db(wfactors));
            if (ok) {
                out << "conjecture verified for k=" << wk << "\n";
                return kOk;
            }
            out << "conjecture check failed for k=" << wk << "\n";
            return kVerificationFailed;
        }
        if (*qpke) {
            return cmd_qpke(qa, out, err);
        }
        if (*fractal) {
            TriangleKind tk = kind == "fibonacci" ? TriangleKind::Fibonacci
                              : kind == "charpoly" ? TriangleKind::CharPoly
                                                   : TriangleKind::Pascal;
            write_text(fout, emit_triangle(tk, rows), out);
            return kOk;
        }
        if (*self) {
            return cmd_selftest(st, out);
        }
    } catch (const InputError &e) {
        err << "mubforge: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "mubforge: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range &e) {
        err << "mubforge: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "mubforge: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsage;
}

int run(int argc, const char *const *argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace mubforge::cli
