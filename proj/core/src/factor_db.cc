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

#include "mubforge/factor_db.h"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mubforge {

namespace {

std::string trim(std::string_view s) {
    size_t a = 0;
    size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        a++;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        b--;
    }
    return std::string(s.substr(a, b - a));
}

}  // namespace

FactorDb FactorDb::parse(std::string_view text, const std::string &origin) {
    FactorDb db;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string &msg) {
        throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        size_t colon = body.find(':');
        if (colon == std::string::npos || body.rfind("2^", 0) != 0) {
            fail("expected \"2^<m>+1: p1,p2,...\"");
        }
        std::string lhs = trim(std::string_view(body).substr(2, colon - 2));
        if (lhs.size() < 3) {
            fail("bad descriptor");
        }
        char sign_char = lhs[lhs.size() - 2];
        if ((sign_char != '+' && sign_char != '-') || lhs.back() != '1') {
            fail("descriptor must end in +1 or -1");
        }
        unsigned m = 0;
        auto [ptr, ec] = std::from_chars(lhs.data(), lhs.data() + lhs.size() - 2, m);
        if (ec != std::errc() || ptr != lhs.data() + lhs.size() - 2 || m == 0) {
            fail("bad exponent");
        }
        int sign = sign_char == '+' ? 1 : -1;
        FactorList factors;
        std::string rhs = trim(std::string_view(body).substr(colon + 1));
        std::stringstream parts(rhs);
        std::string tok;
        while (std::getline(parts, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) {
                fail("empty factor");
            }
            try {
                factors.push_back(BigUint::parse(tok));
            } catch (const std::invalid_argument &) {
                fail("factor is not a decimal integer: " + tok);
            }
        }
        if (product(factors) != BigUint::pow2_pm1(m, sign)) {
            fail("factors do not multiply to 2^" + std::to_string(m) + (sign > 0 ? "+1" : "-1"));
        }
        db.entries_[{m, sign}] = std::move(factors);
    }
    return db;
}

FactorDb FactorDb::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open factor database " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

std::string FactorDb::default_path() {
    if (const char *env = std::getenv("MUBFORGE_FACTOR_DB"); env && *env) {
        return env;
    }
    for (const char *candidate : {MUBFORGE_SOURCE_FACTOR_DB, MUBFORGE_INSTALLED_FACTOR_DB}) {
        if (std::filesystem::exists(candidate)) {
            return candidate;
        }
    }
    return MUBFORGE_INSTALLED_FACTOR_DB;
}

FactorDb FactorDb::load_default() {
    return load(default_path());
}

bool FactorDb::has(unsigned m, int sign) const {
    return entries_.count({m, sign > 0 ? 1 : -1}) > 0;
}

FactorList FactorDb::factors(unsigned m, int sign) const {
    sign = sign > 0 ? 1 : -1;
    auto it = entries_.find({m, sign});
    if (it != entries_.end()) {
        return it->second;
    }
    if (m <= kTrialDivisionLimit) {
        return trial_factor(BigUint::pow2_pm1(m, sign));
    }
    throw std::out_of_range("no factorization of 2^" + std::to_string(m) + (sign > 0 ? "+1" : "-1") +
                            " in the factor database");
}

void FactorDb::insert(unsigned m, int sign, FactorList factors) {
    sign = sign > 0 ? 1 : -1;
    if (product(factors) != BigUint::pow2_pm1(m, sign)) {
        throw std::invalid_argument("FactorDb::insert: factors do not multiply to the value");
    }
    entries_[{m, sign}] = std::move(factors);
}

}  // namespace mubforge
