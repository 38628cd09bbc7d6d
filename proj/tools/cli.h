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


#ifndef MUBFORGE_TOOLS_CLI_H
#define MUBFORGE_TOOLS_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mubforge/bit_matrix.h"

namespace mubforge::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
};

/// A stabilizer matrix with its start generator, as stored in JSON.
struct MubSet {
    size_t m = 0;
    BitMatrix C;
    BitMatrix G0;
    std::optional<BitMatrix> B;
    std::optional<BitMatrix> R;
    std::string family;
    std::string provenance;
    std::optional<std::vector<size_t>> structure;
};

nlohmann::json to_json(const MubSet &s);
MubSet mubset_from_json(const nlohmann::json &j);

/// A file holds one set object or {"sets": [...]}.
std::string write_mubsets(const std::vector<MubSet> &sets);
std::vector<MubSet> read_mubsets(const std::string &text, const std::string &origin = "<string>");

/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv);

}  // namespace mubforge::cli

#endif
