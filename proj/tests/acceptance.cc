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


// One PASS/FAIL line per acceptance criterion.
//
//   acceptance [--expect-fail 8] [--only 1,2] [--jobs N]
//
// Exits 0 when the failing criteria are exactly the expected ones.

#include <iostream>
#include <string>
#include <vector>

#include "cli.h"

int main(int argc, char **argv) {
    std::vector<std::string> args{"selftest", "--data", MUBFORGE_TEST_DATA};
    for (int i = 1; i < argc; i++) {
        args.emplace_back(argv[i]);
    }
    return mubforge::cli::run(args, std::cout, std::cerr);
}
