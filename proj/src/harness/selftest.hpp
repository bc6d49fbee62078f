// Copyright 2026 The ghzqsdc Authors
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

#ifndef GHZQSDC_HARNESS_SELFTEST_HPP
#define GHZQSDC_HARNESS_SELFTEST_HPP

#include <string>
#include <vector>

namespace ghzqsdc {

struct SelfTestCase {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Exhaustive invariant checks that run in well under a second.
std::vector<SelfTestCase> run_selftest();

}  // namespace ghzqsdc

#endif
