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

#ifndef GHZQSDC_HARNESS_REPORT_HPP
#define GHZQSDC_HARNESS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "protocol/session.hpp"

namespace ghzqsdc {

nlohmann::ordered_json session_result_json(const SessionResult &r);

/// Multi-line text: status, per-group announcements, each party's decoded view.
std::string session_summary(const SessionResult &r);

/// Bits `viewer` decoded for `sender`; '?' marks undecodable positions.
std::string decoded_string(const SessionResult &r, std::uint32_t viewer, std::uint32_t sender);

}  // namespace ghzqsdc

#endif
