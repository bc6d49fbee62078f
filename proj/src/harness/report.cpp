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

#include "harness/report.hpp"

#include <sstream>

namespace ghzqsdc {

using nlohmann::ordered_json;

namespace {

std::string party_name(std::uint32_t p) {
    static const char *kNames[] = {"Alice", "Bob", "Charlie", "Dave", "Erin", "Frank", "Grace", "Heidi", "Ivan", "Judy"};
    return p < std::size(kNames) ? kNames[p] : "party" + std::to_string(p);
}

}  // namespace

std::string decoded_string(const SessionResult &r, std::uint32_t viewer, std::uint32_t sender) {
    if (viewer >= r.views.size() || viewer == sender) return "";
    const DecodedView &v = r.views[viewer];
    if (sender >= v.messages.size()) return "";
    std::string out;
    const auto &bits = v.messages[sender];
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::size_t k = sender == 0 ? i / 2 : i;
        out.push_back(v.undecodable[k] ? '?' : (bits[i] ? '1' : '0'));
    }
    return out;
}

ordered_json session_result_json(const SessionResult &r) {
    ordered_json j;
    j["status"] = status_name(r.status);
    j["check_error_rate"] = r.check.error_rate;
    j["checked"] = r.check.records.size();
    j["check_errors"] = r.check.errors;
    ordered_json groups = ordered_json::array();
    for (GroupId g : r.message_groups) groups.push_back(g.index);
    j["message_groups"] = groups;
    ordered_json ann = ordered_json::array();
    for (const auto &a : r.announcements) {
        ann.push_back({{"group", a.group.index}, {"initial", display_label(a.initial)}, {"measured", display_label(a.measured)}});
    }
    j["announcements"] = ann;
    ordered_json views = ordered_json::array();
    for (const auto &v : r.views) {
        ordered_json view;
        view["viewer"] = v.viewer.index;
        ordered_json msgs = ordered_json::object();
        for (std::uint32_t p = 0; p < v.messages.size(); ++p) {
            if (p != v.viewer.index) msgs[std::to_string(p)] = decoded_string(r, v.viewer.index, p);
        }
        view["decoded"] = msgs;
        views.push_back(view);
    }
    j["views"] = views;
    if (r.reveal) {
        j["reveal"] = {{"revealed", r.reveal->revealed}, {"mismatches", r.reveal->mismatches},
                       {"aborted", r.reveal->aborted}};
    }
    j["payload_bits"] = r.payload_bits;
    if (r.eve) {
        ordered_json eve;
        eve["guesses_only"] = r.eve->guesses_only;
        ordered_json bits = ordered_json::array();
        for (const auto &b : r.eve->party_bits) {
            bits.push_back({{"group", b.group.index}, {"party", b.party.index}, {"bit", b.bit}});
        }
        eve["party_bits"] = bits;
        ordered_json dibits = ordered_json::array();
        for (const auto &d : r.eve->alice_dibits) {
            dibits.push_back({{"group", d.group.index}, {"bits", std::string{char('0' + d.bits[0]), char('0' + d.bits[1])}}});
        }
        eve["alice_dibits"] = dibits;
        eve["actions"] = r.eve->actions;
        j["eve"] = eve;
    }
    return j;
}

std::string session_summary(const SessionResult &r) {
    std::ostringstream out;
    out << "status: " << status_name(r.status) << "\n";
    out << "check: " << r.check.errors << "/" << r.check.records.size() << " inconsistent (error rate "
        << r.check.error_rate << ")\n";
    for (const auto &a : r.announcements) {
        out << "group " << a.group.index << ": initial " << display_label(a.initial) << ", measured "
            << display_label(a.measured) << "\n";
    }
    for (const auto &v : r.views) {
        out << party_name(v.viewer.index) << " decoded {";
        bool first = true;
        for (std::uint32_t p = 0; p < v.messages.size(); ++p) {
            if (p == v.viewer.index) continue;
            out << (first ? "" : ", ") << party_name(p) << ":" << decoded_string(r, v.viewer.index, p);
            first = false;
        }
        out << "}\n";
    }
    if (r.reveal) {
        out << "reveal: " << r.reveal->mismatches << "/" << r.reveal->revealed << " mismatches\n";
    }
    return out.str();
}

}  // namespace ghzqsdc
