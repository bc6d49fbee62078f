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

#include "protocol/transcript.hpp"

namespace ghzqsdc {

using nlohmann::ordered_json;

void Transcript::append(std::string kind, ordered_json fields) {
    events_.push_back(Event{std::move(kind), std::move(fields)});
}

void Transcript::record_prepare(GroupId group, const GhzIndex &initial) {
    ordered_json f;
    f["group"] = group.index;
    f["initial"] = display_label(initial);
    f["visibility"] = "alice-private";
    append("prepare", std::move(f));
}

void Transcript::record_distribute(GroupId group, unsigned parties) {
    ordered_json f;
    f["group"] = group.index;
    ordered_json ids = ordered_json::array();
    for (unsigned p = 1; p < parties; ++p) ids.push_back(p);
    f["particles_sent_to"] = std::move(ids);
    append("distribute", std::move(f));
}

void Transcript::record_check_selection(const std::vector<GroupId> &groups, const std::vector<MeasBasis> &bases) {
    ordered_json f;
    f["by_party"] = 1;
    ordered_json gs = ordered_json::array();
    std::string bs;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        gs.push_back(groups[i].index);
        bs.push_back(basis_char(bases[i]));
    }
    f["groups"] = std::move(gs);
    f["bases"] = bs;
    append("check_select", std::move(f));
}

void Transcript::record_check_outcome(GroupId group, MeasBasis basis, const std::string &outcome, bool consistent) {
    ordered_json f;
    f["group"] = group.index;
    f["basis"] = std::string(1, basis_char(basis));
    f["outcome"] = outcome;
    f["consistent"] = consistent;
    append("check_outcome", std::move(f));
}

void Transcript::record_check_summary(std::size_t errors, std::size_t checked, double error_rate, bool aborted) {
    ordered_json f;
    f["errors"] = errors;
    f["checked"] = checked;
    f["error_rate"] = error_rate;
    f["aborted"] = aborted;
    append("check_summary", std::move(f));
}

void Transcript::record_announcement(GroupId group, const GhzIndex &initial, const GhzIndex &measured) {
    ordered_json f;
    f["group"] = group.index;
    f["initial"] = display_label(initial);
    f["measured"] = display_label(measured);
    append("announce", std::move(f));
}

void Transcript::record_reveal(PartyId party, const std::vector<std::size_t> &positions, const std::string &bits) {
    ordered_json f;
    f["party"] = party.index;
    f["positions"] = positions;
    f["bits"] = bits;
    append("reveal", std::move(f));
}

void Transcript::record_reveal_summary(std::size_t revealed, std::size_t mismatches, bool aborted) {
    ordered_json f;
    f["revealed"] = revealed;
    f["mismatches"] = mismatches;
    f["aborted"] = aborted;
    append("reveal_summary", std::move(f));
}

void Transcript::record_abort(const std::string &phase, const std::string &reason) {
    ordered_json f;
    f["phase"] = phase;
    f["reason"] = reason;
    append("abort", std::move(f));
}

void Transcript::record_complete(std::size_t payload_bits) {
    ordered_json f;
    f["payload_bits"] = payload_bits;
    append("complete", std::move(f));
}

std::string Transcript::to_jsonl() const {
    std::string out;
    for (std::size_t i = 0; i < events_.size(); ++i) {
        ordered_json line;
        line["seq"] = i;
        line["event"] = events_[i].kind;
        for (const auto &[k, v] : events_[i].fields.items()) line[k] = v;
        out += line.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<GroupId> Transcript::checked_groups() const {
    std::vector<GroupId> out;
    for (const Event &e : events_) {
        if (e.kind != "check_select") continue;
        for (const auto &g : e.fields["groups"]) out.push_back(GroupId{g.get<std::uint32_t>()});
    }
    return out;
}

std::vector<GroupId> Transcript::announced_groups() const {
    std::vector<GroupId> out;
    for (const Event &e : events_) {
        if (e.kind == "announce") out.push_back(GroupId{e.fields["group"].get<std::uint32_t>()});
    }
    return out;
}

}  // namespace ghzqsdc
