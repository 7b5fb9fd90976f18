// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EF1_IO_HPP_
#define EF1_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "ef1/algorithms.hpp"
#include "ef1/allocation.hpp"
#include "ef1/fairness.hpp"
#include "ef1/instance.hpp"
#include "ef1/oracle.hpp"
#include "ef1/search.hpp"
#include "ef1/trace.hpp"

namespace ef1::io {

using nlohmann::json;

// Malformed input of any kind raises Error(kParseError); a well-formed
// document describing an invalid instance raises the validation error.

// {"agents": n, "items": m, "values": [["p/q", ...], ...]}. Values may also be
// bare integers or "p" strings.
Instance instance_from_json(const json& doc);
json instance_to_json(const Instance& inst);

// {"bundles": [[...], ...]}; extra keys are ignored.
Allocation allocation_from_json(const json& doc, int items);
json allocation_to_json(const Allocation& alloc);

// Accepts the bare round list or an object carrying it under "trace".
AlgorithmTrace trace_from_json(const json& doc);
json trace_to_json(const AlgorithmTrace& trace);

json ef1_report_to_json(const Ef1Report& report);
json price_report_to_json(const PriceReport& report);
json search_summary_to_json(const SearchReport& report);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ef1::io

#endif  // EF1_IO_HPP_
