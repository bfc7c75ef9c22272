// Copyright 2026 The Collat Authors.
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

// JSON documents for networks and collateral matrices.
//
//   {
//     "version": 1,
//     "vertices": [{"id": "A", "z": "8", "alpha": "14"}, ...],
//     "edges": [{"enterprise": "A", "investor": "B", "amount": "1"}, ...],
//     "meta": {"generator": "cycle", "k": "7"}
//   }
//
// Rationals are strings ("3", "-2", "5/2") or JSON integers. Floating-point
// literals are rejected so that no value is ever rounded on the way in.

#ifndef COLLAT_DOCUMENT_H_
#define COLLAT_DOCUMENT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "collat/network.h"
#include "json.hpp"

namespace collat {

inline constexpr int kDocumentVersion = 1;

// Throws DocumentError with a line:column or JSON-pointer location.
InvestmentNetwork parse_network(std::string_view text);

// Canonical pretty-printed document, newline-terminated. Throws
// DocumentError if two vertices share a name.
std::string serialize_network(const InvestmentNetwork& net);
nlohmann::ordered_json network_to_json(const InvestmentNetwork& net);

// Reads {"collaterals": [{"enterprise", "investor", "amount"}, ...]}; other
// top-level keys are ignored, so a solve report can be fed back directly.
// Missing edges get 0; edges absent from `net` are errors.
CollateralMatrix parse_collaterals(const InvestmentNetwork& net, std::string_view text);
nlohmann::ordered_json collaterals_to_json(const InvestmentNetwork& net,
                                           const CollateralMatrix& c);

// Throws DocumentError if the file cannot be read or written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace collat

#endif  // COLLAT_DOCUMENT_H_
