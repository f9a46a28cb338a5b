// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/classify.hpp"
#include "octaq/oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace octaq {

using Json = nlohmann::ordered_json;

Json to_json(const TopologyReport& r);
Json to_json(const OracleReport& r);
Json to_json(const std::vector<GroupElement>& group);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row, const SweepSpec& spec);

}  // namespace octaq
