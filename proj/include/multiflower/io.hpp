#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multiflower/cuts.hpp"
#include "multiflower/relax.hpp"
#include "multiflower/rmc.hpp"

namespace multiflower {

/// Point file: { "vertices": {"1": v, ...}, "edges": [{"vars":[...], "value": v}, ...] }.
FractionalPoint load_point(std::string_view text);
std::string render_point(const FractionalPoint& point, const Hypergraph& h);

/// Explicit-RMC file: { "partitions": [{"set":[...], "left":[...], "right":[...]}, ...] }.
PartitionMap load_partition_map(std::string_view text);
std::string render_partition_map(const PartitionMap& map);

/// One JSON object per cut: tag, center, neighbors, coefficients, rhs, violation.
std::string cut_to_json_line(const SeparatedCut& cut);

/// JSON document for a projection or cut system, with per-row provenance.
std::string system_to_json(const std::vector<LinearInequality>& system);

std::string report_to_json(const CompareReport& report);
std::string report_to_csv(const CompareReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace multiflower
