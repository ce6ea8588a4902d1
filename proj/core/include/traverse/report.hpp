#pragma once

#include "traverse/analysis.hpp"
#include "traverse/local_model.hpp"

#include <string>
#include <string_view>

namespace traverse {

std::string_view version();

/// The analysis document: deterministic key order, exact values as "p/q"
/// strings, approximate coordinates rounded to 10 significant digits.
std::string report_json(const Analysis& analysis, int indent = 2);

std::string oracle_json(const OracleReport& report, int indent = 2);

/// T(v) as an undirected DOT graph; vertices labelled by pattern, loop edges
/// without vertices drawn through an auxiliary point node.
std::string trajectory_graph_dot(const TrajectoryGraph& graph);

}  // namespace traverse
