#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hellylab/complexes.hpp"
#include "hellylab/graph.hpp"
#include "hellylab/metric.hpp"
#include "hellylab/poset.hpp"

namespace hellylab {

// Edge-list format: first line "n m", then m lines "u v" (0-based);
// '#' starts a comment. Duplicate edges are warnings, loops are errors.
SimpleGraph parse_graph(std::istream& in, std::vector<std::string>* warnings = nullptr);
SimpleGraph parse_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
std::string emit_graph(const SimpleGraph& g);

// CSV, first row optional labels, entries integers or "p/q".
FiniteMetric parse_metric(std::istream& in);
FiniteMetric parse_metric_file(const std::string& path);

// One "a < b" relation per line.
Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);

// One whitespace-separated vertex set per line.
std::vector<Bits> parse_cells(std::istream& in, int universe);
std::vector<Bits> parse_cells_file(const std::string& path, int universe);

// DOT emission; vertices listed in `boxes` are drawn as boxes (original
// vertices), all others as ellipses (hull-added).
std::string emit_dot(const SimpleGraph& g, const std::vector<std::string>& labels,
                     const std::vector<bool>& boxes);

std::string json_schema_version();

}  // namespace hellylab
