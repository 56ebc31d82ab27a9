#pragma once
#include "sbl/persistence.hpp"
#include <string>
#include <utility>
#include <vector>

namespace sbl {

// Deterministic SVG output (fixed-precision coordinates, no timestamps).

// Horizontal bars per degree; infinite deaths are drawn to the right margin
// with an arrowhead.
std::string svg_barcode(const Barcode& b, const std::string& title = "");

// Step plot of L -> total rank (the capacity staircase): jump locations on
// the horizontal axis, ranks on the vertical.
std::string svg_rank_steps(const std::vector<std::pair<double, std::int64_t>>& samples,
                           const std::string& title = "");

} // namespace sbl
