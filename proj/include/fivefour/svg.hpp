#pragma once

#include "fivefour/geometry.hpp"
#include "fivefour/report.hpp"
#include "fivefour/swing.hpp"

#include <span>
#include <string>
#include <vector>

namespace fivefour::svg {

// Highlight fills, in order: blue, red, green, yellow, then muted extras.
inline constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#e6c229",
                                           "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

// Order-5 Voronoi diagram: cell outlines, one filled polygon per highlighted
// coalition, labeled seeds.
std::string render_voronoi(const PointSet9& seeds, std::span<const VoronoiCell> cells,
                           std::span<const SeatSet> highlights, const GeometryOptions& options = {});

// Majority focal (triangle), minority focal (square), court center (plus), the
// two circles of influence, majority names in bold.
std::string render_circles(const Embedding& e, const FifthVoteResult& result);

// Number line of the 1-D coordinates with labels alternating above and below.
std::string render_line(const Embedding& e);

// Seeds with one separating line; owners in bold.
std::string render_halfplane(const PointSet9& seeds, const SeparatingLine& line);

// Minimum accuracy per court: plus for Voronoi, triangle for half-plane.
std::string render_min_accuracy(std::span<const MinAccuracy> series);

}  // namespace fivefour::svg
