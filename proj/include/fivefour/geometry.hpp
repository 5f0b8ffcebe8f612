#pragma once

#include "fivefour/coalition.hpp"
#include "fivefour/mds.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fivefour {

// Nine labeled, pairwise-distinct planar seeds.
class PointSet9 {
public:
    PointSet9(std::vector<Justice> roster, std::vector<Point> points);
    static PointSet9 from_embedding(const Embedding& e);

    const std::vector<Justice>& roster() const { return roster_; }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    double diameter() const { return diameter_; }
    Point centroid() const;

private:
    std::vector<Justice> roster_;
    std::vector<Point> points_;
    double diameter_ = 0.0;
};

struct GeometryOptions {
    double epsilon = 1e-9;    // interiority margin, relative to the configuration diameter
    double box_scale = 10.0;  // side of the clipping square, in configuration diameters
};

using Polygon = std::vector<Point>;  // counterclockwise

struct VoronoiCell {
    SeatSet owners;
    Polygon polygon;  // clipped to the bounding square
    Point witness;    // polygon centroid
    double margin = 0.0;  // distance from the witness to the nearest bisector
    bool degenerate = false;
};

struct SeparatingLine {
    SeatSet owners;
    Point normal;  // unit; normal . p < offset for owners, > offset for the rest
    double offset = 0.0;
    double margin = 0.0;  // distance from the line to the nearest point
    bool degenerate = false;
};

// Square of side box_scale * diameter centered at the centroid of the seeds,
// with one axis pointing at the seed farthest from the centroid.
Polygon bounding_square(const PointSet9& seeds, const GeometryOptions& options = {});

// Cell of the order-5 Voronoi diagram owned by `owners`, or nullopt when the
// open region is empty inside the bounding square. Near-empty regions come back
// with degenerate = true.
std::optional<VoronoiCell> voronoi_cell(const PointSet9& seeds, SeatSet owners, const GeometryOptions& options = {});

// All 5-subsets owning a cell with nonempty interior, sorted by members.
// Degenerate cells are excluded and reported through diag.
std::vector<VoronoiCell> voronoi_coalitions(const PointSet9& seeds, const GeometryOptions& options = {},
                                            Diagnostics* diag = nullptr);

// Maximum-margin line separating `owners` from the other four, or nullopt if none exists.
std::optional<SeparatingLine> separating_line(const PointSet9& seeds, SeatSet owners,
                                              const GeometryOptions& options = {});

// All 5-subsets strictly separable from their complement by a line (5-sets).
std::vector<SeparatingLine> half_plane_coalitions(const PointSet9& seeds, const GeometryOptions& options = {},
                                                  Diagnostics* diag = nullptr);

// The five seeds strictly nearest to c, or nullopt when the fifth and sixth tie.
std::optional<SeatSet> nearest_five(const PointSet9& seeds, Point c);

// Convex polygon helpers.
Polygon clip_half_plane(const Polygon& poly, Point a, double b);  // keeps a . p <= b
double polygon_area(const Polygon& poly);
Point polygon_centroid(const Polygon& poly);

namespace oracle {

// Five nearest seeds at every node of a resolution x resolution grid spanning
// the seeds' bounding box inflated by one box diagonal on each side. Tied
// nodes are skipped.
std::set<std::uint16_t> voronoi_grid(const PointSet9& seeds, int resolution);

struct GridFrame {
    Point lo;
    Point hi;
    double spacing = 0.0;
};
GridFrame grid_frame(const PointSet9& seeds, int resolution);

// True iff the convex hulls of `owners` and its complement are disjoint.
bool separable(SeatSet owners, const PointSet9& seeds);

// Convex hull, counterclockwise, collinear points dropped.
Polygon convex_hull(std::vector<Point> pts);

}  // namespace oracle

std::string voronoi_json(const std::vector<VoronoiCell>& cells, const std::vector<Justice>& roster);
std::string halfplane_json(const std::vector<SeparatingLine>& lines, const std::vector<Justice>& roster);

}  // namespace fivefour
