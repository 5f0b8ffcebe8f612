#include "fivefour/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

namespace fivefour {

namespace {

Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }
Point perp(Point a) { return {-a.y, a.x}; }

struct HalfPlane {
    Point a;  // a . p <= b
    double b;
};

// Bisector constraints |c - s| < |c - t| for s in owners, t outside, in
// coordinates relative to `origin`.
std::vector<HalfPlane> bisectors(const PointSet9& seeds, SeatSet owners, Point origin) {
    std::vector<HalfPlane> out;
    for (std::size_t s = 0; s < kSeats; ++s) {
        if (!owners.contains(s)) {
            continue;
        }
        const Point ps = seeds[s] - origin;
        for (std::size_t t = 0; t < kSeats; ++t) {
            if (owners.contains(t)) {
                continue;
            }
            const Point pt = seeds[t] - origin;
            out.push_back({2.0 * (pt - ps), dot(pt, pt) - dot(ps, ps)});
        }
    }
    return out;
}

double margin_of(const std::vector<HalfPlane>& planes, Point c) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& h : planes) {
        m = std::min(m, (h.b - dot(h.a, c)) / norm(h.a));
    }
    return m;
}

}  // namespace

PointSet9::PointSet9(std::vector<Justice> roster, std::vector<Point> points)
    : roster_(std::move(roster)), points_(std::move(points)) {
    if (roster_.size() != kSeats || points_.size() != kSeats) {
        throw DataError("a point set needs exactly nine labeled points");
    }
    for (std::size_t i = 0; i < kSeats; ++i) {
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
            throw DataError("non-finite coordinate for " + roster_[i].name);
        }
        for (std::size_t j = i + 1; j < kSeats; ++j) {
            if (roster_[i].name == roster_[j].name) {
                throw DataError("duplicate label " + roster_[i].name);
            }
            diameter_ = std::max(diameter_, norm(points_[i] - points_[j]));
        }
    }
    for (std::size_t i = 0; i < kSeats; ++i) {
        for (std::size_t j = i + 1; j < kSeats; ++j) {
            if (norm(points_[i] - points_[j]) <= 1e-12 * diameter_) {
                throw DataError("coincident points for " + roster_[i].name + " and " + roster_[j].name);
            }
        }
    }
}

PointSet9 PointSet9::from_embedding(const Embedding& e) { return {e.roster, e.coords}; }

Point PointSet9::centroid() const {
    Point c;
    for (const auto& p : points_) {
        c = c + p;
    }
    return (1.0 / static_cast<double>(points_.size())) * c;
}

Polygon bounding_square(const PointSet9& seeds, const GeometryOptions& options) {
    const Point c = seeds.centroid();
    double far = 0.0;
    for (const auto& p : seeds.points()) {
        far = std::max(far, norm(p - c));
    }
    std::size_t anchor = 0;
    for (std::size_t i = 0; i < kSeats; ++i) {
        if (norm(seeds[i] - c) >= far * (1.0 - 1e-9)) {
            anchor = i;
            break;
        }
    }
    const Point u = (1.0 / norm(seeds[anchor] - c)) * (seeds[anchor] - c);
    const Point v = perp(u);
    const double h = 0.5 * options.box_scale * seeds.diameter();
    return {c + h * (-1.0 * u - v), c + h * (u - v), c + h * (u + v), c + h * (v - u)};
}

Polygon clip_half_plane(const Polygon& poly, Point a, double b) {
    Polygon out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = poly[i];
        const Point q = poly[(i + 1) % n];
        const double fp = dot(a, p) - b;
        const double fq = dot(a, q) - b;
        if (fp <= 0.0) {
            out.push_back(p);
        }
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
            const double t = fp / (fp - fq);
            out.push_back(p + t * (q - p));
        }
    }
    // Drop repeated vertices produced by clipping through a vertex.
    Polygon dedup;
    for (const auto& p : out) {
        if (dedup.empty() || !(p == dedup.back())) {
            dedup.push_back(p);
        }
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) {
        dedup.pop_back();
    }
    return dedup;
}

double polygon_area(const Polygon& poly) {
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        twice += cross(poly[i], poly[(i + 1) % poly.size()]);
    }
    return 0.5 * twice;
}

Point polygon_centroid(const Polygon& poly) {
    if (poly.empty()) {
        return {};
    }
    // Relative to the first vertex to limit cancellation.
    const Point o = poly.front();
    double twice = 0.0;
    Point acc;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point p = poly[i] - o;
        const Point q = poly[(i + 1) % poly.size()] - o;
        const double w = cross(p, q);
        twice += w;
        acc = acc + w * (p + q);
    }
    if (twice == 0.0) {
        Point mean;
        for (const auto& p : poly) {
            mean = mean + p;
        }
        return (1.0 / static_cast<double>(poly.size())) * mean;
    }
    return o + (1.0 / (3.0 * twice)) * acc;
}

std::optional<VoronoiCell> voronoi_cell(const PointSet9& seeds, SeatSet owners, const GeometryOptions& options) {
    if (owners.size() != kCoalitionSize) {
        throw DataError("voronoi_cell: owners must be five seats");
    }
    const Point origin = seeds.centroid();
    const auto planes = bisectors(seeds, owners, origin);
    Polygon poly = bounding_square(seeds, options);
    for (auto& p : poly) {
        p = p - origin;
    }
    for (const auto& h : planes) {
        poly = clip_half_plane(poly, h.a, h.b);
        if (poly.size() < 3) {
            return std::nullopt;
        }
    }
    if (!(polygon_area(poly) > 0.0)) {
        return std::nullopt;
    }
    VoronoiCell cell;
    cell.owners = owners;
    const Point w = polygon_centroid(poly);
    cell.margin = margin_of(planes, w);
    cell.degenerate = !(cell.margin >= options.epsilon * seeds.diameter());
    cell.witness = w + origin;
    cell.polygon.reserve(poly.size());
    for (const auto& p : poly) {
        cell.polygon.push_back(p + origin);
    }
    return cell;
}

std::vector<VoronoiCell> voronoi_coalitions(const PointSet9& seeds, const GeometryOptions& options, Diagnostics* diag) {
    std::vector<VoronoiCell> cells;
    for (SeatSet s : all_five_subsets()) {
        auto cell = voronoi_cell(seeds, s, options);
        if (!cell) {
            continue;
        }
        if (cell->degenerate) {
            warn(diag, "voronoi: near-degenerate cell for " + join_names(s, seeds.roster()) + " (margin " +
                           std::to_string(cell->margin) + ") excluded");
            continue;
        }
        cells.push_back(std::move(*cell));
    }
    return cells;
}

std::optional<SeparatingLine> separating_line(const PointSet9& seeds, SeatSet owners, const GeometryOptions& options) {
    if (owners.size() != kCoalitionSize) {
        throw DataError("separating_line: owners must be five seats");
    }
    const Point origin = seeds.centroid();
    std::array<Point, kSeats> p{};
    for (std::size_t i = 0; i < kSeats; ++i) {
        p[i] = seeds[i] - origin;
    }
    // The widest slab is normal to the closest-point direction between the two
    // hulls: either a pair direction (vertex-vertex) or a pair normal (vertex-edge).
    double best_gap = -std::numeric_limits<double>::infinity();
    Point best_u;
    double best_offset = 0.0;
    for (std::size_t i = 0; i < kSeats; ++i) {
        for (std::size_t j = i + 1; j < kSeats; ++j) {
            const Point d = p[j] - p[i];
            const Point unit = (1.0 / norm(d)) * d;
            const std::array<Point, 4> candidates{unit, -1.0 * unit, perp(unit), -1.0 * perp(unit)};
            for (const Point& u : candidates) {
                double inner = -std::numeric_limits<double>::infinity();
                double outer = std::numeric_limits<double>::infinity();
                for (std::size_t k = 0; k < kSeats; ++k) {
                    const double proj = dot(u, p[k]);
                    if (owners.contains(k)) {
                        inner = std::max(inner, proj);
                    } else {
                        outer = std::min(outer, proj);
                    }
                }
                if (outer - inner > best_gap) {
                    best_gap = outer - inner;
                    best_u = u;
                    best_offset = 0.5 * (outer + inner);
                }
            }
        }
    }
    const double tol = 2.0 * options.epsilon * seeds.diameter();
    if (best_gap < -tol) {
        return std::nullopt;
    }
    SeparatingLine line;
    line.owners = owners;
    line.normal = best_u;
    line.offset = best_offset + dot(best_u, origin);
    line.margin = 0.5 * best_gap;
    line.degenerate = best_gap <= tol;
    return line;
}

std::vector<SeparatingLine> half_plane_coalitions(const PointSet9& seeds, const GeometryOptions& options,
                                                  Diagnostics* diag) {
    std::vector<SeparatingLine> out;
    for (SeatSet s : all_five_subsets()) {
        auto line = separating_line(seeds, s, options);
        if (!line) {
            continue;
        }
        if (line->degenerate) {
            warn(diag, "half-plane: " + join_names(s, seeds.roster()) +
                           " is separable only within tolerance (collinear degeneracy); excluded");
            continue;
        }
        out.push_back(*line);
    }
    return out;
}

std::optional<SeatSet> nearest_five(const PointSet9& seeds, Point c) {
    std::array<std::pair<double, std::size_t>, kSeats> d{};
    for (std::size_t i = 0; i < kSeats; ++i) {
        const Point v = seeds[i] - c;
        d[i] = {dot(v, v), i};
    }
    std::sort(d.begin(), d.end());
    if (!(d[kCoalitionSize - 1].first < d[kCoalitionSize].first)) {
        return std::nullopt;
    }
    std::uint16_t bits = 0;
    for (std::size_t k = 0; k < kCoalitionSize; ++k) {
        bits = static_cast<std::uint16_t>(bits | (1U << d[k].second));
    }
    return SeatSet(bits);
}

namespace oracle {

GridFrame grid_frame(const PointSet9& seeds, int resolution) {
    Point lo = seeds[0];
    Point hi = seeds[0];
    for (const auto& p : seeds.points()) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    const double diag = norm(hi - lo);
    lo = lo - Point{diag, diag};
    hi = hi + Point{diag, diag};
    return {lo, hi, std::max(hi.x - lo.x, hi.y - lo.y) / static_cast<double>(resolution - 1)};
}

std::set<std::uint16_t> voronoi_grid(const PointSet9& seeds, int resolution) {
    if (resolution < 2) {
        throw ConfigError("grid resolution must be at least 2");
    }
    const GridFrame f = grid_frame(seeds, resolution);
    const double sx = (f.hi.x - f.lo.x) / static_cast<double>(resolution - 1);
    const double sy = (f.hi.y - f.lo.y) / static_cast<double>(resolution - 1);
    std::set<std::uint16_t> found;
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const Point c{f.lo.x + sx * i, f.lo.y + sy * j};
            if (auto s = nearest_five(seeds, c)) {
                found.insert(s->bits());
            }
        }
    }
    return found;
}

Polygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return pts;
    }
    Polygon hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

namespace {

int orientation(Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point a, Point b, Point p) {
    return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(Point a, Point b, Point c, Point d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

// Closed containment of p in a convex hull of any size.
bool hull_contains(const Polygon& hull, Point p) {
    if (hull.size() == 1) {
        return hull[0] == p;
    }
    if (hull.size() == 2) {
        return on_segment(hull[0], hull[1], p);
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (orientation(hull[i], hull[(i + 1) % hull.size()], p) < 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<Point, Point>> hull_edges(const Polygon& hull) {
    std::vector<std::pair<Point, Point>> edges;
    if (hull.size() == 2) {
        edges.emplace_back(hull[0], hull[1]);
    } else if (hull.size() > 2) {
        for (std::size_t i = 0; i < hull.size(); ++i) {
            edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
        }
    }
    return edges;
}

}  // namespace

bool separable(SeatSet owners, const PointSet9& seeds) {
    std::vector<Point> in;
    std::vector<Point> out;
    for (std::size_t i = 0; i < kSeats; ++i) {
        (owners.contains(i) ? in : out).push_back(seeds[i]);
    }
    const Polygon a = convex_hull(in);
    const Polygon b = convex_hull(out);
    for (const auto& p : a) {
        if (hull_contains(b, p)) {
            return false;
        }
    }
    for (const auto& p : b) {
        if (hull_contains(a, p)) {
            return false;
        }
    }
    for (const auto& [p, q] : hull_edges(a)) {
        for (const auto& [r, s] : hull_edges(b)) {
            if (segments_meet(p, q, r, s)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace oracle

namespace {

nlohmann::ordered_json point_json(Point p) { return {p.x, p.y}; }

}  // namespace

std::string voronoi_json(const std::vector<VoronoiCell>& cells, const std::vector<Justice>& roster) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : cells) {
        nlohmann::ordered_json j;
        j["members"] = member_names(c.owners, roster);
        j["witness"] = point_json(c.witness);
        j["margin"] = c.margin;
        auto& poly = j["polygon"] = nlohmann::ordered_json::array();
        for (const auto& p : c.polygon) {
            poly.push_back(point_json(p));
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string halfplane_json(const std::vector<SeparatingLine>& lines, const std::vector<Justice>& roster) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& l : lines) {
        nlohmann::ordered_json j;
        j["members"] = member_names(l.owners, roster);
        j["normal"] = point_json(l.normal);
        j["offset"] = l.offset;
        j["margin"] = l.margin;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace fivefour
