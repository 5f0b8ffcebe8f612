#include "fivefour/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fivefour::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kPad = 48.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") {
        s = "0.00";
    }
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// World rectangle mapped onto the canvas with equal axis scales, y up.
class Frame {
public:
    Frame(Point lo, Point hi, double width = kWidth, double height = kHeight) : lo_(lo), hi_(hi), height_(height) {
        const double w = std::max(hi.x - lo.x, 1e-12);
        const double h = std::max(hi.y - lo.y, 1e-12);
        scale_ = std::min((width - 2 * kPad) / w, (height - 2 * kPad) / h);
        off_x_ = (width - scale_ * w) / 2.0;
        off_y_ = (height - scale_ * h) / 2.0;
    }

    Point map(Point p) const { return {off_x_ + (p.x - lo_.x) * scale_, height_ - off_y_ - (p.y - lo_.y) * scale_}; }
    double length(double d) const { return d * scale_; }
    Point lo() const { return lo_; }
    Point hi() const { return hi_; }

private:
    Point lo_;
    Point hi_;
    double height_;
    double scale_ = 1.0;
    double off_x_ = 0.0;
    double off_y_ = 0.0;
};

class Document {
public:
    Document(double width = kWidth, double height = kHeight) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
             << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
             << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
             << "\" fill=\"white\" stroke=\"none\"/>\n";
    }

    void polygon(const Frame& f, const Polygon& poly, const std::string& fill, const std::string& stroke,
                 const std::string& cls, double opacity = 1.0) {
        out_ << "<polygon class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point p = f.map(poly[i]);
            out_ << (i ? " " : "") << num(p.x) << ',' << num(p.y);
        }
        out_ << "\" fill=\"" << fill << "\"";
        if (fill != "none" && opacity < 1.0) {
            out_ << " fill-opacity=\"" << num(opacity) << "\"";
        }
        out_ << " stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
    }

    void circle(Point c, double r, const std::string& fill, const std::string& stroke, const std::string& cls) {
        out_ << "<circle class=\"" << cls << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
             << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"/>\n";
    }

    void line(Point a, Point b, const std::string& stroke, double width, const std::string& cls) {
        out_ << "<line class=\"" << cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
             << num(b.x) << "\" y2=\"" << num(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
             << "\"/>\n";
    }

    void text(Point at, const std::string& content, bool bold = false, const std::string& anchor = "start",
              double size = 13.0) {
        out_ << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y) << "\" font-family=\"sans-serif\" font-size=\""
             << num(size) << "\" text-anchor=\"" << anchor << "\"";
        if (bold) {
            out_ << " font-weight=\"bold\"";
        }
        out_ << ">" << escape(content) << "</text>\n";
    }

    void raw(const std::string& s) { out_ << s; }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    std::ostringstream out_;
};

Polygon clip_to(const Polygon& poly, Point lo, Point hi) {
    Polygon p = clip_half_plane(poly, {1, 0}, hi.x);
    if (p.size() >= 3) p = clip_half_plane(p, {-1, 0}, -lo.x);
    if (p.size() >= 3) p = clip_half_plane(p, {0, 1}, hi.y);
    if (p.size() >= 3) p = clip_half_plane(p, {0, -1}, -lo.y);
    return p.size() >= 3 ? p : Polygon{};
}

std::pair<Point, Point> bounds(std::span<const Point> pts, double inflate) {
    Point lo = pts.front();
    Point hi = pts.front();
    for (const auto& p : pts) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    return {{lo.x - inflate, lo.y - inflate}, {hi.x + inflate, hi.y + inflate}};
}

void draw_seeds(Document& doc, const Frame& f, const PointSet9& seeds, SeatSet bold) {
    for (std::size_t i = 0; i < kSeats; ++i) {
        const Point p = f.map(seeds[i]);
        doc.circle(p, 3.5, "black", "none", "seed");
        doc.text({p.x + 6, p.y - 6}, seeds.roster()[i].name, bold.contains(i));
    }
}

}  // namespace

std::string render_voronoi(const PointSet9& seeds, std::span<const VoronoiCell> cells,
                           std::span<const SeatSet> highlights, const GeometryOptions& options) {
    std::vector<Point> frame_pts = seeds.points();
    std::vector<const VoronoiCell*> highlighted;
    std::vector<SeatSet> missing;
    for (SeatSet h : highlights) {
        auto it = std::find_if(cells.begin(), cells.end(), [&](const VoronoiCell& c) { return c.owners == h; });
        if (it == cells.end()) {
            missing.push_back(h);
            highlighted.push_back(nullptr);
        } else {
            highlighted.push_back(&*it);
            frame_pts.push_back(it->witness);
        }
    }
    auto [lo, hi] = bounds(frame_pts, 0.5 * seeds.diameter());
    const Frame f(lo, hi);
    Document doc;
    doc.raw("<!-- order-5 Voronoi diagram; clipping square side " + num(options.box_scale) + " diameters -->\n");
    for (std::size_t k = 0; k < highlighted.size(); ++k) {
        if (highlighted[k] == nullptr) {
            continue;
        }
        const Polygon p = clip_to(highlighted[k]->polygon, lo, hi);
        doc.polygon(f, p, kPalette[k % std::size(kPalette)], "none", "cell-highlight", 0.55);
    }
    for (const auto& c : cells) {
        const Polygon p = clip_to(c.polygon, lo, hi);
        if (!p.empty()) {
            doc.polygon(f, p, "none", "#555555", "cell");
        }
    }
    const Point tl = f.map({lo.x, hi.y});
    const Point br = f.map({hi.x, lo.y});
    doc.raw("<rect class=\"frame\" x=\"" + num(tl.x) + "\" y=\"" + num(tl.y) + "\" width=\"" + num(br.x - tl.x) +
            "\" height=\"" + num(br.y - tl.y) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n");
    draw_seeds(doc, f, seeds, SeatSet{});
    double y = kPad / 2;
    for (SeatSet m : missing) {
        doc.text({kPad, y}, "not a Voronoi coalition: " + join_names(m, seeds.roster()), false, "start", 11);
        y += 14;
    }
    return doc.finish();
}

std::string render_circles(const Embedding& e, const FifthVoteResult& result) {
    const auto& fp = result.focal;
    std::vector<Point> pts = e.coords;
    const double rmaj = result.majority_radius;
    const double rmin = result.minority_radius;
    pts.push_back({fp.majority.x - rmaj, fp.majority.y - rmaj});
    pts.push_back({fp.majority.x + rmaj, fp.majority.y + rmaj});
    pts.push_back({fp.minority.x - rmin, fp.minority.y - rmin});
    pts.push_back({fp.minority.x + rmin, fp.minority.y + rmin});
    double span = 0.0;
    for (const auto& p : e.coords) {
        span = std::max({span, std::abs(p.x), std::abs(p.y)});
    }
    auto [lo, hi] = bounds(pts, 0.1 * std::max(span, 1e-9));
    const Frame f(lo, hi);
    Document doc;
    doc.circle(f.map(fp.majority), f.length(rmaj), "none", "#1f77b4", "influence-majority");
    doc.circle(f.map(fp.minority), f.length(rmin), "none", "#d62728", "influence-minority");

    const Point tri = f.map(fp.majority);
    doc.raw("<polygon class=\"focal-majority\" points=\"" + num(tri.x) + "," + num(tri.y - 7) + " " + num(tri.x - 6) +
            "," + num(tri.y + 5) + " " + num(tri.x + 6) + "," + num(tri.y + 5) + "\" fill=\"black\" stroke=\"none\"/>\n");
    const Point sq = f.map(fp.minority);
    doc.raw("<rect class=\"focal-minority\" x=\"" + num(sq.x - 4) + "\" y=\"" + num(sq.y - 4) +
            "\" width=\"8\" height=\"8\" fill=\"black\" stroke=\"none\"/>\n");
    const Point cc = f.map(fp.court);
    doc.line({cc.x - 6, cc.y}, {cc.x + 6, cc.y}, "black", 1.5, "court-center");
    doc.line({cc.x, cc.y - 6}, {cc.x, cc.y + 6}, "black", 1.5, "court-center");

    for (std::size_t i = 0; i < e.size(); ++i) {
        const Point p = f.map(e.coords[i]);
        doc.circle(p, 3.5, "black", "none", "seed");
        std::string label = e.roster[i].name;
        if (i == result.by_majority && i == result.by_minority) {
            label += " *";
        } else if (i == result.by_majority) {
            label += " (maj)";
        } else if (i == result.by_minority) {
            label += " (min)";
        }
        doc.text({p.x + 6, p.y - 6}, label, result.coalition.contains(i));
    }
    if (result.tie || result.degenerate) {
        doc.text({kPad, kPad / 2}, result.degenerate ? "degenerate: zero-radius circle of influence"
                                                      : "tie: fifth vote chosen by name among equidistant justices",
                 false, "start", 12);
    }
    return doc.finish();
}

std::string render_line(const Embedding& e) {
    constexpr double width = 720.0;
    constexpr double height = 200.0;
    double lo = e.coords.front().x;
    double hi = lo;
    for (const auto& p : e.coords) {
        lo = std::min(lo, p.x);
        hi = std::max(hi, p.x);
    }
    const double w = std::max(hi - lo, 1e-12);
    auto map_x = [&](double x) { return kPad + (x - lo) / w * (width - 2 * kPad); };
    Document doc(width, height);
    const double axis = height / 2;
    doc.line({kPad, axis}, {width - kPad, axis}, "black", 1.5, "axis");

    std::vector<std::size_t> order(e.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return e.coords[a].x < e.coords[b].x || (e.coords[a].x == e.coords[b].x && e.roster[a].name < e.roster[b].name);
    });
    for (std::size_t r = 0; r < order.size(); ++r) {
        const std::size_t i = order[r];
        const double x = map_x(e.coords[i].x);
        doc.line({x, axis - 6}, {x, axis + 6}, "black", 1.5, "tick");
        // Alternate sides and two heights so neighbouring labels do not collide.
        const bool above = r % 2 == 0;
        const double level = (r / 2) % 2 == 0 ? 22.0 : 42.0;
        const double y = above ? axis - level : axis + level + 10.0;
        doc.line({x, axis + (above ? -6.0 : 6.0)}, {x, y + (above ? 4.0 : -12.0)}, "#999999", 0.75, "leader");
        doc.text({x, y}, e.roster[i].name, false, "middle", 12);
    }
    return doc.finish();
}

std::string render_halfplane(const PointSet9& seeds, const SeparatingLine& line) {
    auto [lo, hi] = bounds(seeds.points(), 0.3 * seeds.diameter());
    const Frame f(lo, hi);
    Document doc;
    // Owner side shaded by clipping the frame to normal . p <= offset.
    Polygon side = clip_half_plane({lo, {hi.x, lo.y}, hi, {lo.x, hi.y}}, line.normal, line.offset);
    if (side.size() >= 3) {
        doc.polygon(f, side, kPalette[2], "none", "owner-side", 0.25);
    }
    const Point dir{-line.normal.y, line.normal.x};
    const Point foot{line.normal.x * line.offset, line.normal.y * line.offset};
    const double reach = 4.0 * seeds.diameter() + std::hypot(foot.x, foot.y);
    Polygon seg = {{foot.x - reach * dir.x, foot.y - reach * dir.y}, {foot.x + reach * dir.x, foot.y + reach * dir.y}};
    // Clip the long segment to the frame by treating it as a degenerate polygon.
    Point a = seg[0];
    Point b = seg[1];
    double t0 = 0.0;
    double t1 = 1.0;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - lo.x, hi.x - a.x, a.y - lo.y, hi.y - a.y};
    bool visible = true;
    for (int k = 0; k < 4; ++k) {
        if (p[k] == 0.0) {
            visible = visible && q[k] >= 0.0;
        } else {
            const double t = q[k] / p[k];
            if (p[k] < 0.0) {
                t0 = std::max(t0, t);
            } else {
                t1 = std::min(t1, t);
            }
        }
    }
    if (visible && t0 < t1) {
        doc.line(f.map({a.x + t0 * dx, a.y + t0 * dy}), f.map({a.x + t1 * dx, a.y + t1 * dy}), "black", 1.5,
                 "separating-line");
    }
    draw_seeds(doc, f, seeds, line.owners);
    return doc.finish();
}

std::string render_min_accuracy(std::span<const MinAccuracy> series) {
    const double width = std::max(kWidth, 2 * kPad + 28.0 * static_cast<double>(series.size()));
    constexpr double height = 420.0;
    Document doc(width, height);
    const double plot_h = height - 2 * kPad - 60.0;
    auto y_of = [&](double pct) { return kPad + plot_h * (1.0 - pct / 100.0); };
    doc.line({kPad, y_of(0)}, {width - kPad, y_of(0)}, "black", 1.0, "axis");
    doc.line({kPad, y_of(0)}, {kPad, y_of(100)}, "black", 1.0, "axis");
    for (int pct = 0; pct <= 100; pct += 20) {
        doc.line({kPad - 4, y_of(pct)}, {kPad, y_of(pct)}, "black", 1.0, "tick");
        doc.text({kPad - 8, y_of(pct) + 4}, std::to_string(pct) + "%", false, "end", 10);
    }
    const double step = series.empty() ? 0.0 : (width - 2 * kPad) / static_cast<double>(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double x = kPad + step * (static_cast<double>(i) + 0.5);
        const double yv = y_of(series[i].voronoi);
        doc.line({x - 5, yv}, {x + 5, yv}, "#1f77b4", 1.5, "voronoi");
        doc.line({x, yv - 5}, {x, yv + 5}, "#1f77b4", 1.5, "voronoi");
        const double yh = y_of(series[i].halfplane);
        doc.raw("<polygon class=\"halfplane\" points=\"" + num(x) + "," + num(yh - 5) + " " + num(x - 5) + "," +
                num(yh + 4) + " " + num(x + 5) + "," + num(yh + 4) + "\" fill=\"none\" stroke=\"#d62728\" "
                "stroke-width=\"1.2\"/>\n");
        doc.raw("<text x=\"" + num(x) + "\" y=\"" + num(y_of(0) + 12) + "\" font-family=\"sans-serif\" font-size=\"9\" "
                "text-anchor=\"end\" transform=\"rotate(-60 " + num(x) + " " + num(y_of(0) + 12) + ")\">" +
                escape(series[i].natural_court_id) + "</text>\n");
    }
    return doc.finish();
}

}  // namespace fivefour::svg
