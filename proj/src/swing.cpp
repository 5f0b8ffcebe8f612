#include "fivefour/swing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace fivefour {

namespace {

Point mean_of(const Embedding& e, SeatSet seats) {
    double x = 0.0;
    double y = 0.0;
    int n = 0;
    for (auto s : seats.seats()) {
        x += e.coords[s].x;
        y += e.coords[s].y;
        ++n;
    }
    return {x / n, y / n};
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Relative tolerance under which two distances count as tied.
bool nearly_equal(double a, double b, double scale) { return std::abs(a - b) <= 1e-12 * std::max(scale, 1e-300); }

// Spread of the configuration about its center; isometry invariant.
double coordinate_scale(const Embedding& e) {
    double cx = 0.0;
    double cy = 0.0;
    for (const auto& p : e.coords) {
        cx += p.x;
        cy += p.y;
    }
    const Point c{cx / static_cast<double>(e.size()), cy / static_cast<double>(e.size())};
    double s = 0.0;
    for (const auto& p : e.coords) {
        s = std::max(s, distance(p, c));
    }
    return s;
}

// Picks the seat with the extreme distance to `target` (largest when farthest
// is true). Near-ties go to the alphabetically first name.
std::size_t pick(const Embedding& e, SeatSet seats, Point target, bool farthest, double scale, bool& tie,
                 double& chosen) {
    const auto candidates = seats.seats();
    double extreme = farthest ? -1.0 : std::numeric_limits<double>::infinity();
    for (auto s : candidates) {
        const double d = distance(e.coords[s], target);
        extreme = farthest ? std::max(extreme, d) : std::min(extreme, d);
    }
    std::size_t best = kSeats;
    int matches = 0;
    for (auto s : candidates) {
        const double d = distance(e.coords[s], target);
        if (nearly_equal(d, extreme, scale)) {
            ++matches;
            if (best == kSeats || e.roster[s].name < e.roster[best].name) {
                best = s;
                chosen = d;
            }
        }
    }
    tie = tie || matches > 1;
    return best;
}

}  // namespace

FocalPoints focal_points(const Embedding& e, SeatSet coalition) {
    if (coalition.size() != kCoalitionSize || e.size() != kSeats) {
        throw DataError("focal points need a five-justice coalition on a nine-justice embedding");
    }
    const SeatSet all(static_cast<std::uint16_t>((1U << kSeats) - 1));
    return {mean_of(e, coalition), mean_of(e, coalition.complement()), mean_of(e, all)};
}

FifthVoteResult fifth_vote(const Embedding& e, SeatSet coalition) {
    FifthVoteResult r;
    r.coalition = coalition;
    r.focal = focal_points(e, coalition);
    const double scale = coordinate_scale(e);
    r.by_majority = pick(e, coalition, r.focal.majority, true, scale, r.tie, r.majority_radius);
    r.by_minority = pick(e, coalition, r.focal.minority, false, scale, r.tie, r.minority_radius);
    r.agree = r.by_majority == r.by_minority;
    r.degenerate = !(r.majority_radius > 0.0) || !(r.minority_radius > 0.0);
    return r;
}

MeanJusticeResult mean_justice(const Embedding& e) {
    if (e.size() != kSeats) {
        throw DataError("mean justice needs a nine-justice embedding");
    }
    MeanJusticeResult r;
    const SeatSet all(static_cast<std::uint16_t>((1U << kSeats) - 1));
    r.center = mean_of(e, all);
    r.justice = pick(e, all, r.center, false, coordinate_scale(e), r.tie, r.distance);
    return r;
}

double agreement_rate(std::span<const FifthVoteResult> results) {
    if (results.empty()) {
        throw DataError("agreement rate of an empty list is undefined");
    }
    std::size_t agree = 0;
    for (const auto& r : results) {
        agree += r.agree ? 1 : 0;
    }
    return static_cast<double>(agree) / static_cast<double>(results.size());
}

std::string fifth_votes_json(std::span<const FifthVoteResult> results, const Embedding& e,
                             std::span<const std::vector<std::string>> case_ids) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        nlohmann::ordered_json j;
        j["members"] = member_names(r.coalition, e.roster);
        j["by_majority"] = e.roster[r.by_majority].name;
        j["by_minority"] = e.roster[r.by_minority].name;
        j["agree"] = r.agree;
        j["majority_radius"] = r.majority_radius;
        j["minority_radius"] = r.minority_radius;
        j["majority_focal"] = {r.focal.majority.x, r.focal.majority.y};
        j["minority_focal"] = {r.focal.minority.x, r.focal.minority.y};
        j["tie"] = r.tie;
        if (i < case_ids.size()) {
            j["cases"] = case_ids[i];
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace fivefour
