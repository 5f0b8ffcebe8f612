#include "support.hpp"

#include "fivefour/report.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace fivefour;

namespace {

CourtSlice synthetic_slice(std::uint64_t seed, int cases = 120, int first_term = 2000, int terms = 3) {
    std::mt19937_64 rng(seed);
    const auto ideal = testing::random_points(rng);
    const auto roster = testing::letter_roster();
    std::istringstream in(testing::to_csv(roster, testing::spatial_cases(ideal, cases, first_term, terms, "S", seed)));
    return select_court(parse_votes(in), CourtSelector::court("S"));
}

// Smallest denominator-consistent count whose display matches `shown`.
std::optional<int> numerator_for(double shown, int den) {
    for (int n = 0; n <= den; ++n) {
        if (std::abs(std::stod(Ratio{n, den}.display()) - shown) < 1e-9) {
            return n;
        }
    }
    return std::nullopt;
}

std::optional<int> denominator_for(double shown, int num) {
    if (shown == 0.0) {
        return std::nullopt;
    }
    for (int d = std::max(num, 1); d <= 126; ++d) {
        if (std::abs(std::stod(Ratio{num, d}.display()) - shown) < 1e-9) {
            return d;
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("percent display rounds half to even on the exact value") {
    CHECK(Ratio{5, 16}.display() == "31.2%");
    CHECK(Ratio{8, 16}.display() == "50%");
    CHECK(Ratio{8, 20}.display() == "40%");
    CHECK(Ratio{1, 3}.display() == "33.3%");
    CHECK(Ratio{2, 3}.display() == "66.7%");
    CHECK(Ratio{15, 16}.display() == "93.8%");
    CHECK(Ratio{2, 21}.display() == "9.5%");
    CHECK(Ratio{1, 8}.display() == "12.5%");
    CHECK(Ratio{1, 1}.display() == "100%");
    CHECK(Ratio{0, 0}.display() == "0%");
    CHECK(Ratio{0, 0}.percent() == 0.0);
    CHECK(Ratio{5, 16}.percent() == 31.25);
}

TEST_CASE("accuracy identities hold exactly on counts") {
    const Accuracy a{5, 16, 10};
    CHECK(a.explained().num == a.intersection);
    CHECK(a.efficiency().num == a.intersection);
    CHECK(a.explained().percent() * a.voting == doctest::Approx(100.0 * a.intersection));
    CHECK(a.efficiency().percent() * a.model == doctest::Approx(100.0 * a.intersection));
    CHECK(a.explained().display() == "31.2%");
    CHECK(a.efficiency().display() == "50%");
}

TEST_CASE("reference court: set intersections give the stated accuracies") {
    const auto roster = testing::roster_2009();
    const auto voting = testing::to_seats(testing::kVoting2009, roster);
    const auto voronoi = testing::to_seats(testing::kVoronoi2009, roster);
    const auto halfplane = testing::to_seats(testing::kHalfPlane2009, roster);
    auto count = [](const std::vector<SeatSet>& a, const std::vector<SeatSet>& b) {
        int n = 0;
        for (auto s : a) {
            n += std::find(b.begin(), b.end(), s) != b.end();
        }
        return n;
    };
    const Accuracy v{count(voting, voronoi), 16, 20};
    const Accuracy h{count(voting, halfplane), 16, 10};
    CHECK(v.explained().display() == "50%");
    CHECK(v.efficiency().display() == "40%");
    CHECK(h.explained().display() == "31.2%");
    CHECK(h.efficiency().display() == "50%");
    // Voting and half-plane coalitions of that court are all Voronoi coalitions.
    for (auto s : halfplane) {
        if (std::find(voting.begin(), voting.end(), s) != voting.end()) {
            CHECK(std::find(voronoi.begin(), voronoi.end(), s) != voronoi.end());
        }
    }
}

TEST_CASE("published per-court rows are reproducible from integer counts and average as stated") {
    std::vector<CourtReport> reports;
    for (const auto& row : testing::kCourtRows) {
        CAPTURE(row.court);
        CourtReport r;
        r.natural_court_id = row.court;
        r.n_voting_coalitions = row.voting;
        const auto vi = numerator_for(row.voronoi_explained, row.voting);
        const auto hi = numerator_for(row.halfplane_explained, row.voting);
        REQUIRE(vi.has_value());
        REQUIRE(hi.has_value());
        const auto vm = denominator_for(row.voronoi_efficiency, *vi);
        const auto hm = denominator_for(row.halfplane_efficiency, *hi);
        REQUIRE(vm.has_value());
        REQUIRE(hm.has_value());
        r.voronoi = {*vi, row.voting, *vm};
        r.halfplane = {*hi, row.voting, *hm};
        reports.push_back(r);
    }
    const auto m = mean_accuracies(reports);
    CHECK(std::abs(m.voronoi_explained - 50.9) <= 0.3);
    CHECK(std::abs(m.voronoi_efficiency - 35.6) <= 0.3);
    CHECK(std::abs(m.halfplane_explained - 45.2) <= 0.3);
    CHECK(std::abs(m.halfplane_efficiency - 52.6) <= 0.3);
    const auto series = min_accuracy_series(reports);
    REQUIRE(series.size() == reports.size());
    const auto& ref = series[series.size() - 2];
    CHECK(ref.natural_court_id == "2009-2015");
    CHECK(ref.voronoi == 40.0);
    CHECK(ref.halfplane == 31.25);
}

TEST_CASE("analysis of a synthetic court is internally consistent") {
    const auto slice = synthetic_slice(42);
    Diagnostics diag;
    const auto a = analyze_court(slice, {}, &diag);
    const auto r = court_report(a, {}, &diag);
    CHECK(r.case_count == slice.cases.size());
    CHECK(r.n_voting_coalitions == static_cast<int>(a.voting.size()));
    CHECK(a.fifth_votes.size() == a.voting.size());
    CHECK(r.voronoi.model == static_cast<int>(a.voronoi.size()));
    CHECK(r.halfplane.model == static_cast<int>(a.halfplane.size()));
    int vi = 0, hi = 0, max_d = 0;
    for (const auto& c : a.voting) {
        vi += c.is_voronoi;
        hi += c.is_halfplane;
        max_d = std::max(max_d, *c.disorder);
    }
    CHECK(r.voronoi.intersection == vi);
    CHECK(r.halfplane.intersection == hi);
    CHECK(r.max_disorder == max_d);
    CHECK(r.term_mean_justices.size() == 3);
    CHECK(r.mean_justice == a.plane.roster[mean_justice(a.plane).justice].name);

    PipelineOptions no_terms;
    no_terms.per_term = false;
    CHECK(court_report(a, no_terms).term_mean_justices.empty());
}

TEST_CASE("reports are deterministic and serialize") {
    const auto slice = synthetic_slice(7);
    const std::vector<CourtReport> a{court_report(slice)};
    const std::vector<CourtReport> b{court_report(slice)};
    std::ostringstream ca, cb;
    write_report_csv(ca, a);
    write_report_csv(cb, b);
    CHECK(ca.str() == cb.str());
    CHECK(ca.str().rfind("natural_court,cases,voting_coalitions,max_disorder,", 0) == 0);
    CHECK(report_json(a) == report_json(b));
    CHECK(analysis_json(analyze_court(slice)) == analysis_json(analyze_court(slice)));
}

TEST_CASE("term mean justices use the first court with a valid slice") {
    std::mt19937_64 rng(3);
    const auto ideal = testing::random_points(rng);
    const auto roster = testing::letter_roster();
    auto early = testing::spatial_cases(ideal, 40, 2005, 1, "A", 1);
    auto later = testing::spatial_cases(ideal, 40, 2005, 2, "B", 2);
    early.insert(early.end(), later.begin(), later.end());
    std::istringstream in(testing::to_csv(roster, early));
    const auto table = parse_votes(in);
    const auto terms = term_mean_justices(table);
    REQUIRE(terms.size() == 2);
    CHECK(terms.at(2005).court == "A");
    CHECK(terms.at(2006).court == "B");
}
