#pragma once

#include "fivefour/coalition.hpp"
#include "fivefour/geometry.hpp"
#include "fivefour/votes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

using namespace fivefour;

// Roster of the 2009-2015 court, alphabetical, with arbitrary stable ids.
inline std::vector<Justice> roster_2009() {
    const char* names[] = {"Alito", "Breyer", "Ginsburg", "Kagan", "Kennedy",
                           "Roberts", "Scalia", "Sotomayor", "Thomas"};
    std::vector<Justice> out;
    for (int i = 0; i < 9; ++i) {
        out.push_back({101 + i, names[i]});
    }
    return out;
}

// Left-to-right one-dimensional order reported for that court.
inline std::vector<std::string> order_2009() {
    return {"Ginsburg", "Sotomayor", "Breyer", "Kagan", "Kennedy", "Roberts", "Scalia", "Alito", "Thomas"};
}

inline RankAssignment ranks_from_order(const std::vector<Justice>& roster, const std::vector<std::string>& order) {
    RankAssignment r;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (std::size_t i = 0; i < roster.size(); ++i) {
            if (roster[i].name == order[k]) {
                r.rank[i] = static_cast<int>(k) + 1;
            }
        }
    }
    return r;
}

using NameSet = std::array<const char*, 5>;

// Distinct five-justice majorities of 5-to-4 cases, 2009-2015 court.
inline const std::vector<NameSet> kVoting2009 = {
    {"Alito", "Breyer", "Ginsburg", "Kagan", "Kennedy"},
    {"Alito", "Breyer", "Ginsburg", "Roberts", "Sotomayor"},
    {"Alito", "Breyer", "Kennedy", "Roberts", "Sotomayor"},
    {"Alito", "Breyer", "Kennedy", "Roberts", "Thomas"},
    {"Alito", "Breyer", "Roberts", "Scalia", "Thomas"},
    {"Alito", "Kennedy", "Roberts", "Scalia", "Thomas"},
    {"Alito", "Roberts", "Scalia", "Sotomayor", "Thomas"},
    {"Breyer", "Ginsburg", "Kagan", "Kennedy", "Sotomayor"},
    {"Breyer", "Ginsburg", "Kagan", "Roberts", "Scalia"},
    {"Breyer", "Ginsburg", "Kagan", "Roberts", "Sotomayor"},
    {"Breyer", "Ginsburg", "Kagan", "Sotomayor", "Thomas"},
    {"Breyer", "Kagan", "Kennedy", "Roberts", "Sotomayor"},
    {"Ginsburg", "Kagan", "Kennedy", "Roberts", "Scalia"},
    {"Ginsburg", "Kagan", "Kennedy", "Scalia", "Sotomayor"},
    {"Ginsburg", "Kagan", "Scalia", "Sotomayor", "Thomas"},
    {"Kagan", "Kennedy", "Scalia", "Sotomayor", "Thomas"},
};

struct ScoredSet {
    NameSet names;
    int disorder;
};

// Every five-set scoring at most 3 under order_2009().
inline const std::vector<ScoredSet> kLowDisorder2009 = {
    {{"Alito", "Kennedy", "Roberts", "Scalia", "Thomas"}, 0},
    {{"Breyer", "Ginsburg", "Kagan", "Kennedy", "Sotomayor"}, 0},
    {{"Alito", "Kagan", "Roberts", "Scalia", "Thomas"}, 1},
    {{"Breyer", "Ginsburg", "Kagan", "Roberts", "Sotomayor"}, 1},
    {{"Alito", "Breyer", "Roberts", "Scalia", "Thomas"}, 2},
    {{"Alito", "Kagan", "Kennedy", "Scalia", "Thomas"}, 2},
    {{"Breyer", "Ginsburg", "Kagan", "Scalia", "Sotomayor"}, 2},
    {{"Breyer", "Ginsburg", "Kennedy", "Roberts", "Sotomayor"}, 2},
    {{"Alito", "Breyer", "Kennedy", "Scalia", "Thomas"}, 3},
    {{"Alito", "Breyer", "Ginsburg", "Kagan", "Sotomayor"}, 3},
    {{"Alito", "Kagan", "Kennedy", "Roberts", "Thomas"}, 3},
    {{"Alito", "Roberts", "Scalia", "Sotomayor", "Thomas"}, 3},
    {{"Breyer", "Ginsburg", "Kennedy", "Scalia", "Sotomayor"}, 3},
    {{"Ginsburg", "Kagan", "Kennedy", "Roberts", "Sotomayor"}, 3},
};

inline const std::vector<ScoredSet> kVoronoi2009 = {
    {{"Alito", "Breyer", "Kagan", "Kennedy", "Roberts"}, 9},
    {{"Alito", "Breyer", "Kennedy", "Roberts", "Scalia"}, 6},
    {{"Alito", "Breyer", "Kennedy", "Roberts", "Sotomayor"}, 9},
    {{"Alito", "Breyer", "Kennedy", "Roberts", "Thomas"}, 4},
    {{"Alito", "Kagan", "Kennedy", "Roberts", "Scalia"}, 5},
    {{"Alito", "Kagan", "Roberts", "Scalia", "Thomas"}, 1},
    {{"Alito", "Kennedy", "Roberts", "Scalia", "Thomas"}, 0},
    {{"Breyer", "Ginsburg", "Kagan", "Kennedy", "Sotomayor"}, 0},
    {{"Breyer", "Ginsburg", "Kagan", "Scalia", "Sotomayor"}, 2},
    {{"Breyer", "Ginsburg", "Kennedy", "Roberts", "Sotomayor"}, 2},
    {{"Breyer", "Kagan", "Kennedy", "Roberts", "Scalia"}, 10},
    {{"Breyer", "Kagan", "Kennedy", "Roberts", "Sotomayor"}, 5},
    {{"Ginsburg", "Kagan", "Kennedy", "Roberts", "Scalia"}, 8},
    {{"Ginsburg", "Kagan", "Kennedy", "Roberts", "Sotomayor"}, 3},
    {{"Ginsburg", "Kagan", "Kennedy", "Scalia", "Sotomayor"}, 4},
    {{"Ginsburg", "Kagan", "Kennedy", "Scalia", "Thomas"}, 9},
    {{"Ginsburg", "Kagan", "Roberts", "Scalia", "Thomas"}, 8},
    {{"Ginsburg", "Kagan", "Scalia", "Sotomayor", "Thomas"}, 8},
    {{"Kagan", "Kennedy", "Roberts", "Scalia", "Sotomayor"}, 9},
    {{"Kagan", "Kennedy", "Roberts", "Scalia", "Thomas"}, 4},
};

inline const std::vector<ScoredSet> kHalfPlane2009 = {
    {{"Alito", "Breyer", "Ginsburg", "Kennedy", "Sotomayor"}, 4},
    {{"Alito", "Breyer", "Kennedy", "Roberts", "Sotomayor"}, 9},
    {{"Alito", "Breyer", "Kennedy", "Roberts", "Thomas"}, 4},
    {{"Alito", "Kagan", "Roberts", "Scalia", "Thomas"}, 1},
    {{"Alito", "Kennedy", "Roberts", "Scalia", "Thomas"}, 0},
    {{"Breyer", "Ginsburg", "Kagan", "Kennedy", "Sotomayor"}, 0},
    {{"Breyer", "Ginsburg", "Kagan", "Scalia", "Sotomayor"}, 2},
    {{"Breyer", "Ginsburg", "Kennedy", "Roberts", "Sotomayor"}, 2},
    {{"Ginsburg", "Kagan", "Roberts", "Scalia", "Thomas"}, 8},
    {{"Ginsburg", "Kagan", "Scalia", "Sotomayor", "Thomas"}, 8},
};

inline SeatSet to_seats(const NameSet& names, const std::vector<Justice>& roster) {
    return seat_set(std::vector<std::string>(names.begin(), names.end()), roster);
}

inline std::vector<SeatSet> to_seats(const std::vector<NameSet>& sets, const std::vector<Justice>& roster) {
    std::vector<SeatSet> out;
    for (const auto& s : sets) {
        out.push_back(to_seats(s, roster));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<SeatSet> to_seats(const std::vector<ScoredSet>& sets, const std::vector<Justice>& roster) {
    std::vector<SeatSet> out;
    for (const auto& s : sets) {
        out.push_back(to_seats(s.names, roster));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One per-court row of the published accuracy overview.
struct CourtRow {
    const char* court;
    int voting;
    int max_disorder;
    double voronoi_explained;
    double voronoi_efficiency;
    double halfplane_explained;
    double halfplane_efficiency;
    const char* mean_justice;
};

inline const std::vector<CourtRow> kCourtRows = {
    {"1946-1948", 28, 10, 35.7, 50, 25, 70, "Vinson"},
    {"1949-1952", 26, 9, 30.8, 50, 23.1, 42.9, "Burton"},
    {"1953-1953", 8, 10, 37.5, 15.8, 37.5, 27.3, "Clark"},
    {"1954-1956", 8, 6, 75, 28.6, 62.5, 55.6, "Clark"},
    {"1956-1956", 5, 8, 80, 21.1, 80, 36.4, "Brennan"},
    {"1956-1958", 10, 9, 60, 31.6, 40, 40, "Brennan"},
    {"1958-1961", 18, 9, 44.4, 40, 33.3, 60, "Brennan"},
    {"1962-1964", 18, 9, 33.3, 33.3, 33.3, 40, "White"},
    {"1965-1966", 12, 9, 58.3, 38.9, 58.3, 58.3, "White"},
    {"1967-1968", 6, 10, 50, 15.8, 16.7, 8.3, "Marshall"},
    {"1969-1970", 15, 7, 33.3, 26.3, 33.3, 50, "White"},
    {"1971-1975", 23, 10, 43.5, 50, 39.1, 90, "Stewart"},
    {"1975-1980", 33, 10, 33.3, 57.9, 30.3, 90.9, "Powell"},
    {"1981-1985", 33, 10, 33.3, 57.9, 27.3, 81.8, "White"},
    {"1986-1986", 13, 8, 38.5, 26.3, 38.5, 45.5, "Powell"},
    {"1987-1989", 19, 8, 42.1, 44.4, 31.6, 60, "White"},
    {"1990-1990", 15, 10, 60, 47.4, 60, 75, "Souter"},
    {"1991-1992", 20, 9, 40, 44.4, 40, 66.7, "Souter"},
    {"1993-1993", 6, 9, 66.7, 22.2, 66.7, 36.4, "Kennedy"},
    {"1994-2004", 38, 10, 34.2, 72.2, 28.9, 100, "Kennedy"},
    {"2005-2005", 2, 0, 100, 9.5, 100, 16.7, "O'Connor"},
    {"2005-2008", 14, 10, 42.9, 31.6, 42.9, 60, "Kennedy"},
    {"2009-2009", 8, 10, 50, 22.2, 50, 40, "Kennedy"},
    {"2009-2015", 16, 9, 50, 40, 31.2, 50, "Kennedy"},
    {"2016-2016", 2, 0, 100, 12.5, 100, 14.3, "Kennedy"},
};

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n = 9) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        p = {u(rng), u(rng)};
    }
    return pts;
}

inline std::vector<Justice> letter_roster() {
    std::vector<Justice> out;
    for (int i = 0; i < 9; ++i) {
        out.push_back({i + 1, std::string("J") + static_cast<char>('A' + i)});
    }
    return out;
}

struct FixtureCase {
    std::string case_id;
    int term;
    std::string court;
    std::array<int, 9> codes;  // 0 = missing
};

// Justice-centered CSV in the default column layout.
inline std::string to_csv(const std::vector<Justice>& roster, const std::vector<FixtureCase>& cases) {
    std::ostringstream o;
    o << "caseId,term,naturalCourt,justice,justiceName,majority\n";
    for (const auto& c : cases) {
        for (std::size_t i = 0; i < roster.size(); ++i) {
            o << c.case_id << ',' << c.term << ',' << c.court << ',' << roster[i].id << ',' << roster[i].name << ',';
            if (c.codes[i] != 0) {
                o << c.codes[i];
            }
            o << '\n';
        }
    }
    return o.str();
}

// Cases from a planar cutting-line voting model: each case draws a direction
// and splits the justices at a random rank, giving 5-4 splits and lopsided ones.
inline std::vector<FixtureCase> spatial_cases(const std::vector<Point>& ideal, int count, int first_term,
                                              int terms, const std::string& court, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_int_distribution<int> split(5, 9);
    std::vector<FixtureCase> out;
    for (int k = 0; k < count; ++k) {
        const double a = angle(rng);
        std::array<std::pair<double, int>, 9> proj;
        for (int i = 0; i < 9; ++i) {
            proj[i] = {std::cos(a) * ideal[i].x + std::sin(a) * ideal[i].y, i};
        }
        std::sort(proj.begin(), proj.end());
        const int majority = split(rng);
        FixtureCase c;
        c.case_id = court + "-" + std::to_string(k);
        c.term = first_term + k % terms;
        c.court = court;
        for (int r = 0; r < 9; ++r) {
            c.codes[proj[r].second] = r < majority ? kMajority : kDissent;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace testing
