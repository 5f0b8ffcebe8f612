#pragma once

#include "fivefour/coalition.hpp"
#include "fivefour/mds.hpp"

#include <span>
#include <string>
#include <vector>

namespace fivefour {

struct FocalPoints {
    Point majority;  // mean of the five majority justices
    Point minority;  // mean of the four minority justices
    Point court;     // mean of all nine
};

struct FifthVoteResult {
    SeatSet coalition;
    std::size_t by_majority = 0;  // majority justice farthest from the majority focal point
    std::size_t by_minority = 0;  // majority justice nearest the minority focal point
    bool agree = false;
    double majority_radius = 0.0;
    double minority_radius = 0.0;
    bool tie = false;         // a distance tie was broken by name
    bool degenerate = false;  // zero radius
    FocalPoints focal;
};

struct MeanJusticeResult {
    std::size_t justice = 0;
    double distance = 0.0;
    bool tie = false;
    Point center;
};

FocalPoints focal_points(const Embedding& e, SeatSet coalition);
FifthVoteResult fifth_vote(const Embedding& e, SeatSet coalition);
MeanJusticeResult mean_justice(const Embedding& e);

// Fraction of results whose two fifth-vote methods agree. Throws DataError on an empty list.
double agreement_rate(std::span<const FifthVoteResult> results);

std::string fifth_votes_json(std::span<const FifthVoteResult> results, const Embedding& e,
                             std::span<const std::vector<std::string>> case_ids = {});

}  // namespace fivefour
