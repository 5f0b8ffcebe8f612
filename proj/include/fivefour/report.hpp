#pragma once

#include "fivefour/agreement.hpp"
#include "fivefour/coalition.hpp"
#include "fivefour/geometry.hpp"
#include "fivefour/mds.hpp"
#include "fivefour/swing.hpp"
#include "fivefour/votes.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fivefour {

// Exact percentage num/den. A zero denominator reads as 0%.
struct Ratio {
    int num = 0;
    int den = 0;

    double percent() const { return den == 0 ? 0.0 : 100.0 * num / den; }
    // One decimal, rounded half to even on the exact value; trailing ".0" dropped ("50%", "31.2%").
    std::string display() const;
};

struct Accuracy {
    int intersection = 0;  // |voting and model|
    int voting = 0;
    int model = 0;

    Ratio explained() const { return {intersection, voting}; }
    Ratio efficiency() const { return {intersection, model}; }
};

struct PipelineOptions {
    MdsOptions mds;
    GeometryOptions geometry;
    bool per_term = true;
};

// Everything computed for one court slice.
struct CourtAnalysis {
    CourtSlice slice;
    DissimilarityMatrix matrix;
    Embedding line;   // 1-D
    Embedding plane;  // 2-D
    RankAssignment ranks;
    std::vector<Coalition> voting;       // with disorder and model flags filled in
    std::vector<VoronoiCell> voronoi;
    std::vector<SeparatingLine> halfplane;
    std::vector<FifthVoteResult> fifth_votes;  // parallel to `voting`
    MeanJusticeResult mean;
};

CourtAnalysis analyze_court(const CourtSlice& slice, const PipelineOptions& options = {}, Diagnostics* diag = nullptr);

struct TermMeanJustice {
    std::string justice;
    bool tie = false;
    std::string court;
    std::size_t cases = 0;
};

struct CourtReport {
    std::string natural_court_id;
    std::size_t case_count = 0;
    int n_voting_coalitions = 0;
    std::optional<int> max_disorder;
    Accuracy voronoi;
    Accuracy halfplane;
    std::string mean_justice;
    bool mean_justice_tie = false;
    std::map<int, TermMeanJustice> term_mean_justices;
};

CourtReport court_report(const CourtAnalysis& analysis, const PipelineOptions& options = {},
                         Diagnostics* diag = nullptr);
CourtReport court_report(const CourtSlice& slice, const PipelineOptions& options = {}, Diagnostics* diag = nullptr);

struct MinAccuracy {
    std::string natural_court_id;
    double voronoi = 0.0;
    double halfplane = 0.0;
};

std::vector<MinAccuracy> min_accuracy_series(std::span<const CourtReport> reports);

struct MeanAccuracies {
    double voronoi_explained = 0.0;
    double voronoi_efficiency = 0.0;
    double halfplane_explained = 0.0;
    double halfplane_efficiency = 0.0;
};

MeanAccuracies mean_accuracies(std::span<const CourtReport> reports);

// Term-specific mean justices across a whole table. Each term is analyzed
// inside the chronologically first natural court that yields a valid
// nine-justice slice for it.
std::map<int, TermMeanJustice> term_mean_justices(const VoteTable& table, const PipelineOptions& options = {},
                                                  Diagnostics* diag = nullptr);

void write_report_csv(std::ostream& out, std::span<const CourtReport> reports);
std::string report_json(std::span<const CourtReport> reports);
std::string analysis_json(const CourtAnalysis& analysis);

}  // namespace fivefour
