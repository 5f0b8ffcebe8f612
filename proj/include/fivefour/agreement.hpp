#pragma once

#include "fivefour/votes.hpp"

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace fivefour {

template <typename T>
using SeatMatrix = std::array<std::array<T, kSeats>, kSeats>;

// Voting dissimilarity between the nine justices of a slice. Entries are kept
// as exact disagreement counts over the slice's case count.
class DissimilarityMatrix {
public:
    DissimilarityMatrix() = default;
    DissimilarityMatrix(std::vector<Justice> roster, SeatMatrix<int> disagreements, int case_count);

    // Builds a matrix directly from real entries (for synthetic inputs). The
    // matrix is validated but carries no exact counts.
    static DissimilarityMatrix from_values(std::vector<Justice> roster, const SeatMatrix<double>& values);

    const std::vector<Justice>& roster() const { return roster_; }
    int case_count() const { return case_count_; }
    bool exact() const { return case_count_ > 0; }
    int disagreements(std::size_t i, std::size_t j) const { return disagreements_[i][j]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i][j]; }
    const SeatMatrix<double>& values() const { return values_; }

private:
    std::vector<Justice> roster_;
    SeatMatrix<int> disagreements_{};
    SeatMatrix<double> values_{};
    int case_count_ = 0;
};

// d[i][j] = 1 - (#cases where i and j share a majority code) / (#cases in slice).
DissimilarityMatrix dissimilarity_matrix(const CourtSlice& slice);

void write_matrix_csv(std::ostream& out, const DissimilarityMatrix& d);
std::string matrix_json(const DissimilarityMatrix& d);

}  // namespace fivefour
