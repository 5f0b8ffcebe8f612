#include "fivefour/agreement.hpp"

#include <cmath>
#include <iomanip>
#include <limits>

#include <json.hpp>

namespace fivefour {

DissimilarityMatrix::DissimilarityMatrix(std::vector<Justice> roster, SeatMatrix<int> disagreements, int case_count)
    : roster_(std::move(roster)), disagreements_(disagreements), case_count_(case_count) {
    if (roster_.size() != kSeats) {
        throw DataError("dissimilarity matrix needs a roster of 9 justices");
    }
    if (case_count_ <= 0) {
        throw DataError("dissimilarity matrix needs at least one case");
    }
    for (std::size_t i = 0; i < kSeats; ++i) {
        for (std::size_t j = 0; j < kSeats; ++j) {
            const int n = disagreements_[i][j];
            if (n != disagreements_[j][i] || n < 0 || n > case_count_ || (i == j && n != 0)) {
                throw DataError("inconsistent disagreement counts at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            }
            values_[i][j] = static_cast<double>(n) / static_cast<double>(case_count_);
        }
    }
}

DissimilarityMatrix DissimilarityMatrix::from_values(std::vector<Justice> roster, const SeatMatrix<double>& values) {
    if (roster.size() != kSeats) {
        throw DataError("dissimilarity matrix needs a roster of 9 justices");
    }
    for (std::size_t i = 0; i < kSeats; ++i) {
        if (values[i][i] != 0.0) {
            throw DataError("dissimilarity matrix must have a zero diagonal");
        }
        for (std::size_t j = 0; j < kSeats; ++j) {
            if (!std::isfinite(values[i][j]) || values[i][j] < 0.0 || values[i][j] != values[j][i]) {
                throw DataError("dissimilarity matrix must be symmetric with nonnegative entries");
            }
        }
    }
    DissimilarityMatrix d;
    d.roster_ = std::move(roster);
    d.values_ = values;
    return d;
}

DissimilarityMatrix dissimilarity_matrix(const CourtSlice& slice) {
    if (slice.cases.empty()) {
        throw DataError("cannot build a dissimilarity matrix from an empty slice");
    }
    SeatMatrix<int> disagree{};
    for (const auto& c : slice.cases) {
        for (std::size_t i = 0; i < kSeats; ++i) {
            for (std::size_t j = i + 1; j < kSeats; ++j) {
                if (c.codes[i] != c.codes[j]) {
                    ++disagree[i][j];
                    ++disagree[j][i];
                }
            }
        }
    }
    return {slice.roster, disagree, static_cast<int>(slice.cases.size())};
}

void write_matrix_csv(std::ostream& out, const DissimilarityMatrix& d) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "justice";
    for (const auto& j : d.roster()) {
        out << ',' << j.name;
    }
    out << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < kSeats; ++i) {
        out << d.roster()[i].name;
        for (std::size_t j = 0; j < kSeats; ++j) {
            out << ',' << d(i, j);
        }
        out << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

std::string matrix_json(const DissimilarityMatrix& d) {
    nlohmann::ordered_json j;
    auto& roster = j["roster"] = nlohmann::ordered_json::array();
    for (const auto& justice : d.roster()) {
        roster.push_back(justice.name);
    }
    j["case_count"] = d.case_count();
    auto& rows = j["dissimilarity"] = nlohmann::ordered_json::array();
    auto& counts = j["disagreements"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < kSeats; ++i) {
        auto row = nlohmann::ordered_json::array();
        auto count_row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < kSeats; ++k) {
            row.push_back(d(i, k));
            count_row.push_back(d.disagreements(i, k));
        }
        rows.push_back(std::move(row));
        counts.push_back(std::move(count_row));
    }
    if (!d.exact()) {
        j.erase("disagreements");
        j.erase("case_count");
    }
    return j.dump(2);
}

}  // namespace fivefour
