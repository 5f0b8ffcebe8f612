#pragma once

#include "fivefour/mds.hpp"
#include "fivefour/votes.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fivefour {

inline constexpr int kCoalitionSize = 5;

// Subset of roster seats as a bitmask over roster indices. Rosters are sorted by
// name, so ascending seat order is alphabetical order.
class SeatSet {
public:
    constexpr SeatSet() = default;
    constexpr explicit SeatSet(std::uint16_t bits) : bits_(bits) {}
    static SeatSet of(std::initializer_list<std::size_t> seats);

    constexpr std::uint16_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(std::size_t seat) const { return (bits_ >> seat) & 1U; }
    constexpr SeatSet complement() const { return SeatSet(static_cast<std::uint16_t>(~bits_ & ((1U << kSeats) - 1))); }
    std::vector<std::size_t> seats() const;

    friend constexpr bool operator==(SeatSet, SeatSet) = default;
    // Lexicographic order of the ascending seat lists.
    friend bool operator<(SeatSet a, SeatSet b);

private:
    std::uint16_t bits_ = 0;
};

// All C(9,5) = 126 five-seat subsets in lexicographic order.
const std::vector<SeatSet>& all_five_subsets();

std::vector<std::string> member_names(SeatSet members, const std::vector<Justice>& roster);
std::string join_names(SeatSet members, const std::vector<Justice>& roster, const std::string& sep = ", ");
// Resolves names against a roster; throws DataError for unknown names.
SeatSet seat_set(const std::vector<std::string>& names, const std::vector<Justice>& roster);

struct Coalition {
    SeatSet members;
    std::vector<std::string> case_ids;
    bool is_voting = false;
    bool is_voronoi = false;
    bool is_halfplane = false;
    std::optional<int> disorder;
};

// Rank 1 is the leftmost justice on the 1-D scale.
struct RankAssignment {
    std::array<int, kSeats> rank{};  // by roster index
    bool had_ties = false;

    std::vector<std::size_t> order() const;  // roster indices from rank 1 to rank 9
};

// One coalition per distinct five-justice majority of a 5-to-4 case, sorted by members.
std::vector<Coalition> extract_voting_coalitions(const CourtSlice& slice);

// Ranks ascend with x1; ties within 1e-12 of the coordinate scale are broken by name.
RankAssignment rank_justices(const Embedding& e, Diagnostics* diag = nullptr);

// min( sum_k (j_k - k), sum_k (10 - k - j_{6-k}) ) over the sorted ranks j_1 < ... < j_5.
int discrete_disorder(const std::array<int, kCoalitionSize>& ranks);
int discrete_disorder(SeatSet members, const RankAssignment& ranks);

std::string coalitions_json(const std::vector<Coalition>& coalitions, const std::vector<Justice>& roster);

}  // namespace fivefour
