#include "fivefour/coalition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <json.hpp>

namespace fivefour {

SeatSet SeatSet::of(std::initializer_list<std::size_t> seats) {
    std::uint16_t bits = 0;
    for (auto s : seats) {
        bits = static_cast<std::uint16_t>(bits | (1U << s));
    }
    return SeatSet(bits);
}

std::vector<std::size_t> SeatSet::seats() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kSeats; ++i) {
        if (contains(i)) {
            out.push_back(i);
        }
    }
    return out;
}

bool operator<(SeatSet a, SeatSet b) {
    const auto sa = a.seats();
    const auto sb = b.seats();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

const std::vector<SeatSet>& all_five_subsets() {
    static const std::vector<SeatSet> subsets = [] {
        std::vector<SeatSet> out;
        for (std::uint16_t bits = 0; bits < (1U << kSeats); ++bits) {
            if (std::popcount(bits) == kCoalitionSize) {
                out.emplace_back(bits);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return subsets;
}

std::vector<std::string> member_names(SeatSet members, const std::vector<Justice>& roster) {
    std::vector<std::string> names;
    for (auto s : members.seats()) {
        names.push_back(roster.at(s).name);
    }
    return names;
}

std::string join_names(SeatSet members, const std::vector<Justice>& roster, const std::string& sep) {
    std::string out;
    for (const auto& n : member_names(members, roster)) {
        out += (out.empty() ? "" : sep) + n;
    }
    return out;
}

SeatSet seat_set(const std::vector<std::string>& names, const std::vector<Justice>& roster) {
    std::uint16_t bits = 0;
    for (const auto& name : names) {
        auto it = std::find_if(roster.begin(), roster.end(), [&](const Justice& j) { return j.name == name; });
        if (it == roster.end()) {
            throw DataError("unknown justice '" + name + "'");
        }
        bits = static_cast<std::uint16_t>(bits | (1U << (it - roster.begin())));
    }
    return SeatSet(bits);
}

std::vector<std::size_t> RankAssignment::order() const {
    std::vector<std::size_t> out(kSeats);
    for (std::size_t i = 0; i < kSeats; ++i) {
        out[static_cast<std::size_t>(rank[i] - 1)] = i;
    }
    return out;
}

std::vector<Coalition> extract_voting_coalitions(const CourtSlice& slice) {
    std::map<std::uint16_t, std::vector<std::string>> found;
    for (const auto& c : slice.cases) {
        std::uint16_t majority = 0;
        int dissents = 0;
        for (std::size_t i = 0; i < kSeats; ++i) {
            if (c.codes[i] == kMajority) {
                majority = static_cast<std::uint16_t>(majority | (1U << i));
            } else if (c.codes[i] == kDissent) {
                ++dissents;
            }
        }
        if (std::popcount(majority) == kCoalitionSize && dissents == 4) {
            found[majority].push_back(c.case_id);
        }
    }
    std::vector<Coalition> out;
    for (auto& [bits, cases] : found) {
        Coalition co;
        co.members = SeatSet(bits);
        co.case_ids = std::move(cases);
        co.is_voting = true;
        out.push_back(std::move(co));
    }
    std::sort(out.begin(), out.end(), [](const Coalition& a, const Coalition& b) { return a.members < b.members; });
    return out;
}

RankAssignment rank_justices(const Embedding& e, Diagnostics* diag) {
    const std::size_t n = e.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return e.coords[a].x < e.coords[b].x;
    });
    double scale = 0.0;
    for (const auto& p : e.coords) {
        scale = std::max(scale, std::abs(p.x));
    }
    const double tol = 1e-12 * std::max(scale, 1e-300);
    RankAssignment ranks;
    for (std::size_t start = 0; start < n;) {
        std::size_t end = start + 1;
        while (end < n && e.coords[idx[end]].x - e.coords[idx[end - 1]].x <= tol) {
            ++end;
        }
        if (end - start > 1) {
            ranks.had_ties = true;
            std::sort(idx.begin() + static_cast<std::ptrdiff_t>(start), idx.begin() + static_cast<std::ptrdiff_t>(end),
                      [&](std::size_t a, std::size_t b) { return e.roster[a].name < e.roster[b].name; });
            std::string tied;
            for (std::size_t k = start; k < end; ++k) {
                tied += (k == start ? "" : ", ") + e.roster[idx[k]].name;
            }
            warn(diag, "rank_justices: tied x1 coordinates for " + tied + "; ordered by name");
        }
        start = end;
    }
    for (std::size_t r = 0; r < n; ++r) {
        ranks.rank[idx[r]] = static_cast<int>(r + 1);
    }
    return ranks;
}

int discrete_disorder(const std::array<int, kCoalitionSize>& ranks) {
    auto j = ranks;
    std::sort(j.begin(), j.end());
    if (j.front() < 1 || j.back() > static_cast<int>(kSeats) || std::adjacent_find(j.begin(), j.end()) != j.end()) {
        throw DataError("discrete disorder needs five distinct ranks in 1..9");
    }
    int to_left = 0;
    int to_right = 0;
    for (int k = 1; k <= kCoalitionSize; ++k) {
        to_left += j[static_cast<std::size_t>(k - 1)] - k;
        to_right += 10 - k - j[static_cast<std::size_t>(kCoalitionSize - k)];
    }
    return std::min(to_left, to_right);
}

int discrete_disorder(SeatSet members, const RankAssignment& ranks) {
    if (members.size() != kCoalitionSize) {
        throw DataError("discrete disorder needs exactly five justices");
    }
    std::array<int, kCoalitionSize> r{};
    std::size_t k = 0;
    for (auto s : members.seats()) {
        r[k++] = ranks.rank[s];
    }
    return discrete_disorder(r);
}

std::string coalitions_json(const std::vector<Coalition>& coalitions, const std::vector<Justice>& roster) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coalitions) {
        nlohmann::ordered_json j;
        j["members"] = member_names(c.members, roster);
        j["voting"] = c.is_voting;
        j["voronoi"] = c.is_voronoi;
        j["half_plane"] = c.is_halfplane;
        j["disorder"] = c.disorder ? nlohmann::ordered_json(*c.disorder) : nlohmann::ordered_json(nullptr);
        j["case_count"] = c.case_ids.size();
        j["cases"] = c.case_ids;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace fivefour
