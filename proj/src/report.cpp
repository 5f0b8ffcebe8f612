#include "fivefour/report.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace fivefour {

std::string Ratio::display() const {
    if (den == 0) {
        return "0%";
    }
    // tenths of a percent: 1000 * num / den, rounded half to even.
    const long long scaled = 1000LL * num;
    long long q = scaled / den;
    const long long r = scaled % den;
    if (2 * r > den || (2 * r == den && q % 2 == 1)) {
        ++q;
    }
    std::string out = std::to_string(q / 10);
    if (q % 10 != 0) {
        out += "." + std::to_string(q % 10);
    }
    return out + "%";
}

CourtAnalysis analyze_court(const CourtSlice& slice, const PipelineOptions& options, Diagnostics* diag) {
    CourtAnalysis a;
    a.slice = slice;
    a.matrix = dissimilarity_matrix(slice);
    a.line = classical_mds(a.matrix, 1, options.mds, diag);
    a.plane = classical_mds(a.matrix, 2, options.mds, diag);
    a.ranks = rank_justices(a.line, diag);

    const auto seeds = PointSet9::from_embedding(a.plane);
    a.voronoi = voronoi_coalitions(seeds, options.geometry, diag);
    a.halfplane = half_plane_coalitions(seeds, options.geometry, diag);
    std::set<std::uint16_t> voronoi_sets;
    std::set<std::uint16_t> halfplane_sets;
    for (const auto& c : a.voronoi) {
        voronoi_sets.insert(c.owners.bits());
    }
    for (const auto& l : a.halfplane) {
        halfplane_sets.insert(l.owners.bits());
    }

    a.voting = extract_voting_coalitions(slice);
    for (auto& c : a.voting) {
        c.disorder = discrete_disorder(c.members, a.ranks);
        c.is_voronoi = voronoi_sets.contains(c.members.bits());
        c.is_halfplane = halfplane_sets.contains(c.members.bits());
        a.fifth_votes.push_back(fifth_vote(a.plane, c.members));
        if (a.fifth_votes.back().tie) {
            warn(diag, slice.label + ": fifth-vote distance tie for " + join_names(c.members, slice.roster) +
                           "; broken by name");
        }
    }
    a.mean = mean_justice(a.plane);
    if (a.mean.tie) {
        warn(diag, slice.label + ": mean-justice distance tie; broken by name");
    }
    return a;
}

CourtReport court_report(const CourtAnalysis& a, const PipelineOptions& options, Diagnostics* diag) {
    CourtReport r;
    r.natural_court_id = a.slice.label;
    r.case_count = a.slice.cases.size();
    r.n_voting_coalitions = static_cast<int>(a.voting.size());
    for (const auto& c : a.voting) {
        r.max_disorder = std::max(r.max_disorder.value_or(0), c.disorder.value_or(0));
        r.voronoi.intersection += c.is_voronoi ? 1 : 0;
        r.halfplane.intersection += c.is_halfplane ? 1 : 0;
    }
    r.voronoi.voting = r.halfplane.voting = r.n_voting_coalitions;
    r.voronoi.model = static_cast<int>(a.voronoi.size());
    r.halfplane.model = static_cast<int>(a.halfplane.size());
    r.mean_justice = a.plane.roster[a.mean.justice].name;
    r.mean_justice_tie = a.mean.tie;

    if (options.per_term) {
        std::set<int> terms;
        for (const auto& c : a.slice.cases) {
            terms.insert(c.term);
        }
        PipelineOptions sub = options;
        sub.per_term = false;
        for (int t : terms) {
            const CourtSlice ts = restrict_terms(a.slice, {t, t});
            const auto d = dissimilarity_matrix(ts);
            const auto plane = classical_mds(d, 2, sub.mds, diag);
            const auto m = mean_justice(plane);
            r.term_mean_justices[t] = {plane.roster[m.justice].name, m.tie, a.slice.label, ts.cases.size()};
        }
    }
    return r;
}

CourtReport court_report(const CourtSlice& slice, const PipelineOptions& options, Diagnostics* diag) {
    return court_report(analyze_court(slice, options, diag), options, diag);
}

std::vector<MinAccuracy> min_accuracy_series(std::span<const CourtReport> reports) {
    std::vector<MinAccuracy> out;
    for (const auto& r : reports) {
        out.push_back({r.natural_court_id,
                       std::min(r.voronoi.explained().percent(), r.voronoi.efficiency().percent()),
                       std::min(r.halfplane.explained().percent(), r.halfplane.efficiency().percent())});
    }
    return out;
}

MeanAccuracies mean_accuracies(std::span<const CourtReport> reports) {
    MeanAccuracies m;
    if (reports.empty()) {
        return m;
    }
    for (const auto& r : reports) {
        m.voronoi_explained += r.voronoi.explained().percent();
        m.voronoi_efficiency += r.voronoi.efficiency().percent();
        m.halfplane_explained += r.halfplane.explained().percent();
        m.halfplane_efficiency += r.halfplane.efficiency().percent();
    }
    const auto n = static_cast<double>(reports.size());
    m.voronoi_explained /= n;
    m.voronoi_efficiency /= n;
    m.halfplane_explained /= n;
    m.halfplane_efficiency /= n;
    return m;
}

std::map<int, TermMeanJustice> term_mean_justices(const VoteTable& table, const PipelineOptions& options,
                                                  Diagnostics* diag) {
    std::set<int> terms;
    for (const auto& c : table.cases()) {
        terms.insert(c.term);
    }
    const auto courts = table.natural_courts();
    std::map<int, TermMeanJustice> out;
    for (int t : terms) {
        for (const auto& court : courts) {
            const auto [first, last] = table.term_span(court);
            if (t < first || t > last) {
                continue;
            }
            CourtSlice slice;
            try {
                slice = select_court(table, CourtSelector{court, TermRange{t, t}});
            } catch (const DataError&) {
                continue;
            }
            const auto plane = classical_mds(dissimilarity_matrix(slice), 2, options.mds, diag);
            const auto m = mean_justice(plane);
            out[t] = {plane.roster[m.justice].name, m.tie, court, slice.cases.size()};
            break;
        }
        if (!out.contains(t)) {
            warn(diag, "term " + std::to_string(t) + ": no natural court yields a nine-justice slice");
        }
    }
    return out;
}

void write_report_csv(std::ostream& out, std::span<const CourtReport> reports) {
    out << "natural_court,cases,voting_coalitions,max_disorder,voronoi_explained,voronoi_efficiency,"
           "halfplane_explained,halfplane_efficiency,mean_justice\n";
    for (const auto& r : reports) {
        out << r.natural_court_id << ',' << r.case_count << ',' << r.n_voting_coalitions << ','
            << (r.max_disorder ? std::to_string(*r.max_disorder) : std::string()) << ','
            << r.voronoi.explained().display() << ',' << r.voronoi.efficiency().display() << ','
            << r.halfplane.explained().display() << ',' << r.halfplane.efficiency().display() << ','
            << r.mean_justice << (r.mean_justice_tie ? " (tie)" : "") << '\n';
    }
}

namespace {

nlohmann::ordered_json ratio_json(const Ratio& r) {
    return {{"num", r.num}, {"den", r.den}, {"percent", r.percent()}, {"display", r.display()}};
}

nlohmann::ordered_json accuracy_json(const Accuracy& a) {
    nlohmann::ordered_json j;
    j["intersection"] = a.intersection;
    j["voting"] = a.voting;
    j["model"] = a.model;
    j["explained"] = ratio_json(a.explained());
    j["efficiency"] = ratio_json(a.efficiency());
    return j;
}

}  // namespace

std::string report_json(std::span<const CourtReport> reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["natural_court"] = r.natural_court_id;
        j["cases"] = r.case_count;
        j["voting_coalitions"] = r.n_voting_coalitions;
        j["max_disorder"] = r.max_disorder ? nlohmann::ordered_json(*r.max_disorder) : nlohmann::ordered_json(nullptr);
        j["voronoi_accuracy"] = accuracy_json(r.voronoi);
        j["halfplane_accuracy"] = accuracy_json(r.halfplane);
        j["mean_justice"] = r.mean_justice;
        j["mean_justice_tie"] = r.mean_justice_tie;
        auto& terms = j["term_mean_justices"] = nlohmann::ordered_json::object();
        for (const auto& [t, m] : r.term_mean_justices) {
            terms[std::to_string(t)] = {{"justice", m.justice}, {"tie", m.tie}, {"cases", m.cases}};
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string analysis_json(const CourtAnalysis& a) {
    nlohmann::ordered_json j;
    j["natural_court"] = a.slice.label;
    j["cases"] = a.slice.cases.size();
    j["excluded_cases"] = a.slice.excluded_cases;
    j["dissimilarity"] = nlohmann::ordered_json::parse(matrix_json(a.matrix));
    j["mds_1d"] = nlohmann::ordered_json::parse(embedding_json(a.line));
    j["mds_2d"] = nlohmann::ordered_json::parse(embedding_json(a.plane));
    auto& order = j["rank_order"] = nlohmann::ordered_json::array();
    for (auto s : a.ranks.order()) {
        order.push_back(a.line.roster[s].name);
    }
    j["voting_coalitions"] = nlohmann::ordered_json::parse(coalitions_json(a.voting, a.slice.roster));
    j["voronoi_coalitions"] = nlohmann::ordered_json::parse(voronoi_json(a.voronoi, a.slice.roster));
    j["halfplane_coalitions"] = nlohmann::ordered_json::parse(halfplane_json(a.halfplane, a.slice.roster));
    std::vector<std::vector<std::string>> cases;
    for (const auto& c : a.voting) {
        cases.push_back(c.case_ids);
    }
    j["fifth_votes"] = nlohmann::ordered_json::parse(fifth_votes_json(a.fifth_votes, a.plane, cases));
    j["fifth_vote_agreement"] = a.fifth_votes.empty() ? 0.0 : agreement_rate(a.fifth_votes);
    j["mean_justice"] = a.plane.roster[a.mean.justice].name;
    return j.dump(2);
}

}  // namespace fivefour
