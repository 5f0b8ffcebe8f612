#include "fivefour/cli.hpp"

#include "fivefour/report.hpp"
#include "fivefour/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace fivefour::cli {

namespace {

namespace fs = std::filesystem;

struct Settings {
    std::string input;
    std::string config;
    std::vector<std::string> courts;
    std::string terms;
    std::string out;
    std::string anchor;
    int grid_resolution = 256;
    double epsilon = 1e-9;
    double box_scale = 10.0;
    std::string format = "json";
    int dim = 2;
    std::vector<std::string> highlights;
    std::string coalition;
    std::string figure;
    std::vector<std::string> columns;
    bool no_terms = false;
};

// One named output of a command: written under --out, or streamed to stdout.
struct Artifact {
    std::string name;
    std::string body;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::string file_key(const std::string& label) {
    std::string out;
    for (const char c : label) {
        const bool keep = std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '_' || c == '.';
        out += keep ? c : '_';
    }
    return out.empty() ? "court" : out;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(n) + ": expected key = value");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    T v{};
    in >> v;
    if (!in || !(in >> std::ws).eof()) {
        throw ConfigError("config key '" + key + "': invalid number '" + text + "'");
    }
    return v;
}

// Config values fill only what the command line left unset.
void merge_config(Settings& s, const CLI::App& sub, ColumnMap& columns) {
    if (s.config.empty()) {
        return;
    }
    const auto given = [&](const char* flag) { return sub.count(flag) > 0; };
    for (const auto& [key, value] : read_config(s.config)) {
        if (key.rfind("column.", 0) == 0) {
            columns.set(key.substr(7), value);
        } else if (key == "delimiter") {
            columns.set(key, value);
        } else if (key == "input") {
            if (!given("--input")) s.input = value;
        } else if (key == "court") {
            if (!given("--court")) s.courts = {value};
        } else if (key == "terms") {
            if (!given("--terms")) s.terms = value;
        } else if (key == "out") {
            if (!given("--out")) s.out = value;
        } else if (key == "anchor") {
            if (!given("--anchor")) s.anchor = value;
        } else if (key == "grid-resolution") {
            if (!given("--grid-resolution")) s.grid_resolution = parse_number<int>(key, value);
        } else if (key == "epsilon") {
            if (!given("--epsilon")) s.epsilon = parse_number<double>(key, value);
        } else if (key == "box-scale") {
            if (!given("--box-scale")) s.box_scale = parse_number<double>(key, value);
        } else if (key == "format") {
            if (!given("--format")) s.format = value;
        } else if (key == "dim") {
            if (!given("--dim")) s.dim = parse_number<int>(key, value);
        } else if (key == "per-term") {
            if (!given("--no-terms")) s.no_terms = value == "false" || value == "0" || value == "no";
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

void validate(const Settings& s) {
    if (s.input.empty()) {
        throw ConfigError("no input: pass --input or set FIVEFOUR_DATA");
    }
    if (!fs::is_regular_file(s.input)) {
        throw ConfigError("input file '" + s.input + "' does not exist");
    }
    if (!(s.epsilon > 0.0)) {
        throw ConfigError("--epsilon must be positive");
    }
    if (!(s.box_scale > 1.0)) {
        throw ConfigError("--box-scale must exceed 1");
    }
    if (s.grid_resolution < 0) {
        throw ConfigError("--grid-resolution must be non-negative");
    }
    if (s.dim != 1 && s.dim != 2) {
        throw ConfigError("--dim must be 1 or 2");
    }
    if (s.format != "json" && s.format != "csv" && s.format != "svg") {
        throw ConfigError("--format must be json, csv or svg");
    }
}

PipelineOptions pipeline_options(const Settings& s) {
    PipelineOptions p;
    if (!s.anchor.empty()) {
        p.mds.anchors.insert(p.mds.anchors.begin(), s.anchor);
    }
    p.geometry.epsilon = s.epsilon;
    p.geometry.box_scale = s.box_scale;
    p.per_term = !s.no_terms;
    return p;
}

class Runner {
public:
    Runner(const Settings& s, const ColumnMap& columns, Diagnostics& diag)
        : s_(s), options_(pipeline_options(s)), diag_(diag) {
        table_ = load_votes(s.input, columns, &diag_);
        if (!s.terms.empty()) {
            terms_ = parse_term_range(s.terms);
        }
    }

    std::vector<Artifact> run(const std::string& command) {
        if (command == "ingest") return ingest();
        if (command == "mds") return mds();
        if (command == "coalitions") return coalitions();
        if (command == "voronoi") return voronoi();
        if (command == "ksets") return ksets();
        if (command == "fifth-vote") return fifth_vote_cmd();
        if (command == "mean-justice") return mean_justice_cmd();
        if (command == "report") return report();
        if (command == "render") return render();
        return all();
    }

private:
    const Settings& s_;
    PipelineOptions options_;
    Diagnostics& diag_;
    VoteTable table_;
    std::optional<TermRange> terms_;

    bool has_selection() const { return !s_.courts.empty() || terms_.has_value(); }

    void require_format(std::initializer_list<const char*> allowed, const std::string& command) const {
        for (const char* f : allowed) {
            if (s_.format == f) {
                return;
            }
        }
        throw ConfigError(command + " does not support --format " + s_.format);
    }

    CourtSlice slice_for(const std::optional<std::string>& court) {
        CourtSelector sel;
        if (court) {
            const auto ids = table_.natural_courts();
            if (std::find(ids.begin(), ids.end(), *court) == ids.end()) {
                std::string known;
                for (const auto& id : ids) {
                    known += (known.empty() ? "" : ", ") + id;
                }
                throw ConfigError("unknown natural court '" + *court + "' (available: " + known + ")");
            }
            sel.natural_court_id = court;
        }
        sel.terms = terms_;
        return select_court(table_, sel, &diag_);
    }

    // Slices named by --court (or by --terms alone).
    std::vector<CourtSlice> selected_slices() {
        if (!has_selection()) {
            throw ConfigError("select a court with --court ID or --terms A..B");
        }
        std::vector<CourtSlice> out;
        if (s_.courts.empty()) {
            out.push_back(slice_for(std::nullopt));
        }
        for (const auto& c : s_.courts) {
            out.push_back(slice_for(c));
        }
        return out;
    }

    CourtSlice single_slice(const std::string& command) {
        auto slices = selected_slices();
        if (slices.size() != 1) {
            throw ConfigError(command + " takes exactly one court");
        }
        return std::move(slices.front());
    }

    // Every natural court (or the selection) that yields a valid nine-justice slice.
    std::vector<CourtSlice> sweep_slices() {
        if (has_selection()) {
            return selected_slices();
        }
        std::vector<CourtSlice> out;
        for (const auto& id : table_.natural_courts()) {
            try {
                out.push_back(select_court(table_, CourtSelector::court(id), &diag_));
            } catch (const DataError& e) {
                diag_.warn("court " + id + " skipped: " + e.what());
            }
        }
        if (out.empty()) {
            throw DataError("no natural court in the input has a valid nine-justice slice");
        }
        return out;
    }

    void check_anchor(const CourtSlice& slice) {
        if (s_.anchor.empty()) {
            return;
        }
        for (const auto& j : slice.roster) {
            const auto& n = j.name;
            if (n == s_.anchor ||
                (n.size() >= s_.anchor.size() && n.compare(n.size() - s_.anchor.size(), s_.anchor.size(), s_.anchor) == 0)) {
                return;
            }
        }
        diag_.warn("anchor '" + s_.anchor + "' is not on the roster of " + slice.label);
    }

    CourtAnalysis analyze(const CourtSlice& slice) {
        check_anchor(slice);
        return analyze_court(slice, options_, &diag_);
    }

    SeatSet coalition_arg(const CourtSlice& slice) const {
        if (s_.coalition.empty()) {
            throw ConfigError("--coalition NAME,NAME,NAME,NAME,NAME is required");
        }
        const SeatSet set = seat_set(split_names(s_.coalition), slice.roster);
        if (set.size() != kCoalitionSize) {
            throw ConfigError("--coalition must name exactly five justices");
        }
        return set;
    }

    std::vector<SeatSet> highlight_args(const CourtSlice& slice) const {
        std::vector<SeatSet> out;
        for (const auto& h : s_.highlights) {
            const SeatSet set = seat_set(split_names(h), slice.roster);
            if (set.size() != kCoalitionSize) {
                throw ConfigError("--highlight '" + h + "' must name exactly five justices");
            }
            out.push_back(set);
        }
        return out;
    }

    void cross_check_grid(const PointSet9& seeds, const std::vector<VoronoiCell>& cells) {
        if (s_.grid_resolution == 0) {
            return;
        }
        std::set<std::uint16_t> exact;
        for (const auto& c : cells) {
            exact.insert(c.owners.bits());
        }
        for (const auto bits : oracle::voronoi_grid(seeds, s_.grid_resolution)) {
            if (!exact.contains(bits)) {
                diag_.warn("grid oracle found " + join_names(SeatSet(bits), seeds.roster(), "-") +
                           " which the exact enumeration excluded");
            }
        }
    }

    std::vector<Artifact> ingest() {
        require_format({"json", "csv"}, "ingest");
        if (s_.format == "csv") {
            std::ostringstream o;
            write_votes(o, table_);
            return {{"votes.csv", o.str()}};
        }
        nlohmann::ordered_json j;
        j["records"] = table_.records().size();
        j["cases"] = table_.cases().size();
        j["rejected_rows"] = table_.rejected_rows();
        j["duplicate_rows"] = table_.duplicate_rows();
        auto& courts = j["natural_courts"] = nlohmann::ordered_json::array();
        for (const auto& id : table_.natural_courts()) {
            nlohmann::ordered_json c;
            const auto [first, last] = table_.term_span(id);
            c["id"] = id;
            c["first_term"] = first;
            c["last_term"] = last;
            try {
                const auto slice = select_court(table_, CourtSelector::court(id), nullptr);
                c["roster"] = slice.roster_names();
                c["full_cases"] = slice.cases.size();
                c["excluded_cases"] = slice.excluded_cases;
            } catch (const DataError& e) {
                c["error"] = e.what();
            }
            courts.push_back(std::move(c));
        }
        auto& issues = j["issues"] = nlohmann::ordered_json::array();
        for (const auto& i : table_.issues()) {
            issues.push_back({{"line", i.line}, {"message", i.message}});
        }
        return {{"ingest.json", j.dump(2) + "\n"}};
    }

    std::vector<Artifact> mds() {
        const auto slice = single_slice("mds");
        check_anchor(slice);
        const auto d = dissimilarity_matrix(slice);
        const auto e = classical_mds(d, s_.dim, options_.mds, &diag_);
        const std::string base = file_key(slice.label) + "_mds" + std::to_string(s_.dim);
        if (s_.format == "svg") {
            if (s_.dim != 1) {
                throw ConfigError("mds --format svg draws the 1-D scale; pass --dim 1");
            }
            return {{base + ".svg", svg::render_line(e)}};
        }
        if (s_.format == "csv") {
            std::ostringstream o;
            write_embedding_csv(o, e);
            return {{base + ".csv", o.str()}};
        }
        return {{base + ".json", embedding_json(e) + "\n"}};
    }

    std::vector<Artifact> coalitions() {
        require_format({"json", "csv"}, "coalitions");
        const auto a = analyze(single_slice("coalitions"));
        const std::string base = file_key(a.slice.label) + "_coalitions";
        if (s_.format == "csv") {
            std::ostringstream o;
            o << "members,cases,disorder,voronoi,halfplane\n";
            for (const auto& c : a.voting) {
                o << '"' << join_names(c.members, a.slice.roster, ";") << "\"," << c.case_ids.size() << ','
                  << (c.disorder ? std::to_string(*c.disorder) : "") << ',' << (c.is_voronoi ? 1 : 0) << ','
                  << (c.is_halfplane ? 1 : 0) << '\n';
            }
            return {{base + ".csv", o.str()}};
        }
        return {{base + ".json", coalitions_json(a.voting, a.slice.roster) + "\n"}};
    }

    std::vector<Artifact> voronoi() {
        require_format({"json", "svg"}, "voronoi");
        const auto slice = single_slice("voronoi");
        const auto a = analyze(slice);
        const auto seeds = PointSet9::from_embedding(a.plane);
        cross_check_grid(seeds, a.voronoi);
        const std::string base = file_key(slice.label) + "_voronoi";
        if (s_.format == "svg") {
            const auto hl = highlight_args(slice);
            return {{base + ".svg", svg::render_voronoi(seeds, a.voronoi, hl, options_.geometry)}};
        }
        return {{base + ".json", voronoi_json(a.voronoi, slice.roster) + "\n"}};
    }

    std::vector<Artifact> ksets() {
        require_format({"json", "svg"}, "ksets");
        const auto slice = single_slice("ksets");
        const auto a = analyze(slice);
        const std::string base = file_key(slice.label) + "_ksets";
        if (s_.format == "svg") {
            const auto seeds = PointSet9::from_embedding(a.plane);
            const auto owners = coalition_arg(slice);
            const auto line = separating_line(seeds, owners, options_.geometry);
            if (!line) {
                throw DataError(join_names(owners, slice.roster) + " is not a half-plane coalition");
            }
            return {{base + ".svg", svg::render_halfplane(seeds, *line)}};
        }
        return {{base + ".json", halfplane_json(a.halfplane, slice.roster) + "\n"}};
    }

    std::vector<Artifact> fifth_vote_cmd() {
        require_format({"json", "svg"}, "fifth-vote");
        const auto slice = single_slice("fifth-vote");
        const auto a = analyze(slice);
        const std::string base = file_key(slice.label) + "_fifth_vote";
        if (s_.format == "svg") {
            return {{base + ".svg", svg::render_circles(a.plane, fifth_vote(a.plane, coalition_arg(slice)))}};
        }
        std::vector<std::vector<std::string>> cases;
        for (const auto& c : a.voting) {
            cases.push_back(c.case_ids);
        }
        return {{base + ".json", fifth_votes_json(a.fifth_votes, a.plane, cases) + "\n"}};
    }

    std::vector<Artifact> mean_justice_cmd() {
        require_format({"json"}, "mean-justice");
        const auto slice = single_slice("mean-justice");
        const auto a = analyze(slice);
        const auto r = court_report(a, options_, &diag_);
        nlohmann::ordered_json j;
        j["natural_court"] = slice.label;
        j["mean_justice"] = r.mean_justice;
        j["tie"] = r.mean_justice_tie;
        j["distance"] = a.mean.distance;
        j["center"] = {a.mean.center.x, a.mean.center.y};
        auto& terms = j["terms"] = nlohmann::ordered_json::object();
        for (const auto& [term, t] : r.term_mean_justices) {
            terms[std::to_string(term)] = {{"justice", t.justice}, {"tie", t.tie}, {"cases", t.cases}};
        }
        return {{file_key(slice.label) + "_mean_justice.json", j.dump(2) + "\n"}};
    }

    std::vector<CourtReport> reports(const std::vector<CourtSlice>& slices) {
        std::vector<CourtReport> out;
        for (const auto& slice : slices) {
            out.push_back(court_report(analyze(slice), options_, &diag_));
        }
        return out;
    }

    std::vector<Artifact> report() {
        require_format({"json", "csv"}, "report");
        const auto rs = reports(sweep_slices());
        if (s_.format == "csv") {
            std::ostringstream o;
            write_report_csv(o, rs);
            return {{"report.csv", o.str()}};
        }
        return {{"report.json", report_json(rs) + "\n"}};
    }

    std::vector<Artifact> render() {
        const std::string& f = s_.figure;
        if (f == "min-accuracy") {
            const auto rs = reports(sweep_slices());
            return {{"min_accuracy.svg", svg::render_min_accuracy(min_accuracy_series(rs))}};
        }
        const auto slice = single_slice("render");
        check_anchor(slice);
        const std::string base = file_key(slice.label);
        if (f == "line") {
            const auto e = classical_mds(dissimilarity_matrix(slice), 1, options_.mds, &diag_);
            return {{base + "_line.svg", svg::render_line(e)}};
        }
        const auto a = analyze_court(slice, options_, &diag_);
        const auto seeds = PointSet9::from_embedding(a.plane);
        if (f == "voronoi") {
            return {{base + "_voronoi.svg", svg::render_voronoi(seeds, a.voronoi, highlight_args(slice), options_.geometry)}};
        }
        if (f == "halfplane") {
            const auto owners = coalition_arg(slice);
            const auto line = separating_line(seeds, owners, options_.geometry);
            if (!line) {
                throw DataError(join_names(owners, slice.roster) + " is not a half-plane coalition");
            }
            return {{base + "_halfplane.svg", svg::render_halfplane(seeds, *line)}};
        }
        if (f == "circles") {
            return {{base + "_circles.svg", svg::render_circles(a.plane, fifth_vote(a.plane, coalition_arg(slice)))}};
        }
        throw ConfigError("--figure must be line, voronoi, halfplane, circles or min-accuracy");
    }

    std::vector<Artifact> all() {
        if (s_.out.empty()) {
            throw ConfigError("all writes several files; pass --out DIR");
        }
        std::vector<Artifact> out;
        std::vector<CourtReport> rs;
        for (const auto& slice : sweep_slices()) {
            const auto a = analyze(slice);
            const std::string base = file_key(slice.label);
            std::ostringstream m;
            write_matrix_csv(m, a.matrix);
            out.push_back({base + "_matrix.csv", m.str()});
            out.push_back({base + "_analysis.json", analysis_json(a) + "\n"});
            out.push_back({base + "_mds1.json", embedding_json(a.line) + "\n"});
            out.push_back({base + "_mds2.json", embedding_json(a.plane) + "\n"});
            out.push_back({base + "_coalitions.json", coalitions_json(a.voting, slice.roster) + "\n"});
            out.push_back({base + "_voronoi.json", voronoi_json(a.voronoi, slice.roster) + "\n"});
            out.push_back({base + "_ksets.json", halfplane_json(a.halfplane, slice.roster) + "\n"});
            const auto seeds = PointSet9::from_embedding(a.plane);
            cross_check_grid(seeds, a.voronoi);
            out.push_back({base + "_line.svg", svg::render_line(a.line)});
            std::vector<SeatSet> hl;
            for (const auto& c : a.voting) {
                if (c.is_voronoi) {
                    hl.push_back(c.members);
                }
            }
            out.push_back({base + "_voronoi.svg", svg::render_voronoi(seeds, a.voronoi, hl, options_.geometry)});
            rs.push_back(court_report(a, options_, &diag_));
        }
        std::ostringstream csv;
        write_report_csv(csv, rs);
        out.push_back({"report.csv", csv.str()});
        out.push_back({"report.json", report_json(rs) + "\n"});
        out.push_back({"min_accuracy.svg", svg::render_min_accuracy(min_accuracy_series(rs))});
        if (!has_selection()) {
            nlohmann::ordered_json t = nlohmann::ordered_json::object();
            for (const auto& [term, m] : term_mean_justices(table_, options_, &diag_)) {
                t[std::to_string(term)] = {{"justice", m.justice}, {"tie", m.tie}, {"court", m.court}, {"cases", m.cases}};
            }
            out.push_back({"term_mean_justices.json", t.dump(2) + "\n"});
        }
        return out;
    }
};

void emit(const std::vector<Artifact>& artifacts, const std::string& dir, std::ostream& out) {
    if (dir.empty()) {
        for (const auto& a : artifacts) {
            out << a.body;
        }
        return;
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
    }
    for (const auto& a : artifacts) {
        const fs::path p = fs::path(dir) / a.name;
        std::ofstream f(p, std::ios::binary);
        f << a.body;
        if (!f) {
            throw ConfigError("cannot write '" + p.string() + "'");
        }
    }
}

void add_common(CLI::App* sub, Settings& s) {
    sub->add_option("--input,-i", s.input, "Justice-centered vote CSV (default: $FIVEFOUR_DATA)");
    sub->add_option("--config", s.config, "key = value file; command-line flags take precedence");
    sub->add_option("--court", s.courts, "Natural-court id, e.g. 2009-2015 (repeatable for report)");
    sub->add_option("--terms", s.terms, "Term range A..B");
    sub->add_option("--out,-o", s.out, "Output directory (default: standard output)");
    sub->add_option("--anchor", s.anchor, "Justice placed on the positive side of dimension 1");
    sub->add_option("--grid-resolution", s.grid_resolution, "Grid oracle resolution for Voronoi cross-checks (0 = off)");
    sub->add_option("--epsilon", s.epsilon, "Interiority margin relative to the configuration diameter");
    sub->add_option("--box-scale", s.box_scale, "Voronoi clipping square side in configuration diameters");
    sub->add_option("--format", s.format, "json | csv | svg");
    sub->add_option("--column", s.columns, "Column mapping key=header (case_id, term, natural_court, justice_id, justice_name, majority, delimiter)");
    sub->add_flag("--no-terms", s.no_terms, "Skip per-term mean-justice analysis");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Spatial analysis of 5-to-4 decisions", "fivefour"};
    app.require_subcommand(1);
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"ingest", "Parse the vote file and summarize natural courts"},
        {"mds", "Classical MDS embedding of one court"},
        {"coalitions", "Voting coalitions of 5-to-4 cases with disorder scores"},
        {"voronoi", "Order-5 Voronoi coalitions"},
        {"ksets", "Half-plane coalitions"},
        {"fifth-vote", "Fifth-vote attribution for each voting coalition"},
        {"mean-justice", "Mean justice of a court and of each term"},
        {"report", "Per-court accuracy table"},
        {"render", "SVG figure selected by --figure"},
        {"all", "Every output for every court into --out"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, s);
        subs[name] = sub;
    }
    subs["mds"]->add_option("--dim", s.dim, "Embedding dimension (1 or 2)");
    subs["voronoi"]->add_option("--highlight", s.highlights, "Five comma-separated names to fill (repeatable)");
    subs["render"]->add_option("--highlight", s.highlights, "Five comma-separated names to fill (repeatable)");
    for (const char* name : {"ksets", "fifth-vote", "render"}) {
        subs[name]->add_option("--coalition", s.coalition, "Five comma-separated justice names");
    }
    subs["render"]->add_option("--figure", s.figure, "line | voronoi | halfplane | circles | min-accuracy")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitConfig;
    }

    CLI::App* active = app.get_subcommands().front();
    Diagnostics diag;
    const auto flush = [&] {
        for (const auto& w : diag.warnings) {
            err << "WARN: " << w << '\n';
        }
    };
    try {
        ColumnMap columns;
        if (s.input.empty()) {
            if (const char* env = std::getenv("FIVEFOUR_DATA")) {
                s.input = env;
            }
        }
        merge_config(s, *active, columns);
        for (const auto& c : s.columns) {
            const auto eq = c.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("--column expects key=header, got '" + c + "'");
            }
            columns.set(c.substr(0, eq), c.substr(eq + 1));
        }
        validate(s);
        Runner runner(s, columns, diag);
        const auto artifacts = runner.run(active->get_name());
        emit(artifacts, s.out, out);
    } catch (const ConfigError& e) {
        flush();
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DataError& e) {
        flush();
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    flush();
    return kExitOk;
}

}  // namespace fivefour::cli
