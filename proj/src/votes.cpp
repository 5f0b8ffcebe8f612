#include "fivefour/votes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace fivefour {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::optional<int> parse_int(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) {
        return std::nullopt;
    }
    int value = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (*first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) {
        return std::nullopt;
    }
    // Accept "2.0"-style numerics exported by spreadsheet tools.
    if (ptr != last) {
        if (*ptr != '.' || !std::all_of(ptr + 1, last, [](char c) { return c == '0'; })) {
            return std::nullopt;
        }
    }
    return value;
}

std::string quote_field(const std::string& field, char delimiter) {
    if (field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void ColumnMap::set(const std::string& key, const std::string& value) {
    if (key == "case_id") {
        case_id = value;
    } else if (key == "term") {
        term = value;
    } else if (key == "natural_court" || key == "natural_court_id") {
        natural_court = value;
    } else if (key == "justice_id") {
        justice_id = value;
    } else if (key == "justice_name") {
        justice_name = value;
    } else if (key == "majority" || key == "majority_code") {
        majority = value;
    } else if (key == "delimiter") {
        if (value == "\\t" || value == "tab") {
            delimiter = '\t';
        } else if (value.size() == 1) {
            delimiter = value[0];
        } else {
            throw ConfigError("delimiter must be a single character, got '" + value + "'");
        }
    } else {
        throw ConfigError("unknown column key '" + key + "'");
    }
}

std::vector<std::string> split_delimited(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

void VoteTable::add_issue(std::size_t line, std::string message, bool rejected) {
    issues_.push_back({line, std::move(message)});
    if (rejected) {
        ++rejected_rows_;
    }
}

void VoteTable::add(VoteRecord record, std::size_t line) {
    const auto key = std::make_pair(record.natural_court_id, record.case_id);
    auto [it, inserted] = case_index_.try_emplace(key, cases_.size());
    if (inserted) {
        cases_.push_back(CaseVotes{record.case_id, record.term, record.natural_court_id, {}});
    }
    CaseVotes& cv = cases_[it->second];
    if (cv.votes.contains(record.justice_id)) {
        ++duplicate_rows_;
        issues_.push_back({line, "duplicate vote for justice " + std::to_string(record.justice_id) + " in case " +
                                     record.case_id + "; keeping first occurrence"});
        return;
    }
    if (auto known = names_.find(record.justice_id); known == names_.end()) {
        names_.emplace(record.justice_id, record.justice_name);
    } else if (known->second != record.justice_name) {
        issues_.push_back({line, "justice " + std::to_string(record.justice_id) + " named both '" + known->second +
                                     "' and '" + record.justice_name + "'; keeping '" + known->second + "'"});
        record.justice_name = known->second;
    }
    cv.votes.emplace(record.justice_id, record.majority_code);
    records_.push_back(std::move(record));
}

std::vector<std::string> VoteTable::natural_courts() const {
    std::map<std::string, std::pair<int, int>> spans;
    for (const auto& c : cases_) {
        auto [it, inserted] = spans.try_emplace(c.natural_court_id, c.term, c.term);
        if (!inserted) {
            it->second.first = std::min(it->second.first, c.term);
            it->second.second = std::max(it->second.second, c.term);
        }
    }
    std::vector<std::string> ids;
    ids.reserve(spans.size());
    for (const auto& [id, span] : spans) {
        ids.push_back(id);
    }
    std::stable_sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
        return spans.at(a) < spans.at(b);
    });
    return ids;
}

std::pair<int, int> VoteTable::term_span(const std::string& natural_court_id) const {
    std::optional<std::pair<int, int>> span;
    for (const auto& c : cases_) {
        if (c.natural_court_id != natural_court_id) {
            continue;
        }
        if (!span) {
            span = std::make_pair(c.term, c.term);
        } else {
            span->first = std::min(span->first, c.term);
            span->second = std::max(span->second, c.term);
        }
    }
    if (!span) {
        throw DataError("no cases for natural court '" + natural_court_id + "'");
    }
    return *span;
}

std::string VoteTable::justice_name(int justice_id) const {
    auto it = names_.find(justice_id);
    return it == names_.end() ? std::to_string(justice_id) : it->second;
}

VoteTable parse_votes(std::istream& in, const ColumnMap& columns, Diagnostics* diag) {
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw ConfigError("vote file is empty: a header row is required");
    }
    if (header_line.size() >= 3 && header_line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        header_line.erase(0, 3);
    }
    const auto header = split_delimited(header_line, columns.delimiter);
    auto locate = [&](const std::string& name, const char* role) {
        auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) { return trim(h) == name; });
        if (it == header.end()) {
            throw ConfigError(std::string("column '") + name + "' (" + role + ") not found in header");
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t case_col = locate(columns.case_id, "case_id");
    const std::size_t term_col = locate(columns.term, "term");
    const std::size_t court_col = locate(columns.natural_court, "natural_court");
    const std::size_t jid_col = locate(columns.justice_id, "justice_id");
    const std::size_t jname_col = locate(columns.justice_name, "justice_name");
    const std::size_t maj_col = locate(columns.majority, "majority");
    const std::size_t needed = std::max({case_col, term_col, court_col, jid_col, jname_col, maj_col}) + 1;

    VoteTable table;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_delimited(line, columns.delimiter);
        if (fields.size() < needed) {
            table.add_issue(line_no, "expected at least " + std::to_string(needed) + " fields, found " +
                                         std::to_string(fields.size()), true);
            continue;
        }
        VoteRecord rec;
        rec.case_id = trim(fields[case_col]);
        rec.natural_court_id = trim(fields[court_col]);
        rec.justice_name = trim(fields[jname_col]);
        const auto term = parse_int(fields[term_col]);
        const auto jid = parse_int(fields[jid_col]);
        std::string problem;
        if (rec.case_id.empty()) {
            problem = "empty case id";
        } else if (rec.natural_court_id.empty()) {
            problem = "empty natural court";
        } else if (!term) {
            problem = "unparseable term '" + fields[term_col] + "'";
        } else if (!jid) {
            problem = "unparseable justice id '" + fields[jid_col] + "'";
        }
        if (!problem.empty()) {
            table.add_issue(line_no, problem, true);
            continue;
        }
        rec.term = *term;
        rec.justice_id = *jid;
        if (rec.justice_name.empty()) {
            rec.justice_name = std::to_string(rec.justice_id);
        }
        const std::string maj_text = trim(fields[maj_col]);
        if (!maj_text.empty()) {
            const auto code = parse_int(maj_text);
            if (code && (*code == kDissent || *code == kMajority)) {
                rec.majority_code = code;
            } else {
                table.add_issue(line_no, "majority value '" + maj_text + "' is not 1 or 2; treated as missing", false);
            }
        }
        table.add(std::move(rec), line_no);
    }
    if (diag != nullptr) {
        for (const auto& issue : table.issues()) {
            diag->warn("line " + std::to_string(issue.line) + ": " + issue.message);
        }
    }
    return table;
}

VoteTable load_votes(const std::string& path, const ColumnMap& columns, Diagnostics* diag) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open vote file '" + path + "'");
    }
    return parse_votes(in, columns, diag);
}

void write_votes(std::ostream& out, const VoteTable& table, const ColumnMap& columns) {
    const char d = columns.delimiter;
    out << quote_field(columns.case_id, d) << d << quote_field(columns.term, d) << d
        << quote_field(columns.natural_court, d) << d << quote_field(columns.justice_id, d) << d
        << quote_field(columns.justice_name, d) << d << quote_field(columns.majority, d) << '\n';
    for (const auto& r : table.records()) {
        out << quote_field(r.case_id, d) << d << r.term << d << quote_field(r.natural_court_id, d) << d << r.justice_id
            << d << quote_field(r.justice_name, d) << d;
        if (r.majority_code) {
            out << *r.majority_code;
        }
        out << '\n';
    }
}

TermRange parse_term_range(const std::string& text) {
    const std::string t = trim(text);
    std::size_t sep = t.find("..");
    std::size_t skip = 2;
    if (sep == std::string::npos) {
        sep = t.find('-', 1);
        skip = 1;
    }
    const auto first = parse_int(sep == std::string::npos ? t : t.substr(0, sep));
    const auto last = sep == std::string::npos ? first : parse_int(t.substr(sep + skip));
    if (!first || !last || *first > *last) {
        throw ConfigError("invalid term range '" + text + "' (expected A..B)");
    }
    return {*first, *last};
}

std::string describe(const CourtSelector& selector) {
    std::string out;
    if (selector.natural_court_id) {
        out = "court " + *selector.natural_court_id;
    }
    if (selector.terms) {
        if (!out.empty()) {
            out += ", ";
        }
        out += "terms " + std::to_string(selector.terms->first) + ".." + std::to_string(selector.terms->last);
    }
    return out.empty() ? "all cases" : out;
}

std::size_t CourtSlice::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < roster.size(); ++i) {
        if (roster[i].name == name) {
            return i;
        }
    }
    throw DataError("justice '" + name + "' is not on the roster of " + label);
}

std::vector<std::string> CourtSlice::roster_names() const {
    std::vector<std::string> names;
    names.reserve(roster.size());
    for (const auto& j : roster) {
        names.push_back(j.name);
    }
    return names;
}

CourtSlice select_court(const VoteTable& table, const CourtSelector& selector, Diagnostics* diag) {
    std::vector<const CaseVotes*> matched;
    for (const auto& c : table.cases()) {
        if (selector.natural_court_id && c.natural_court_id != *selector.natural_court_id) {
            continue;
        }
        if (selector.terms && !selector.terms->contains(c.term)) {
            continue;
        }
        matched.push_back(&c);
    }
    if (matched.empty()) {
        throw DataError("no cases match " + describe(selector));
    }

    std::set<int> voters;
    for (const auto* c : matched) {
        for (const auto& [jid, code] : c->votes) {
            if (code) {
                voters.insert(jid);
            }
        }
    }
    CourtSlice slice;
    slice.label = selector.natural_court_id ? *selector.natural_court_id : describe(selector);
    if (selector.natural_court_id && selector.terms) {
        slice.label += " " + std::to_string(selector.terms->first) + ".." + std::to_string(selector.terms->last);
    }
    for (int jid : voters) {
        slice.roster.push_back({jid, table.justice_name(jid)});
    }
    std::sort(slice.roster.begin(), slice.roster.end(),
              [](const Justice& a, const Justice& b) { return std::tie(a.name, a.id) < std::tie(b.name, b.id); });
    if (slice.roster.size() != kSeats) {
        std::string names;
        for (const auto& j : slice.roster) {
            names += (names.empty() ? "" : ", ") + j.name;
        }
        throw DataError(describe(selector) + " has " + std::to_string(slice.roster.size()) +
                        " voting justices, expected 9: " + names);
    }

    for (const auto* c : matched) {
        FullCase fc{c->case_id, c->term, {}};
        bool complete = true;
        for (std::size_t i = 0; i < kSeats; ++i) {
            auto it = c->votes.find(slice.roster[i].id);
            if (it == c->votes.end() || !it->second) {
                complete = false;
                break;
            }
            fc.codes[i] = *it->second;
        }
        if (complete) {
            slice.cases.push_back(std::move(fc));
        } else {
            ++slice.excluded_cases;
        }
    }
    if (slice.cases.empty()) {
        throw DataError(describe(selector) + " has no case with all nine votes recorded");
    }
    if (slice.excluded_cases > 0) {
        warn(diag, describe(selector) + ": excluded " + std::to_string(slice.excluded_cases) +
                       " case(s) without all nine votes recorded");
    }
    return slice;
}

CourtSlice restrict_terms(const CourtSlice& slice, TermRange terms) {
    CourtSlice out;
    out.label = slice.label + " " + std::to_string(terms.first) + ".." + std::to_string(terms.last);
    out.roster = slice.roster;
    for (const auto& c : slice.cases) {
        if (terms.contains(c.term)) {
            out.cases.push_back(c);
        }
    }
    if (out.cases.empty()) {
        throw DataError("no cases of " + slice.label + " fall in terms " + std::to_string(terms.first) + ".." +
                        std::to_string(terms.last));
    }
    return out;
}

VoteTable slice_table(const CourtSlice& slice) {
    VoteTable table;
    for (const auto& c : slice.cases) {
        for (std::size_t i = 0; i < kSeats; ++i) {
            table.add(VoteRecord{c.case_id, c.term, slice.label, slice.roster[i].id, slice.roster[i].name, c.codes[i]});
        }
    }
    return table;
}

}  // namespace fivefour
