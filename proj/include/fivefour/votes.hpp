#pragma once

#include "fivefour/diagnostics.hpp"

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fivefour {

inline constexpr std::size_t kSeats = 9;

// Codes of the source database's per-justice "majority" variable.
inline constexpr int kDissent = 1;
inline constexpr int kMajority = 2;

struct VoteRecord {
    std::string case_id;
    int term = 0;
    std::string natural_court_id;
    int justice_id = 0;
    std::string justice_name;
    std::optional<int> majority_code;
};

struct Justice {
    int id = 0;
    std::string name;

    friend bool operator==(const Justice&, const Justice&) = default;
};

struct CaseVotes {
    std::string case_id;
    int term = 0;
    std::string natural_court_id;
    std::map<int, std::optional<int>> votes;  // justice_id -> majority_code
};

// Header names of the canonical fields. Defaults follow the justice-centered
// release of the Supreme Court Database.
struct ColumnMap {
    std::string case_id = "caseId";
    std::string term = "term";
    std::string natural_court = "naturalCourt";
    std::string justice_id = "justice";
    std::string justice_name = "justiceName";
    std::string majority = "majority";
    char delimiter = ',';

    // Canonical keys accepted by set(): case_id, term, natural_court,
    // justice_id, justice_name, majority, delimiter.
    void set(const std::string& key, const std::string& value);
};

struct ParseIssue {
    std::size_t line = 0;
    std::string message;
};

class VoteTable {
public:
    VoteTable() = default;

    const std::vector<VoteRecord>& records() const { return records_; }
    const std::vector<CaseVotes>& cases() const { return cases_; }
    const std::vector<ParseIssue>& issues() const { return issues_; }
    std::size_t rejected_rows() const { return rejected_rows_; }
    std::size_t duplicate_rows() const { return duplicate_rows_; }

    // Natural-court ids ordered chronologically (by first term, then last term, then id).
    std::vector<std::string> natural_courts() const;
    std::pair<int, int> term_span(const std::string& natural_court_id) const;
    std::string justice_name(int justice_id) const;

    void add(VoteRecord record, std::size_t line = 0);
    void add_issue(std::size_t line, std::string message, bool rejected);

private:
    std::vector<VoteRecord> records_;
    std::vector<CaseVotes> cases_;
    std::map<std::pair<std::string, std::string>, std::size_t> case_index_;
    std::map<int, std::string> names_;
    std::vector<ParseIssue> issues_;
    std::size_t rejected_rows_ = 0;
    std::size_t duplicate_rows_ = 0;
};

// Splits one delimited line honoring double-quoted fields ("" escapes a quote).
std::vector<std::string> split_delimited(const std::string& line, char delimiter);

// Parses a header-bearing delimited stream. Throws ConfigError when a mapped
// column is missing from the header; malformed rows become ParseIssues.
VoteTable parse_votes(std::istream& in, const ColumnMap& columns = {}, Diagnostics* diag = nullptr);
VoteTable load_votes(const std::string& path, const ColumnMap& columns = {}, Diagnostics* diag = nullptr);

// Writes retained records with the canonical header, one row per record.
void write_votes(std::ostream& out, const VoteTable& table, const ColumnMap& columns = {});

struct TermRange {
    int first = 0;
    int last = 0;

    bool contains(int term) const { return first <= term && term <= last; }
};

struct CourtSelector {
    std::optional<std::string> natural_court_id;
    std::optional<TermRange> terms;

    static CourtSelector court(std::string id) { return {std::move(id), std::nullopt}; }
    static CourtSelector term_range(int first, int last) { return {std::nullopt, TermRange{first, last}}; }
};

// Parses "1994..2004", "1994-2004" or a single year.
TermRange parse_term_range(const std::string& text);

struct FullCase {
    std::string case_id;
    int term = 0;
    std::array<int, kSeats> codes{};  // majority_code in roster order
};

struct CourtSlice {
    std::string label;
    std::vector<Justice> roster;  // sorted by justice name
    std::vector<FullCase> cases;
    std::size_t excluded_cases = 0;

    std::size_t index_of(const std::string& name) const;
    std::vector<std::string> roster_names() const;
};

// Keeps only cases in which every roster justice has a recorded majority code.
CourtSlice select_court(const VoteTable& table, const CourtSelector& selector, Diagnostics* diag = nullptr);

// Rebuilds a vote table holding exactly the slice's cases (for re-slicing).
VoteTable slice_table(const CourtSlice& slice);

// Restricts an existing slice to a term range. The roster is kept.
CourtSlice restrict_terms(const CourtSlice& slice, TermRange terms);

std::string describe(const CourtSelector& selector);

}  // namespace fivefour
