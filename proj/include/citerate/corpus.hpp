#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citerate/date.hpp"

namespace citerate {

// One bibliographic record, normalized.
//
// Invariants (enforced at parse time):
//  - paper_id non-empty, unique within a corpus
//  - author_ids non-empty, duplicate-free
//  - ref_ids duplicate-free and never contain paper_id
//  - date within [1800-01-01, ingestion date]
struct BibRecord {
    std::string paper_id;
    Date date;
    std::vector<std::string> author_ids;
    std::vector<std::string> ref_ids;
    std::vector<std::string> tags;
    std::string journal;

    bool operator==(const BibRecord&) const = default;
};

struct Diagnostic {
    std::size_t line = 0;       // 1-based line number in the corpus file
    std::string paper_id;       // empty if the id itself was unreadable
    std::string message;
};

struct ParseResult {
    std::vector<BibRecord> records;
    std::vector<Diagnostic> diagnostics;
};

// Reads a JSON-lines corpus. In strict mode the first violation throws
// DataError; otherwise violating lines are skipped and reported. A duplicate
// paper_id is fatal in both modes.
ParseResult parse_corpus(const std::filesystem::path& path, bool strict = false);
ParseResult parse_corpus_stream(std::istream& in, bool strict = false);

std::string serialize_record(const BibRecord& rec);  // one JSON line, no newline
void write_corpus(const std::filesystem::path& path, std::span<const BibRecord> records);

struct FilterConfig {
    std::set<std::string> drop_tags;
    std::set<std::string> require_tags;
    std::optional<std::size_t> max_authors;
    std::optional<std::set<std::string>> journal_allowlist;

    void validate() const;  // throws ConfigError if drop_tags and require_tags overlap
    bool empty() const;
};

struct FilterReport {
    std::size_t input_count = 0;
    std::size_t kept_count = 0;
    std::map<std::string, std::size_t> dropped_by_rule;

    std::size_t total_dropped() const;
};

// Drops a record on the first matching rule, in the fixed order
// drop_tags, require_tags, max_authors, journal_allowlist. Order-preserving.
std::pair<std::vector<BibRecord>, FilterReport> apply_filters(std::span<const BibRecord> records,
                                                              const FilterConfig& config);

struct CorpusSummary {
    std::size_t n_papers = 0;       // |V^p|
    std::size_t n_authors = 0;      // |V^a|, distinct author ids
    std::size_t n_citations = 0;    // |E^pc|, references resolving inside the corpus
    std::size_t n_authorships = 0;  // |E^a|, sum of author-list sizes

    bool operator==(const CorpusSummary&) const = default;
};

CorpusSummary corpus_summary(std::span<const BibRecord> records);

}  // namespace citerate
