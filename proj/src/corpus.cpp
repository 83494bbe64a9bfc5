#include "citerate/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "citerate/errors.hpp"

namespace citerate {

namespace {

const Date kEarliestDate(1800, 1, 1);

// Returns an error message, or empty if the record is well-formed.
// Duplicate-id checks happen at the corpus level, not here.
std::string check_record(const BibRecord& rec, const Date& ingestion_date) {
    if (rec.paper_id.empty()) return "empty paper id";
    if (rec.author_ids.empty()) return "empty author list";
    {
        std::unordered_set<std::string_view> seen;
        for (const auto& a : rec.author_ids)
            if (!seen.insert(a).second) return "duplicate author id '" + a + "'";
    }
    {
        std::unordered_set<std::string_view> seen;
        for (const auto& r : rec.ref_ids) {
            if (r == rec.paper_id) return "self-citation";
            if (!seen.insert(r).second) return "duplicate reference '" + r + "'";
        }
    }
    if (rec.date < kEarliestDate) return "date before 1800-01-01";
    if (rec.date > ingestion_date) return "date in the future";
    return {};
}

std::string parse_line(const std::string& line, BibRecord& out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        return std::string("not valid JSON: ") + e.what();
    }
    if (!j.is_object()) return "line is not a JSON object";

    auto str_field = [&](const char* key, std::string& dst) -> std::string {
        if (!j.contains(key) || !j[key].is_string()) return std::string("missing string field '") + key + "'";
        dst = j[key].get<std::string>();
        return {};
    };
    auto str_array = [&](const char* key, std::vector<std::string>& dst) -> std::string {
        if (!j.contains(key) || !j[key].is_array()) return std::string("missing array field '") + key + "'";
        dst.clear();
        for (const auto& el : j[key]) {
            if (!el.is_string()) return std::string("non-string entry in '") + key + "'";
            dst.push_back(el.get<std::string>());
        }
        return {};
    };

    std::string err, date_text;
    if (!(err = str_field("id", out.paper_id)).empty()) return err;
    if (!(err = str_field("date", date_text)).empty()) return err;
    if (!(err = str_array("authors", out.author_ids)).empty()) return err;
    if (!(err = str_array("refs", out.ref_ids)).empty()) return err;
    if (!(err = str_array("tags", out.tags)).empty()) return err;
    if (!(err = str_field("journal", out.journal)).empty()) return err;

    const auto date = Date::parse(date_text);
    if (!date) return "unparseable date '" + date_text + "'";
    out.date = *date;
    return {};
}

}  // namespace

ParseResult parse_corpus_stream(std::istream& in, bool strict) {
    ParseResult result;
    const Date ingestion_date = Date::today_utc();
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        BibRecord rec;
        std::string err = parse_line(line, rec);
        if (err.empty()) err = check_record(rec, ingestion_date);
        if (err.empty() && !seen_ids.insert(rec.paper_id).second) {
            // Duplicate ids poison every downstream join; never recoverable.
            throw DataError("line " + std::to_string(line_no) + ": duplicate paper id '" + rec.paper_id + "'");
        }
        if (!err.empty()) {
            if (strict) throw DataError("line " + std::to_string(line_no) + ": " + err);
            result.diagnostics.push_back({line_no, rec.paper_id, err});
            continue;
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

ParseResult parse_corpus(const std::filesystem::path& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open corpus file: " + path.string());
    return parse_corpus_stream(in, strict);
}

std::string serialize_record(const BibRecord& rec) {
    nlohmann::ordered_json j;
    j["id"] = rec.paper_id;
    j["date"] = rec.date.to_string();
    j["authors"] = rec.author_ids;
    j["refs"] = rec.ref_ids;
    j["tags"] = rec.tags;
    j["journal"] = rec.journal;
    return j.dump();
}

void write_corpus(const std::filesystem::path& path, std::span<const BibRecord> records) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path.string());
    for (const auto& rec : records) out << serialize_record(rec) << '\n';
}

void FilterConfig::validate() const {
    for (const auto& t : drop_tags)
        if (require_tags.count(t))
            throw ConfigError("tag '" + t + "' appears in both drop_tags and require_tags");
}

bool FilterConfig::empty() const {
    return drop_tags.empty() && require_tags.empty() && !max_authors && !journal_allowlist;
}

std::size_t FilterReport::total_dropped() const {
    std::size_t total = 0;
    for (const auto& [rule, n] : dropped_by_rule) total += n;
    return total;
}

std::pair<std::vector<BibRecord>, FilterReport> apply_filters(std::span<const BibRecord> records,
                                                              const FilterConfig& config) {
    config.validate();
    FilterReport report;
    report.input_count = records.size();
    report.dropped_by_rule = {{"drop_tags", 0}, {"require_tags", 0}, {"max_authors", 0}, {"journal_allowlist", 0}};

    std::vector<BibRecord> kept;
    kept.reserve(records.size());
    for (const auto& rec : records) {
        const char* rule = nullptr;
        if (std::any_of(rec.tags.begin(), rec.tags.end(),
                        [&](const std::string& t) { return config.drop_tags.count(t) > 0; })) {
            rule = "drop_tags";
        } else if (!config.require_tags.empty() &&
                   std::none_of(rec.tags.begin(), rec.tags.end(),
                                [&](const std::string& t) { return config.require_tags.count(t) > 0; })) {
            rule = "require_tags";
        } else if (config.max_authors && rec.author_ids.size() > *config.max_authors) {
            rule = "max_authors";
        } else if (config.journal_allowlist && !config.journal_allowlist->count(rec.journal)) {
            rule = "journal_allowlist";
        }
        if (rule) {
            ++report.dropped_by_rule[rule];
        } else {
            kept.push_back(rec);
        }
    }
    report.kept_count = kept.size();
    return {std::move(kept), report};
}

CorpusSummary corpus_summary(std::span<const BibRecord> records) {
    CorpusSummary s;
    s.n_papers = records.size();
    std::unordered_set<std::string_view> ids, authors;
    ids.reserve(records.size() * 2);
    for (const auto& rec : records) ids.insert(rec.paper_id);
    for (const auto& rec : records) {
        s.n_authorships += rec.author_ids.size();
        for (const auto& a : rec.author_ids) authors.insert(a);
        for (const auto& r : rec.ref_ids)
            if (ids.count(r)) ++s.n_citations;
    }
    s.n_authors = authors.size();
    return s;
}

}  // namespace citerate
