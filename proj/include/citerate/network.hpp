#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "citerate/corpus.hpp"
#include "citerate/date.hpp"

namespace citerate {

enum class Strictness { strictly_before, up_to_including };

struct TimeCursor {
    Date instant;
    Strictness strictness = Strictness::strictly_before;
};

inline TimeCursor before(const Date& d) { return {d, Strictness::strictly_before}; }
inline TimeCursor through(const Date& d) { return {d, Strictness::up_to_including}; }

struct BuildReport {
    std::size_t n_papers = 0;
    std::size_t n_authors = 0;
    std::size_t citation_edges = 0;
    std::size_t authorship_edges = 0;
    std::size_t coauthorship_edges = 0;
    std::size_t anachronistic_citations = 0;  // dropped: citing paper predates cited
    std::size_t external_refs = 0;            // dropped: target not in the corpus
};

// Immutable two-layer temporal network: a directed citation layer over
// papers, an undirected coauthorship layer over authors, and interlayer
// authorship links. Every edge carries the date of the paper that created
// it; all queries are read-only and time-parametrized.
class TwoLayerNetwork {
public:
    struct CoauthorLink {
        Date first_joint;  // date of the earliest joint paper
        std::size_t author;
    };
    struct PaperLink {
        Date date;
        std::size_t paper;
    };
    struct CoauthorshipEdge {
        std::size_t a, b;         // a < b
        std::vector<Date> dates;  // all joint-paper dates, ascending
    };

    static TwoLayerNetwork build(std::span<const BibRecord> records, BuildReport* report = nullptr);

    std::size_t paper_count() const { return papers_.size(); }
    std::size_t author_count() const { return authors_.size(); }

    std::size_t paper_index(std::string_view id) const;   // throws DataError if unknown
    std::size_t author_index(std::string_view id) const;  // throws DataError if unknown
    const std::string& paper_id(std::size_t p) const { return papers_[p].id; }
    const std::string& author_id(std::size_t a) const { return authors_[a].id; }
    const Date& paper_date(std::size_t p) const { return papers_[p].date; }
    std::span<const std::size_t> paper_authors(std::size_t p) const { return papers_[p].authors; }

    // k_i^in(delta): papers citing i up to the cursor.
    std::size_t in_degree_at(std::size_t paper, const TimeCursor& cursor) const;
    // k_n(delta): distinct coauthors accumulated before the cursor.
    std::size_t author_degree_at(std::size_t author, const TimeCursor& cursor) const;
    // k~_n(delta): distinct papers written before the cursor.
    std::size_t interlayer_degree_at(std::size_t author, const TimeCursor& cursor) const;

    std::size_t in_degree_at(std::string_view paper_id, const TimeCursor& cursor) const;
    std::size_t author_degree_at(std::string_view author_id, const TimeCursor& cursor) const;
    std::size_t interlayer_degree_at(std::string_view author_id, const TimeCursor& cursor) const;

    std::span<const Date> citing_dates(std::size_t paper) const { return papers_[paper].citing_dates; }
    std::span<const CoauthorLink> coauthor_links(std::size_t author) const { return authors_[author].coauthors; }
    std::span<const PaperLink> papers_of(std::size_t author) const { return authors_[author].papers; }
    const std::vector<CoauthorshipEdge>& coauthorship_edges() const { return coauthorship_edges_; }

    // All paper dates, ascending; the clock of the publication-count timescale.
    std::span<const Date> paper_dates_sorted() const { return all_dates_; }
    std::size_t papers_published_in(const Date& after, const Date& through) const;

    const Date& min_date() const { return all_dates_.front(); }
    const Date& max_date() const { return all_dates_.back(); }

    std::size_t citation_edge_count() const;
    std::size_t authorship_edge_count() const;

private:
    struct PaperNode {
        std::string id;
        Date date;
        std::vector<std::size_t> authors;
        std::vector<Date> citing_dates;  // ascending
    };
    struct AuthorNode {
        std::string id;
        std::vector<PaperLink> papers;       // ascending by (date, paper)
        std::vector<CoauthorLink> coauthors; // ascending by (first_joint, author)
    };

    std::vector<PaperNode> papers_;
    std::vector<AuthorNode> authors_;
    std::vector<CoauthorshipEdge> coauthorship_edges_;
    std::vector<Date> all_dates_;
    std::unordered_map<std::string, std::size_t> paper_by_id_;
    std::unordered_map<std::string, std::size_t> author_by_id_;
};

}  // namespace citerate
