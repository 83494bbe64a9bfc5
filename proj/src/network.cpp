#include "citerate/network.hpp"

#include <algorithm>
#include <map>

#include "citerate/errors.hpp"

namespace citerate {

namespace {

std::size_t count_up_to(std::span<const Date> sorted, const TimeCursor& cursor) {
    const auto it = cursor.strictness == Strictness::strictly_before
                        ? std::lower_bound(sorted.begin(), sorted.end(), cursor.instant)
                        : std::upper_bound(sorted.begin(), sorted.end(), cursor.instant);
    return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

TwoLayerNetwork TwoLayerNetwork::build(std::span<const BibRecord> records, BuildReport* report) {
    TwoLayerNetwork net;
    BuildReport rep;

    net.papers_.reserve(records.size());
    for (const auto& rec : records) {
        if (!net.paper_by_id_.emplace(rec.paper_id, net.papers_.size()).second)
            throw DataError("duplicate paper id '" + rec.paper_id + "'");
        net.papers_.push_back({rec.paper_id, rec.date, {}, {}});
    }

    for (std::size_t p = 0; p < records.size(); ++p) {
        for (const auto& aid : records[p].author_ids) {
            auto [it, inserted] = net.author_by_id_.emplace(aid, net.authors_.size());
            if (inserted) net.authors_.push_back({aid, {}, {}});
            net.papers_[p].authors.push_back(it->second);
            net.authors_[it->second].papers.push_back({records[p].date, p});
        }
    }

    for (std::size_t p = 0; p < records.size(); ++p) {
        for (const auto& ref : records[p].ref_ids) {
            const auto it = net.paper_by_id_.find(ref);
            if (it == net.paper_by_id_.end()) {
                ++rep.external_refs;
                continue;
            }
            if (records[p].date < net.papers_[it->second].date) {
                ++rep.anachronistic_citations;
                continue;
            }
            net.papers_[it->second].citing_dates.push_back(records[p].date);
            ++rep.citation_edges;
        }
    }
    for (auto& paper : net.papers_) std::sort(paper.citing_dates.begin(), paper.citing_dates.end());

    // Coauthorship layer: one edge per unordered author pair, all joint dates.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Date>> joint;
    for (std::size_t p = 0; p < records.size(); ++p) {
        const auto& team = net.papers_[p].authors;
        for (std::size_t i = 0; i < team.size(); ++i)
            for (std::size_t j = i + 1; j < team.size(); ++j) {
                const auto key = std::minmax(team[i], team[j]);
                joint[key].push_back(net.papers_[p].date);
            }
    }
    net.coauthorship_edges_.reserve(joint.size());
    for (auto& [key, dates] : joint) {
        std::sort(dates.begin(), dates.end());
        const Date first = dates.front();
        net.authors_[key.first].coauthors.push_back({first, key.second});
        net.authors_[key.second].coauthors.push_back({first, key.first});
        net.coauthorship_edges_.push_back({key.first, key.second, std::move(dates)});
    }

    for (auto& author : net.authors_) {
        std::sort(author.papers.begin(), author.papers.end(), [](const PaperLink& x, const PaperLink& y) {
            return std::tie(x.date, x.paper) < std::tie(y.date, y.paper);
        });
        std::sort(author.coauthors.begin(), author.coauthors.end(),
                  [](const CoauthorLink& x, const CoauthorLink& y) {
                      return std::tie(x.first_joint, x.author) < std::tie(y.first_joint, y.author);
                  });
    }

    net.all_dates_.reserve(net.papers_.size());
    for (const auto& paper : net.papers_) net.all_dates_.push_back(paper.date);
    std::sort(net.all_dates_.begin(), net.all_dates_.end());

    rep.n_papers = net.papers_.size();
    rep.n_authors = net.authors_.size();
    rep.authorship_edges = net.authorship_edge_count();
    rep.coauthorship_edges = net.coauthorship_edges_.size();
    if (report) *report = rep;
    return net;
}

std::size_t TwoLayerNetwork::paper_index(std::string_view id) const {
    const auto it = paper_by_id_.find(std::string(id));
    if (it == paper_by_id_.end()) throw DataError("unknown paper id '" + std::string(id) + "'");
    return it->second;
}

std::size_t TwoLayerNetwork::author_index(std::string_view id) const {
    const auto it = author_by_id_.find(std::string(id));
    if (it == author_by_id_.end()) throw DataError("unknown author id '" + std::string(id) + "'");
    return it->second;
}

std::size_t TwoLayerNetwork::in_degree_at(std::size_t paper, const TimeCursor& cursor) const {
    return count_up_to(papers_[paper].citing_dates, cursor);
}

std::size_t TwoLayerNetwork::author_degree_at(std::size_t author, const TimeCursor& cursor) const {
    const auto& links = authors_[author].coauthors;
    auto key = [](const CoauthorLink& l) { return l.first_joint; };
    if (cursor.strictness == Strictness::strictly_before) {
        const auto it = std::lower_bound(links.begin(), links.end(), cursor.instant,
                                         [&](const CoauthorLink& l, const Date& d) { return key(l) < d; });
        return static_cast<std::size_t>(it - links.begin());
    }
    const auto it = std::upper_bound(links.begin(), links.end(), cursor.instant,
                                     [&](const Date& d, const CoauthorLink& l) { return d < key(l); });
    return static_cast<std::size_t>(it - links.begin());
}

std::size_t TwoLayerNetwork::interlayer_degree_at(std::size_t author, const TimeCursor& cursor) const {
    const auto& links = authors_[author].papers;
    if (cursor.strictness == Strictness::strictly_before) {
        const auto it = std::lower_bound(links.begin(), links.end(), cursor.instant,
                                         [](const PaperLink& l, const Date& d) { return l.date < d; });
        return static_cast<std::size_t>(it - links.begin());
    }
    const auto it = std::upper_bound(links.begin(), links.end(), cursor.instant,
                                     [](const Date& d, const PaperLink& l) { return d < l.date; });
    return static_cast<std::size_t>(it - links.begin());
}

std::size_t TwoLayerNetwork::in_degree_at(std::string_view pid, const TimeCursor& cursor) const {
    return in_degree_at(paper_index(pid), cursor);
}
std::size_t TwoLayerNetwork::author_degree_at(std::string_view aid, const TimeCursor& cursor) const {
    return author_degree_at(author_index(aid), cursor);
}
std::size_t TwoLayerNetwork::interlayer_degree_at(std::string_view aid, const TimeCursor& cursor) const {
    return interlayer_degree_at(author_index(aid), cursor);
}

std::size_t TwoLayerNetwork::papers_published_in(const Date& after, const Date& through) const {
    const auto lo = std::upper_bound(all_dates_.begin(), all_dates_.end(), after);
    const auto hi = std::upper_bound(all_dates_.begin(), all_dates_.end(), through);
    return static_cast<std::size_t>(hi - lo);
}

std::size_t TwoLayerNetwork::citation_edge_count() const {
    std::size_t n = 0;
    for (const auto& paper : papers_) n += paper.citing_dates.size();
    return n;
}

std::size_t TwoLayerNetwork::authorship_edge_count() const {
    std::size_t n = 0;
    for (const auto& paper : papers_) n += paper.authors.size();
    return n;
}

}  // namespace citerate
