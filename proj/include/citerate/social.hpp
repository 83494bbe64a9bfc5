#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citerate/corpus.hpp"
#include "citerate/network.hpp"

namespace citerate {

// Pre-publication social metrics of one paper. All quantities are taken
// strictly before the paper's own date, so the paper never counts itself.
struct PaperSocialProfile {
    std::string paper_id;
    Date delta_i;
    std::size_t n_authors = 0;
    std::size_t s_nc = 0;           // distinct prior coauthors of the author team
    std::size_t correction_nc = 0;  // sum of author degrees minus s_nc
    std::size_t s_np = 0;           // distinct prior papers of the author team
    std::size_t correction_np = 0;  // sum of interlayer degrees minus s_np
};

struct CountWithCorrection {
    std::size_t value = 0;
    std::size_t correction = 0;
};

// s^NC: persons who coauthored at least one paper with any author of `paper`
// strictly before its date. The correction de-duplicates persons shared
// between several of the paper's authors.
CountWithCorrection social_nc(const TwoLayerNetwork& net, std::size_t paper);

// s^NP: papers written by at least one author of `paper` strictly before its
// date, de-duplicated across the author team the same way.
CountWithCorrection social_np(const TwoLayerNetwork& net, std::size_t paper);

PaperSocialProfile social_profile(const TwoLayerNetwork& net, std::size_t paper);
std::vector<PaperSocialProfile> social_profiles(const TwoLayerNetwork& net);

// Brute-force set-union evaluations straight off the raw records, with no
// incremental structures. Reference implementations for testing only.
std::size_t oracle_social_nc(std::span<const BibRecord> records, std::string_view paper_id);
std::size_t oracle_social_np(std::span<const BibRecord> records, std::string_view paper_id);

}  // namespace citerate
