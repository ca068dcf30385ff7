#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "triclose/corpus.hpp"
#include "triclose/projection.hpp"
#include "triclose/static_metrics.hpp"
#include "triclose/temporal_metrics.hpp"

namespace triclose::oracle {

// Brute-force reference implementations. They share no counting code with
// the fast paths and refuse inputs above small caps.

struct TwoPathCounts {
    std::uint64_t total = 0;
    std::uint64_t closed = 0;
};

TwoPathCounts brute_two_paths(const OneModeGraph& g, std::size_t node_cap = 64);

std::vector<std::pair<FourPath, bool>> brute_four_paths(const Corpus& corpus,
                                                        std::size_t paper_cap = 32);

TccReport brute_tcc(const Corpus& corpus, const WindowSpec& window,
                    bool require_dual_activity, Eligibility eligibility,
                    std::size_t paper_cap = 32);

} // namespace triclose::oracle
