#include "triclose/static_metrics.hpp"

#include "triclose/kernels.hpp"
#include "triclose/pair_index.hpp"
#include "triclose/parallel.hpp"

namespace triclose {

std::uint64_t count_two_paths(const OneModeGraph& g, unsigned threads) {
    const auto& nodes = g.nodes();
    return parallel_sum(nodes.size(), threads, [&](std::size_t lo, std::size_t hi) {
        std::uint64_t sum = 0;
        for (std::size_t i = lo; i < hi; ++i)
            sum = checked_add(sum, choose2(g.neighbors(nodes[i]).size()));
        return sum;
    });
}

std::uint64_t count_closed_two_paths(const OneModeGraph& g, unsigned threads) {
    // Sum over undirected edges {u,v} of |N(u) cap N(v)|: each triangle has
    // three edges, so this equals the closed centered-triple count directly.
    const auto& nodes = g.nodes();
    return parallel_sum(nodes.size(), threads, [&](std::size_t lo, std::size_t hi) {
        std::uint64_t sum = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const AuthorId u = nodes[i];
            const auto& nu = g.neighbors(u);
            for (AuthorId v : nu) {
                if (v <= u) continue;
                sum = checked_add(sum, kernels::intersect_count(nu, g.neighbors(v)));
            }
        }
        return sum;
    });
}

MetricReport ncc(const OneModeGraph& g, unsigned threads) {
    return MetricReport::make("NCC", count_closed_two_paths(g, threads),
                              count_two_paths(g, threads));
}

namespace {

// Authors incident to >= 2 papers; only these can be 4-path middles.
std::vector<AuthorId> middle_candidates(const Corpus& corpus) {
    std::vector<AuthorId> out;
    for (AuthorId a = 0; a < corpus.authors().size(); ++a)
        if (corpus.papers_of(a).size() >= 2) out.push_back(a);
    return out;
}

} // namespace

std::uint64_t count_four_paths(const Corpus& corpus, unsigned threads) {
    const auto middles = middle_candidates(corpus);
    const auto& papers = corpus.papers();
    return parallel_sum(middles.size(), threads, [&](std::size_t lo, std::size_t hi) {
        std::uint64_t sum = 0;
        for (std::size_t m = lo; m < hi; ++m) {
            const AuthorId x = middles[m];
            const auto& px = corpus.papers_of(x);
            for (std::size_t i = 0; i < px.size(); ++i) {
                const auto& a = papers[px[i]].authors;
                for (std::size_t j = i + 1; j < px.size(); ++j) {
                    const auto& b = papers[px[j]].authors;
                    // Endpoint choices (y in A\{x}, z in B\{x}, y != z):
                    // (|A|-1)(|B|-1) minus the y == z cases, which are
                    // exactly the members of A cap B other than x.
                    const std::uint64_t all =
                        checked_mul(a.size() - 1, b.size() - 1);
                    const std::uint64_t shared =
                        kernels::intersect_count(a, b) - 1; // x is always shared
                    sum = checked_add(sum, all - shared);
                }
            }
        }
        return sum;
    });
}

std::uint64_t count_closed_four_paths(const Corpus& corpus, unsigned threads) {
    const auto middles = middle_candidates(corpus);
    const auto& papers = corpus.papers();
    const PairIndex pairs(corpus);
    return parallel_sum(middles.size(), threads, [&](std::size_t lo, std::size_t hi) {
        std::uint64_t sum = 0;
        for (std::size_t m = lo; m < hi; ++m) {
            const AuthorId x = middles[m];
            const auto& px = corpus.papers_of(x);
            for (std::size_t i = 0; i < px.size(); ++i) {
                const auto& a = papers[px[i]].authors;
                for (std::size_t j = i + 1; j < px.size(); ++j) {
                    const auto& b = papers[px[j]].authors;
                    for (AuthorId y : a) {
                        if (y == x) continue;
                        for (AuthorId z : b) {
                            if (z == x || z == y) continue;
                            if (pairs.closed_by_third(y, z, px[i], px[j]))
                                sum = checked_add(sum, 1);
                        }
                    }
                }
            }
        }
        return sum;
    });
}

MetricReport occ(const Corpus& corpus, unsigned threads) {
    return MetricReport::make("OCC", count_closed_four_paths(corpus, threads),
                              count_four_paths(corpus, threads));
}

} // namespace triclose
