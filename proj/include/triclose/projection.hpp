#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "triclose/corpus.hpp"

namespace triclose {

// Simple undirected one-mode coauthorship graph. Repeated collaboration
// collapses to a single edge; no self-loops.
class OneModeGraph {
public:
    explicit OneModeGraph(std::size_t author_capacity)
        : adjacency_(author_capacity) {}

    const std::vector<AuthorId>& neighbors(AuthorId a) const { return adjacency_[a]; }
    const std::vector<AuthorId>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::uint64_t edge_count() const { return edge_count_; }
    std::size_t capacity() const { return adjacency_.size(); }

    // Build-time only; finalize() sorts and dedupes.
    void add_pair(AuthorId u, AuthorId v);
    void finalize();

private:
    std::vector<std::vector<AuthorId>> adjacency_;
    std::vector<AuthorId> nodes_;
    std::uint64_t edge_count_ = 0;
};

OneModeGraph project_one_mode(const Corpus& corpus);

// `author1 <TAB> author2` per line, each pair and the line list
// lexicographically ordered by author name.
void export_edge_list(const OneModeGraph& g, const Corpus& corpus, std::ostream& out);

} // namespace triclose
