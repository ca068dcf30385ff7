#include "triclose/projection.hpp"

#include <algorithm>
#include <ostream>

namespace triclose {

void OneModeGraph::add_pair(AuthorId u, AuthorId v) {
    if (u == v) return;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

void OneModeGraph::finalize() {
    nodes_.clear();
    edge_count_ = 0;
    for (AuthorId a = 0; a < adjacency_.size(); ++a) {
        auto& adj = adjacency_[a];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        if (!adj.empty()) {
            nodes_.push_back(a);
            edge_count_ += adj.size();
        }
    }
    edge_count_ /= 2;
}

OneModeGraph project_one_mode(const Corpus& corpus) {
    OneModeGraph g(corpus.authors().size());
    for (const auto& p : corpus.papers()) {
        const auto& au = p.authors;
        for (std::size_t i = 0; i < au.size(); ++i)
            for (std::size_t j = i + 1; j < au.size(); ++j)
                g.add_pair(au[i], au[j]);
    }
    // Isolated authors (no coauthor) still count as nodes of the corpus but
    // carry no 2-paths; they are irrelevant to every metric here, so the
    // node list keeps only authors with >= 1 edge plus we track corpus
    // authors separately where needed.
    g.finalize();
    return g;
}

void export_edge_list(const OneModeGraph& g, const Corpus& corpus, std::ostream& out) {
    std::vector<std::pair<std::string, std::string>> lines;
    for (AuthorId u : g.nodes()) {
        for (AuthorId v : g.neighbors(u)) {
            if (v <= u) continue;
            std::string a = corpus.authors().name(u);
            std::string b = corpus.authors().name(v);
            if (b < a) std::swap(a, b);
            lines.emplace_back(std::move(a), std::move(b));
        }
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) out << a << '\t' << b << '\n';
}

} // namespace triclose
