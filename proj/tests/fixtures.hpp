#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "triclose/corpus.hpp"

namespace fixtures {

using triclose::Corpus;

struct Rec {
    std::string id;
    int year;
    std::vector<std::string> authors;
};

inline Corpus make_corpus(const std::vector<Rec>& recs) {
    auto table = std::make_shared<triclose::AuthorTable>();
    std::vector<triclose::PaperRecord> papers;
    for (const auto& r : recs) {
        triclose::PaperRecord p;
        p.paper_id = r.id;
        p.year = r.year;
        for (const auto& a : r.authors) p.authors.push_back(table->intern(a));
        std::sort(p.authors.begin(), p.authors.end());
        p.authors.erase(std::unique(p.authors.begin(), p.authors.end()), p.authors.end());
        papers.push_back(std::move(p));
    }
    return Corpus(std::move(table), std::move(papers));
}

// Five papers: A,B: X+Y; C: X+Z; D: W+Z; E: Y+Z. A-D in the preceding
// window, E in the target year 2009.
inline Corpus five_paper() {
    return make_corpus({{"A", 2005, {"X", "Y"}},
                        {"B", 2006, {"X", "Y"}},
                        {"C", 2007, {"X", "Z"}},
                        {"D", 2008, {"W", "Z"}},
                        {"E", 2009, {"Y", "Z"}}});
}

inline Corpus true_triangle() {
    return make_corpus({{"A", 2005, {"X", "Y"}},
                        {"B", 2005, {"X", "Z"}},
                        {"C", 2005, {"Y", "Z"}}});
}

// Single 3-author paper: a projection artifact for NCC.
inline Corpus single_triple_paper() {
    return make_corpus({{"D", 2005, {"X", "Y", "Z"}}});
}

inline Corpus two_middles() {
    return make_corpus({{"A", 2005, {"W", "X", "Y"}},
                        {"B", 2006, {"W", "X", "Z"}},
                        {"C", 2007, {"X", "Y"}}});
}

inline Corpus closure_no_shared_middle() {
    return make_corpus({{"A", 2005, {"X", "Y"}},
                        {"B", 2006, {"X", "Z"}},
                        {"C", 2009, {"Y", "Z"}}});
}

inline Corpus closure_shared_middle() {
    return make_corpus({{"A", 2005, {"X", "Y"}},
                        {"B", 2006, {"X", "Z"}},
                        {"D", 2009, {"X", "Y", "Z"}}});
}

struct RandomCorpusParams {
    std::size_t max_papers = 8;
    std::size_t max_authors = 10;
    std::size_t min_byline = 2;
    std::size_t max_byline = 4;
    int min_year = 2000;
    int max_year = 2002;
};

inline Corpus random_corpus(std::uint64_t seed, const RandomCorpusParams& p = {}) {
    std::mt19937_64 rng(seed);
    auto below = [&](std::size_t n) { return rng() % n; };
    const std::size_t n_papers = 1 + below(p.max_papers);
    const std::size_t n_authors =
        std::max<std::size_t>(p.max_byline, 2 + below(p.max_authors - 1));
    std::vector<Rec> recs;
    for (std::size_t i = 0; i < n_papers; ++i) {
        Rec r;
        r.id = "p" + std::to_string(i);
        r.year = p.min_year + static_cast<int>(below(p.max_year - p.min_year + 1));
        const std::size_t k = p.min_byline + below(p.max_byline - p.min_byline + 1);
        while (r.authors.size() < k) {
            std::string a = "a" + std::to_string(below(n_authors));
            if (std::find(r.authors.begin(), r.authors.end(), a) == r.authors.end())
                r.authors.push_back(a);
        }
        recs.push_back(std::move(r));
    }
    return make_corpus(recs);
}

} // namespace fixtures
