#include "triclose/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace triclose::oracle {

namespace {

bool contains(const std::vector<AuthorId>& byline, AuthorId a) {
    return std::find(byline.begin(), byline.end(), a) != byline.end();
}

bool edge(const OneModeGraph& g, AuthorId u, AuthorId v) {
    const auto& n = g.neighbors(u);
    return std::find(n.begin(), n.end(), v) != n.end();
}

} // namespace

TwoPathCounts brute_two_paths(const OneModeGraph& g, std::size_t node_cap) {
    if (g.node_count() > node_cap)
        throw DataError("oracle: graph exceeds node cap");
    TwoPathCounts out;
    for (AuthorId center : g.nodes()) {
        const auto& n = g.neighbors(center);
        for (std::size_t i = 0; i < n.size(); ++i) {
            for (std::size_t j = i + 1; j < n.size(); ++j) {
                ++out.total;
                if (edge(g, n[i], n[j])) ++out.closed;
            }
        }
    }
    return out;
}

std::vector<std::pair<FourPath, bool>> brute_four_paths(const Corpus& corpus,
                                                        std::size_t paper_cap) {
    const auto& papers = corpus.papers();
    if (papers.size() > paper_cap)
        throw DataError("oracle: corpus exceeds paper cap");

    // Enumerate every ordered (A, B, X, Y, Z) and deduplicate unordered
    // geometric paths by their canonical (leg, leg, middle) key.
    using Leg = std::pair<std::uint32_t, AuthorId>; // (paper, endpoint)
    std::set<std::tuple<Leg, Leg, AuthorId>> seen;
    std::vector<std::pair<FourPath, bool>> out;
    for (std::uint32_t pa = 0; pa < papers.size(); ++pa) {
        for (std::uint32_t pb = 0; pb < papers.size(); ++pb) {
            if (pa == pb) continue;
            for (AuthorId x : papers[pa].authors) {
                if (!contains(papers[pb].authors, x)) continue;
                for (AuthorId y : papers[pa].authors) {
                    if (y == x) continue;
                    for (AuthorId z : papers[pb].authors) {
                        if (z == x || z == y) continue;
                        Leg l1{pa, y}, l2{pb, z};
                        if (l2 < l1) std::swap(l1, l2);
                        if (!seen.insert({l1, l2, x}).second) continue;
                        bool closed = false;
                        for (std::uint32_t pc = 0; pc < papers.size() && !closed; ++pc) {
                            if (pc == pa || pc == pb) continue;
                            closed = contains(papers[pc].authors, y) &&
                                     contains(papers[pc].authors, z);
                        }
                        FourPath fp;
                        fp.endpoint_a = std::min(y, z);
                        fp.endpoint_b = std::max(y, z);
                        fp.middle = x;
                        fp.paper_a = std::min(pa, pb);
                        fp.paper_b = std::max(pa, pb);
                        out.emplace_back(fp, closed);
                    }
                }
            }
        }
    }
    return out;
}

TccReport brute_tcc(const Corpus& corpus, const WindowSpec& window,
                    bool require_dual_activity, Eligibility eligibility,
                    std::size_t paper_cap) {
    window.validate();
    if (corpus.paper_count() > paper_cap)
        throw DataError("oracle: corpus exceeds paper cap");

    std::vector<const PaperRecord*> preceding, target;
    for (const auto& p : corpus.papers()) {
        if (p.year >= window.preceding_from() && p.year <= window.preceding_to())
            preceding.push_back(&p);
        else if (p.year == window.target_year)
            target.push_back(&p);
    }

    std::set<AuthorId> preceding_authors, target_authors, all_authors;
    for (const auto* p : preceding)
        preceding_authors.insert(p->authors.begin(), p->authors.end());
    for (const auto* p : target)
        target_authors.insert(p->authors.begin(), p->authors.end());
    all_authors = preceding_authors;

    auto active = [&](AuthorId a) {
        if (!require_dual_activity) return true;
        return preceding_authors.count(a) != 0 && target_authors.count(a) != 0;
    };
    auto joint_paper = [](const std::vector<const PaperRecord*>& set, AuthorId a, AuthorId b,
                          const PaperRecord* skip1 = nullptr, const PaperRecord* skip2 = nullptr) {
        for (const auto* p : set) {
            if (p == skip1 || p == skip2) continue;
            if (contains(p->authors, a) && contains(p->authors, b)) return true;
        }
        return false;
    };

    TccReport rep;
    rep.window = window;
    rep.eligibility = eligibility;
    rep.dual_activity_filtered = require_dual_activity;

    for (auto ita = all_authors.begin(); ita != all_authors.end(); ++ita) {
        for (auto itb = std::next(ita); itb != all_authors.end(); ++itb) {
            const AuthorId y = *ita, z = *itb;
            if (!active(y) || !active(z)) continue;
            // Direct definition: scan all (A, B, X) triples in the window.
            bool embedded = false, any_closed_in_window = false;
            std::set<AuthorId> middles;
            for (const auto* a : preceding) {
                for (const auto* b : preceding) {
                    if (a == b) continue;
                    if (!contains(a->authors, y) || !contains(b->authors, z)) continue;
                    for (AuthorId x : a->authors) {
                        if (x == y || x == z) continue;
                        if (!contains(b->authors, x)) continue;
                        embedded = true;
                        middles.insert(x);
                        if (joint_paper(preceding, y, z, a, b))
                            any_closed_in_window = true;
                    }
                }
            }
            if (!embedded) continue;
            if (eligibility == Eligibility::Strict) {
                if (joint_paper(preceding, y, z)) continue;
            } else {
                if (any_closed_in_window) continue;
            }
            PairObservation obs;
            obs.a = y;
            obs.b = z;
            obs.middle_authors.assign(middles.begin(), middles.end());
            for (const auto* p : target) {
                if (contains(p->authors, y) && contains(p->authors, z)) {
                    obs.closed = true;
                    obs.closing_paper_ids.push_back(p->paper_id);
                    for (AuthorId m : obs.middle_authors)
                        if (contains(p->authors, m)) obs.involvement = true;
                }
            }
            std::sort(obs.closing_paper_ids.begin(), obs.closing_paper_ids.end());
            rep.observations.push_back(std::move(obs));
        }
    }

    rep.eligible_pairs = rep.observations.size();
    for (const auto& obs : rep.observations)
        if (obs.closed) ++rep.closed_pairs;
    rep.defined = rep.eligible_pairs != 0;
    rep.ratio = Rational(rep.closed_pairs, rep.eligible_pairs);
    return rep;
}

} // namespace triclose::oracle
