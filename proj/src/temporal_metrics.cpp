#include "triclose/temporal_metrics.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>
#include <unordered_map>

#include "triclose/pair_index.hpp"
#include "triclose/parallel.hpp"

namespace triclose {

namespace {

struct PairAccum {
    std::vector<AuthorId> middles;
    bool closed_in_window = false;
};

using PairMap = std::unordered_map<std::uint64_t, PairAccum>;

} // namespace

std::vector<PairObservation> open_pairs(const Corpus& preceding,
                                        const std::set<AuthorId>* active_filter,
                                        Eligibility eligibility,
                                        unsigned threads) {
    const auto& papers = preceding.papers();
    std::vector<AuthorId> middles;
    for (AuthorId a = 0; a < preceding.authors().size(); ++a)
        if (preceding.papers_of(a).size() >= 2) middles.push_back(a);

    const PairIndex pairs(preceding);

    auto chunk_fn = [&](std::size_t lo, std::size_t hi) {
        PairMap local;
        for (std::size_t m = lo; m < hi; ++m) {
            const AuthorId x = middles[m];
            const auto& px = preceding.papers_of(x);
            for (std::size_t i = 0; i < px.size(); ++i) {
                const auto& a = papers[px[i]].authors;
                for (std::size_t j = i + 1; j < px.size(); ++j) {
                    const auto& b = papers[px[j]].authors;
                    for (AuthorId y : a) {
                        if (y == x) continue;
                        if (active_filter && !active_filter->count(y)) continue;
                        for (AuthorId z : b) {
                            if (z == x || z == y) continue;
                            if (active_filter && !active_filter->count(z)) continue;
                            // Strict mode drops any pair with a joint paper;
                            // skip early, every 4-path of such a pair dies.
                            if (eligibility == Eligibility::Strict &&
                                pairs.papers_of(y, z) != nullptr)
                                continue;
                            auto& acc = local[pair_key(y, z)];
                            acc.middles.push_back(x);
                            if (eligibility == Eligibility::Literal &&
                                pairs.closed_by_third(y, z, px[i], px[j]))
                                acc.closed_in_window = true;
                        }
                    }
                }
            }
        }
        return local;
    };
    auto merge_fn = [](PairMap& into, PairMap& part) {
        for (auto& [k, v] : part) {
            auto& acc = into[k];
            acc.middles.insert(acc.middles.end(), v.middles.begin(), v.middles.end());
            acc.closed_in_window |= v.closed_in_window;
        }
    };
    PairMap merged = parallel_chunked<PairMap>(middles.size(), threads, PairMap{},
                                               chunk_fn, merge_fn);

    std::vector<PairObservation> out;
    out.reserve(merged.size());
    for (auto& [k, acc] : merged) {
        if (acc.closed_in_window) continue;
        PairObservation obs;
        obs.a = pair_key_lo(k);
        obs.b = pair_key_hi(k);
        std::sort(acc.middles.begin(), acc.middles.end());
        acc.middles.erase(std::unique(acc.middles.begin(), acc.middles.end()),
                          acc.middles.end());
        obs.middle_authors = std::move(acc.middles);
        out.push_back(std::move(obs));
    }
    std::sort(out.begin(), out.end(), [](const PairObservation& l, const PairObservation& r) {
        return std::tie(l.a, l.b) < std::tie(r.a, r.b);
    });
    return out;
}

TccReport tcc(const Corpus& corpus, const WindowSpec& window,
              bool require_dual_activity, Eligibility eligibility, unsigned threads) {
    window.validate();
    TccReport rep;
    rep.window = window;
    rep.eligibility = eligibility;
    rep.dual_activity_filtered = require_dual_activity;

    const Corpus preceding = slice_window(corpus, window.preceding_from(), window.preceding_to());
    const Corpus target = slice_window(corpus, window.target_year, window.target_year);

    if (!corpus.year_index().empty()) {
        const int cov_lo = corpus.year_index().begin()->first;
        const int cov_hi = corpus.year_index().rbegin()->first;
        if (window.preceding_from() < cov_lo || window.target_year > cov_hi)
            rep.warnings.push_back("window [" + std::to_string(window.preceding_from()) +
                                   ", " + std::to_string(window.target_year) +
                                   "] extends outside corpus years [" +
                                   std::to_string(cov_lo) + ", " + std::to_string(cov_hi) + "]");
    } else {
        rep.warnings.push_back("corpus is empty");
    }

    std::set<AuthorId> active;
    const std::set<AuthorId>* filter = nullptr;
    if (require_dual_activity) {
        const auto in_preceding = author_activity_set(preceding);
        const auto in_target = author_activity_set(target);
        std::set_intersection(in_preceding.begin(), in_preceding.end(),
                              in_target.begin(), in_target.end(),
                              std::inserter(active, active.begin()));
        filter = &active;
    }

    rep.observations = open_pairs(preceding, filter, eligibility, threads);

    const PairIndex target_pairs(target);
    for (auto& obs : rep.observations) {
        if (const auto* closing = target_pairs.papers_of(obs.a, obs.b)) {
            obs.closed = true;
            for (std::uint32_t p : *closing) {
                obs.closing_paper_ids.push_back(target.papers()[p].paper_id);
                if (!obs.involvement) {
                    const auto& byline = target.papers()[p].authors;
                    for (AuthorId m : obs.middle_authors) {
                        if (std::binary_search(byline.begin(), byline.end(), m)) {
                            obs.involvement = true;
                            break;
                        }
                    }
                }
            }
            std::sort(obs.closing_paper_ids.begin(), obs.closing_paper_ids.end());
        }
    }

    rep.eligible_pairs = rep.observations.size();
    for (const auto& obs : rep.observations)
        if (obs.closed) ++rep.closed_pairs;
    rep.defined = rep.eligible_pairs != 0;
    rep.ratio = Rational(rep.closed_pairs, rep.eligible_pairs);
    return rep;
}

std::vector<TccReport> window_sweep(const Corpus& corpus, int target_year,
                                    const std::vector<int>& lengths,
                                    bool require_dual_activity, Eligibility eligibility,
                                    unsigned threads) {
    if (lengths.empty()) throw DataError("window_sweep: no window lengths given");
    std::vector<TccReport> out;
    out.reserve(lengths.size());
    for (int len : lengths)
        out.push_back(tcc(corpus, WindowSpec{target_year, len},
                          require_dual_activity, eligibility, threads));
    return out;
}

Rational involvement_ratio(const TccReport& report) {
    std::uint64_t involved = 0;
    for (const auto& obs : report.observations)
        if (obs.closed && obs.involvement) ++involved;
    return Rational(involved, report.closed_pairs);
}

std::map<std::size_t, SharedCountBucket> closure_by_shared_count(const TccReport& report) {
    std::map<std::size_t, SharedCountBucket> out;
    for (const auto& obs : report.observations) {
        auto& bucket = out[obs.middle_authors.size()];
        ++bucket.eligible;
        if (obs.closed) ++bucket.closed;
    }
    for (auto& [n, bucket] : out) bucket.ratio = Rational(bucket.closed, bucket.eligible);
    return out;
}

OverlapRatios overlap_ratios(const Corpus& corpus, const WindowSpec& window) {
    window.validate();
    const auto in_target =
        author_activity_set(slice_window(corpus, window.target_year, window.target_year));
    const auto in_preceding = author_activity_set(
        slice_window(corpus, window.preceding_from(), window.preceding_to()));
    std::vector<AuthorId> both;
    std::set_intersection(in_target.begin(), in_target.end(),
                          in_preceding.begin(), in_preceding.end(),
                          std::back_inserter(both));
    OverlapRatios r;
    r.target = Rational(both.size(), in_target.size());
    r.preceding = Rational(both.size(), in_preceding.size());
    return r;
}

} // namespace triclose
