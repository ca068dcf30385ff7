#include "triclose/experiments.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <optional>
#include <random>
#include <unordered_set>

#include "triclose/pair_index.hpp"
#include "triclose/projection.hpp"
#include "triclose/static_metrics.hpp"

namespace triclose {

std::vector<TimeseriesRow> run_timeseries(const Corpus& corpus, int start_year,
                                          int end_year, const TimeseriesOptions& opts) {
    if (start_year > end_year) throw DataError("run_timeseries: inverted year range");
    std::vector<TimeseriesRow> rows;
    rows.reserve(static_cast<std::size_t>(end_year - start_year + 1));

    int cov_lo = 0, cov_hi = 0;
    const bool has_papers = !corpus.year_index().empty();
    if (has_papers) {
        cov_lo = corpus.year_index().begin()->first;
        cov_hi = corpus.year_index().rbegin()->first;
    }

    for (int y = start_year; y <= end_year; ++y) {
        TimeseriesRow row;
        row.year = y;
        if (!has_papers || y < cov_lo || y - opts.window_len + 1 > cov_hi)
            row.warnings.push_back("year " + std::to_string(y) +
                                   " outside corpus coverage");

        const Corpus window = slice_window(corpus, y - opts.window_len + 1, y);
        const OneModeGraph g = project_one_mode(window);
        const MetricReport n = ncc(g, opts.threads);
        const MetricReport o = occ(window, opts.threads);
        if (n.defined) row.ncc = n.ratio;
        if (o.defined) row.occ = o.ratio;

        for (int len : opts.sweep_lengths) {
            const TccReport t = tcc(corpus, WindowSpec{y, len},
                                    opts.require_dual_activity, opts.eligibility,
                                    opts.threads);
            row.tcc_by_window[len] = t.defined ? t.ratio : Rational();
            if (len == opts.window_len && t.closed_pairs > 0)
                row.involvement = involvement_ratio(t);
        }
        if (!row.tcc_by_window.count(opts.window_len)) {
            const TccReport t = tcc(corpus, WindowSpec{y, opts.window_len},
                                    opts.require_dual_activity, opts.eligibility,
                                    opts.threads);
            if (t.closed_pairs > 0) row.involvement = involvement_ratio(t);
        }

        const OverlapRatios ov = overlap_ratios(corpus, WindowSpec{y, opts.window_len});
        row.overlap_target = ov.target;
        row.overlap_preceding = ov.preceding;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string csv_cell(const Rational& r) {
    if (!r.defined()) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", r.to_double());
    return buf;
}

} // namespace

std::string timeseries_to_csv(const std::vector<TimeseriesRow>& rows,
                              const TimeseriesOptions& opts) {
    std::string out = "year,ncc,occ";
    for (int len : opts.sweep_lengths) out += ",tcc_w" + std::to_string(len);
    out += ",overlap_target,overlap_preceding,involvement\n";
    for (const auto& row : rows) {
        out += std::to_string(row.year);
        out += ',' + csv_cell(row.ncc);
        out += ',' + csv_cell(row.occ);
        for (int len : opts.sweep_lengths) {
            auto it = row.tcc_by_window.find(len);
            out += ',' + (it == row.tcc_by_window.end() ? std::string()
                                                        : csv_cell(it->second));
        }
        out += ',' + csv_cell(row.overlap_target);
        out += ',' + csv_cell(row.overlap_preceding);
        out += ',' + csv_cell(row.involvement);
        out += '\n';
    }
    return out;
}

void SynthConfig::validate() const {
    if (years < 1) throw DataError("synth: years must be >= 1");
    if (papers_per_year == 0) throw DataError("synth: papers_per_year must be >= 1");
    if (author_pool_growth == 0) throw DataError("synth: author_pool_growth must be >= 1");
    if (repeat_collab_prob < 0 || repeat_collab_prob > 1 ||
        closure_prob < 0 || closure_prob > 1 ||
        repeat_collab_prob + closure_prob > 1)
        throw DataError("synth: probabilities must lie in [0,1] and sum to <= 1");
    if (authors_per_paper.choices.empty())
        throw DataError("synth: empty authors-per-paper distribution");
    for (const auto& [k, w] : authors_per_paper.choices) {
        if (k < 2) throw DataError("synth: byline size must be >= 2");
        if (w <= 0) throw DataError("synth: distribution weights must be positive");
        if (k > author_pool_growth)
            throw DataError("synth: byline size " + std::to_string(k) +
                            " infeasible for pool growth " +
                            std::to_string(author_pool_growth));
    }
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform() { return (eng_() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

private:
    std::mt19937_64 eng_;
};

} // namespace

Corpus generate_synthetic(const SynthConfig& cfg, SynthLog* log) {
    cfg.validate();
    Rng rng(cfg.seed);
    SynthLog local_log;

    double weight_total = 0;
    for (const auto& [k, w] : cfg.authors_per_paper.choices) weight_total += w;
    auto sample_size = [&]() -> std::size_t {
        double r = rng.uniform() * weight_total;
        for (const auto& [k, w] : cfg.authors_per_paper.choices) {
            if (r < w) return k;
            r -= w;
        }
        return cfg.authors_per_paper.choices.back().first;
    };

    auto table = std::make_shared<AuthorTable>();
    std::vector<AuthorId> pool;
    auto grow_pool = [&] {
        for (std::uint64_t i = 0; i < cfg.author_pool_growth; ++i) {
            char buf[24];
            std::snprintf(buf, sizeof(buf), "a%06zu", pool.size() + 1);
            pool.push_back(table->intern(buf));
        }
    };

    std::unordered_set<std::uint64_t> copub;
    std::vector<std::vector<AuthorId>> coauthors; // deduped, unsorted
    std::vector<AuthorId> connected; // authors with >= 2 distinct coauthors
    std::vector<std::pair<AuthorId, AuthorId>> past_pairs;

    auto note_pair = [&](AuthorId u, AuthorId v) {
        if (copub.insert(pair_key(u, v)).second) {
            past_pairs.emplace_back(std::min(u, v), std::max(u, v));
            for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                if (coauthors.size() <= a) coauthors.resize(pool.size());
                auto& list = coauthors[a];
                if (std::find(list.begin(), list.end(), b) == list.end()) {
                    list.push_back(b);
                    if (list.size() == 2) connected.push_back(a);
                }
            }
        }
    };

    // Draw a pair sharing a collaborator but not yet copublished.
    auto draw_open_pair = [&]() -> std::optional<std::pair<AuthorId, AuthorId>> {
        if (connected.empty()) return std::nullopt;
        for (int attempt = 0; attempt < 16; ++attempt) {
            const AuthorId x = connected[rng.below(connected.size())];
            const auto& list = coauthors[x];
            const AuthorId y = list[rng.below(list.size())];
            const AuthorId z = list[rng.below(list.size())];
            if (y == z || copub.count(pair_key(y, z))) continue;
            return std::pair{y, z};
        }
        return std::nullopt;
    };

    std::vector<PaperRecord> papers;
    papers.reserve(static_cast<std::size_t>(cfg.years) * cfg.papers_per_year);
    std::uint64_t serial = 0;

    for (int yi = 0; yi < cfg.years; ++yi) {
        const int year = cfg.start_year + yi;
        grow_pool();
        coauthors.resize(pool.size());
        for (std::uint64_t p = 0; p < cfg.papers_per_year; ++p) {
            const std::size_t size = sample_size();
            std::vector<AuthorId> byline;
            const double r = rng.uniform();
            if (r < cfg.closure_prob) {
                if (auto open = draw_open_pair()) {
                    byline = {open->first, open->second};
                    ++local_log.planted_closures;
                    ++local_log.planted_closures_by_year[year];
                }
            } else if (r < cfg.closure_prob + cfg.repeat_collab_prob && !past_pairs.empty()) {
                const auto& pp = past_pairs[rng.below(past_pairs.size())];
                byline = {pp.first, pp.second};
                ++local_log.planted_repeats;
            }
            while (byline.size() < size) {
                const AuthorId cand = pool[rng.below(pool.size())];
                if (std::find(byline.begin(), byline.end(), cand) == byline.end())
                    byline.push_back(cand);
            }
            PaperRecord rec;
            char buf[24];
            std::snprintf(buf, sizeof(buf), "p%07" PRIu64, ++serial);
            rec.paper_id = buf;
            rec.year = year;
            std::sort(byline.begin(), byline.end());
            rec.authors = byline;
            for (std::size_t i = 0; i < byline.size(); ++i)
                for (std::size_t j = i + 1; j < byline.size(); ++j)
                    note_pair(byline[i], byline[j]);
            papers.push_back(std::move(rec));
        }
    }

    if (log) *log = local_log;
    return Corpus(std::move(table), std::move(papers), 0);
}

} // namespace triclose
