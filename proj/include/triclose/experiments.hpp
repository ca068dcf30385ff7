#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "triclose/corpus.hpp"
#include "triclose/rational.hpp"
#include "triclose/temporal_metrics.hpp"

namespace triclose {

struct TimeseriesRow {
    int year = 0; // window end / target year
    Rational ncc;
    Rational occ;
    std::map<int, Rational> tcc_by_window; // window length L -> ratio
    Rational overlap_target;
    Rational overlap_preceding;
    Rational involvement;
    std::vector<std::string> warnings;
};

struct TimeseriesOptions {
    int window_len = 5;
    std::vector<int> sweep_lengths = {1, 2, 3, 4, 5};
    bool require_dual_activity = true;
    Eligibility eligibility = Eligibility::Strict;
    unsigned threads = 1;
};

std::vector<TimeseriesRow> run_timeseries(const Corpus& corpus, int start_year,
                                          int end_year, const TimeseriesOptions& opts = {});

std::string timeseries_to_csv(const std::vector<TimeseriesRow>& rows,
                              const TimeseriesOptions& opts);

struct AuthorsPerPaperDist {
    // Either a fixed byline size or categorical (size, weight) choices.
    std::vector<std::pair<std::size_t, double>> choices = {{3, 1.0}};

    static AuthorsPerPaperDist fixed(std::size_t k) { return {{{k, 1.0}}}; }
};

struct SynthConfig {
    int start_year = 1995;
    int years = 15;
    std::uint64_t papers_per_year = 100;
    AuthorsPerPaperDist authors_per_paper;
    std::uint64_t author_pool_growth = 50; // new authors per year
    double repeat_collab_prob = 0.1;
    double closure_prob = 0.1; // open pair chosen as byline seed
    std::uint64_t seed = 1;

    void validate() const;
};

struct SynthLog {
    std::uint64_t planted_closures = 0;   // bylines seeded with an open pair
    std::uint64_t planted_repeats = 0;    // bylines seeded with a past pair
    std::map<int, std::uint64_t> planted_closures_by_year;
};

// Deterministic generative corpus: identical config yields an identical
// corpus, byte for byte after serialization.
Corpus generate_synthetic(const SynthConfig& cfg, SynthLog* log = nullptr);

} // namespace triclose
