#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "triclose/corpus.hpp"
#include "triclose/rational.hpp"

namespace triclose {

struct WindowSpec {
    int target_year;
    int preceding_len = 5; // L >= 1

    int preceding_from() const { return target_year - preceding_len; }
    int preceding_to() const { return target_year - 1; }

    void validate() const {
        if (preceding_len < 1) throw DataError("window length must be >= 1");
    }
};

enum class Eligibility {
    // No joint paper at all in the preceding window.
    Strict,
    // Embedded in >= 1 four-path, none of which is closed within the window.
    Literal,
};

// One author pair eligible for closure in the target year.
struct PairObservation {
    AuthorId a, b; // a < b
    std::vector<AuthorId> middle_authors; // sorted, non-empty
    bool closed = false;
    std::vector<std::string> closing_paper_ids; // target-year papers with both
    bool involvement = false; // some closing paper contains some middle
};

struct TccReport {
    WindowSpec window{};
    Eligibility eligibility = Eligibility::Strict;
    bool dual_activity_filtered = true;
    std::uint64_t eligible_pairs = 0;
    std::uint64_t closed_pairs = 0;
    Rational ratio;
    bool defined = false;
    std::vector<PairObservation> observations; // sorted by (a, b)
    std::vector<std::string> warnings;
};

// Pairs embedded in >= 1 four-path of `preceding` and not already closed
// there, each pair once, with the union of their middle authors.
// closed/involvement fields are left unset.
std::vector<PairObservation> open_pairs(const Corpus& preceding,
                                        const std::set<AuthorId>* active_filter,
                                        Eligibility eligibility,
                                        unsigned threads = 1);

TccReport tcc(const Corpus& corpus, const WindowSpec& window,
              bool require_dual_activity = true,
              Eligibility eligibility = Eligibility::Strict,
              unsigned threads = 1);

std::vector<TccReport> window_sweep(const Corpus& corpus, int target_year,
                                    const std::vector<int>& lengths,
                                    bool require_dual_activity = true,
                                    Eligibility eligibility = Eligibility::Strict,
                                    unsigned threads = 1);

// Fraction of closed pairs whose closure involves a shared middle author.
// Undefined when no pair closed.
Rational involvement_ratio(const TccReport& report);

struct SharedCountBucket {
    std::uint64_t eligible = 0;
    std::uint64_t closed = 0;
    Rational ratio;
};

// Buckets observations by number of shared collaborators; empty buckets
// are absent.
std::map<std::size_t, SharedCountBucket> closure_by_shared_count(const TccReport& report);

struct OverlapRatios {
    Rational target;    // |A_T cap A_P| / |A_T|
    Rational preceding; // |A_T cap A_P| / |A_P|
};

OverlapRatios overlap_ratios(const Corpus& corpus, const WindowSpec& window);

} // namespace triclose
