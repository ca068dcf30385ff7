#pragma once

#include <cstdint>
#include <string>

#include "triclose/corpus.hpp"
#include "triclose/projection.hpp"
#include "triclose/rational.hpp"

namespace triclose {

struct MetricReport {
    std::string metric_name;
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 0;
    Rational ratio; // reduced numerator/denominator
    bool defined = false;

    static MetricReport make(std::string name, std::uint64_t num, std::uint64_t den) {
        MetricReport r;
        r.metric_name = std::move(name);
        r.numerator = num;
        r.denominator = den;
        r.defined = den != 0;
        r.ratio = Rational(num, den);
        return r;
    }
};

// One author-paper-author-paper-author walk, all five nodes distinct.
struct FourPath {
    AuthorId endpoint_a, endpoint_b; // unordered, stored endpoint_a < endpoint_b
    AuthorId middle;
    std::uint32_t paper_a, paper_b; // unordered, stored paper_a < paper_b
};

// Centered connected triples: sum over nodes of C(deg, 2).
std::uint64_t count_two_paths(const OneModeGraph& g, unsigned threads = 1);

// Closed centered triples, i.e. 3x the triangle count.
std::uint64_t count_closed_two_paths(const OneModeGraph& g, unsigned threads = 1);

MetricReport ncc(const OneModeGraph& g, unsigned threads = 1);

// Distinct 4-paths, each unordered geometric path counted once.
std::uint64_t count_four_paths(const Corpus& corpus, unsigned threads = 1);

// 4-paths whose endpoints share a paper other than the path's own two.
std::uint64_t count_closed_four_paths(const Corpus& corpus, unsigned threads = 1);

MetricReport occ(const Corpus& corpus, unsigned threads = 1);

} // namespace triclose
