#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace triclose {

using AuthorId = std::uint32_t;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CorpusFormat { Jsonl, Tsv };

// Author-name table shared between a corpus and every slice derived from it,
// so AuthorIds stay comparable across time windows.
class AuthorTable {
public:
    AuthorId intern(const std::string& name);
    const std::string& name(AuthorId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AuthorId> ids_;
};

struct PaperRecord {
    std::string paper_id;
    int year = 0;
    std::vector<AuthorId> authors; // sorted, duplicate-free
};

struct FilterReport {
    std::uint64_t dropped_year = 0;
    std::uint64_t dropped_single = 0;
    std::uint64_t dropped_cap = 0;
    std::uint64_t cap_used = 0; // resolved author cap, 0 if none applied
};

struct FilterConfig {
    int min_year;
    int max_year;
    // Explicit integer cap, or percentile q in (0, 1] over the
    // authors-per-paper distribution. monostate = no cap.
    std::variant<std::monostate, std::uint64_t, double> max_authors;
    bool drop_single_authored = true;
    // Compute the percentile cap before dropping single-authored papers
    // instead of after (sensitivity check).
    bool percentile_before_drop = false;

    void validate() const;
};

class Corpus {
public:
    Corpus();
    Corpus(std::shared_ptr<AuthorTable> table, std::vector<PaperRecord> papers,
           std::uint64_t duplicate_author_warnings = 0);

    const std::vector<PaperRecord>& papers() const { return papers_; }
    const AuthorTable& authors() const { return *table_; }
    std::shared_ptr<AuthorTable> author_table() const { return table_; }

    // Papers of an author, in input (chronological file) order.
    const std::vector<std::uint32_t>& papers_of(AuthorId a) const;
    const std::map<int, std::vector<std::uint32_t>>& year_index() const { return year_index_; }

    std::size_t paper_count() const { return papers_.size(); }
    std::size_t author_count() const; // authors incident to >= 1 paper
    std::uint64_t duplicate_author_warnings() const { return dup_warnings_; }

    // Histogram of authors-per-paper.
    std::map<std::size_t, std::uint64_t> byline_size_histogram() const;

    // Semantic equality: same papers (id, year, author-name set) in the same
    // order, independent of intern-id assignment.
    bool same_content(const Corpus& other) const;

private:
    std::shared_ptr<AuthorTable> table_;
    std::vector<PaperRecord> papers_;
    std::vector<std::vector<std::uint32_t>> author_index_;
    std::map<int, std::vector<std::uint32_t>> year_index_;
    std::uint64_t dup_warnings_ = 0;
};

Corpus parse_corpus(std::istream& in, CorpusFormat format);
Corpus parse_corpus_file(const std::string& path, CorpusFormat format);
void serialize_corpus(const Corpus& corpus, std::ostream& out, CorpusFormat format);

// Smallest k such that at least fraction q of papers have <= k authors.
std::uint64_t percentile_threshold(const Corpus& corpus, double q);

Corpus apply_filters(const Corpus& corpus, const FilterConfig& cfg,
                     FilterReport* report = nullptr);

Corpus slice_window(const Corpus& corpus, int from_year, int to_year);

std::set<AuthorId> author_activity_set(const Corpus& corpus);

} // namespace triclose
