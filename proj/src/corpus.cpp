#include "triclose/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace triclose {

using json = nlohmann::json;

AuthorId AuthorTable::intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    AuthorId id = static_cast<AuthorId>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
}

Corpus::Corpus() : table_(std::make_shared<AuthorTable>()) {}

Corpus::Corpus(std::shared_ptr<AuthorTable> table, std::vector<PaperRecord> papers,
               std::uint64_t duplicate_author_warnings)
    : table_(std::move(table)),
      papers_(std::move(papers)),
      dup_warnings_(duplicate_author_warnings) {
    author_index_.resize(table_->size());
    std::unordered_map<std::string_view, std::uint32_t> seen;
    seen.reserve(papers_.size());
    for (std::uint32_t p = 0; p < papers_.size(); ++p) {
        const auto& rec = papers_[p];
        auto [it, fresh] = seen.emplace(rec.paper_id, p);
        if (!fresh)
            throw DataError("duplicate paper_id '" + rec.paper_id + "' (records " +
                            std::to_string(it->second + 1) + " and " +
                            std::to_string(p + 1) + ")");
        for (AuthorId a : rec.authors) author_index_[a].push_back(p);
        year_index_[rec.year].push_back(p);
    }
}

const std::vector<std::uint32_t>& Corpus::papers_of(AuthorId a) const {
    static const std::vector<std::uint32_t> empty;
    if (a >= author_index_.size()) return empty;
    return author_index_[a];
}

std::size_t Corpus::author_count() const {
    std::size_t n = 0;
    for (const auto& v : author_index_)
        if (!v.empty()) ++n;
    return n;
}

std::map<std::size_t, std::uint64_t> Corpus::byline_size_histogram() const {
    std::map<std::size_t, std::uint64_t> h;
    for (const auto& p : papers_) ++h[p.authors.size()];
    return h;
}

bool Corpus::same_content(const Corpus& other) const {
    if (papers_.size() != other.papers_.size()) return false;
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        const auto& a = papers_[i];
        const auto& b = other.papers_[i];
        if (a.paper_id != b.paper_id || a.year != b.year) return false;
        if (a.authors.size() != b.authors.size()) return false;
        std::vector<std::string> an, bn;
        for (AuthorId x : a.authors) an.push_back(table_->name(x));
        for (AuthorId x : b.authors) bn.push_back(other.table_->name(x));
        std::sort(an.begin(), an.end());
        std::sort(bn.begin(), bn.end());
        if (an != bn) return false;
    }
    return true;
}

namespace {

struct RawRecord {
    std::string paper_id;
    int year;
    std::vector<std::string> authors;
};

Corpus build_corpus(std::vector<RawRecord> raw) {
    auto table = std::make_shared<AuthorTable>();
    std::vector<PaperRecord> papers;
    papers.reserve(raw.size());
    std::uint64_t dup_warnings = 0;
    for (auto& r : raw) {
        PaperRecord rec;
        rec.paper_id = std::move(r.paper_id);
        rec.year = r.year;
        for (const auto& name : r.authors) rec.authors.push_back(table->intern(name));
        std::sort(rec.authors.begin(), rec.authors.end());
        auto last = std::unique(rec.authors.begin(), rec.authors.end());
        if (last != rec.authors.end()) {
            dup_warnings += static_cast<std::uint64_t>(rec.authors.end() - last);
            rec.authors.erase(last, rec.authors.end());
        }
        papers.push_back(std::move(rec));
    }
    return Corpus(std::move(table), std::move(papers), dup_warnings);
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<RawRecord> parse_jsonl(std::istream& in) {
    std::vector<RawRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError("line " + std::to_string(lineno) + ": invalid JSON: " + e.what());
        }
        if (!j.is_object())
            throw ParseError("line " + std::to_string(lineno) + ": expected a JSON object");
        RawRecord r;
        if (!j.contains("paper_id") || !j["paper_id"].is_string())
            throw ParseError("line " + std::to_string(lineno) + ": missing string field 'paper_id'");
        if (!j.contains("year") || !j["year"].is_number_integer())
            throw ParseError("line " + std::to_string(lineno) + ": missing integer field 'year'");
        if (!j.contains("authors") || !j["authors"].is_array())
            throw ParseError("line " + std::to_string(lineno) + ": missing array field 'authors'");
        r.paper_id = j["paper_id"].get<std::string>();
        r.year = j["year"].get<int>();
        for (const auto& a : j["authors"]) {
            if (!a.is_string())
                throw ParseError("line " + std::to_string(lineno) + ": non-string author entry");
            r.authors.push_back(a.get<std::string>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RawRecord> parse_tsv(std::istream& in) {
    std::vector<RawRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 3 tab-separated fields");
        std::string_view year_field(line.data() + t1 + 1, t2 - t1 - 1);
        RawRecord r;
        if (!parse_int(year_field, r.year)) {
            // Optional header: tolerated only as the very first line.
            if (lineno == 1) continue;
            throw ParseError("line " + std::to_string(lineno) + ": year is not an integer");
        }
        r.paper_id = line.substr(0, t1);
        std::string_view rest(line.data() + t2 + 1, line.size() - t2 - 1);
        while (!rest.empty()) {
            std::size_t semi = rest.find(';');
            std::string_view tok = rest.substr(0, semi);
            if (!tok.empty()) r.authors.emplace_back(tok);
            if (semi == std::string_view::npos) break;
            rest.remove_prefix(semi + 1);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

Corpus parse_corpus(std::istream& in, CorpusFormat format) {
    return build_corpus(format == CorpusFormat::Jsonl ? parse_jsonl(in) : parse_tsv(in));
}

Corpus parse_corpus_file(const std::string& path, CorpusFormat format) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file: " + path);
    return parse_corpus(in, format);
}

void serialize_corpus(const Corpus& corpus, std::ostream& out, CorpusFormat format) {
    for (const auto& p : corpus.papers()) {
        std::vector<std::string> names;
        names.reserve(p.authors.size());
        for (AuthorId a : p.authors) names.push_back(corpus.authors().name(a));
        std::sort(names.begin(), names.end());
        if (format == CorpusFormat::Jsonl) {
            json j;
            j["paper_id"] = p.paper_id;
            j["year"] = p.year;
            j["authors"] = names;
            out << j.dump() << '\n';
        } else {
            out << p.paper_id << '\t' << p.year << '\t';
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (i) out << ';';
                out << names[i];
            }
            out << '\n';
        }
    }
}

void FilterConfig::validate() const {
    if (min_year > max_year)
        throw DataError("invalid filter: min_year > max_year");
    if (const auto* cap = std::get_if<std::uint64_t>(&max_authors)) {
        if (*cap < 2) throw DataError("invalid filter: explicit author cap must be >= 2");
    } else if (const auto* q = std::get_if<double>(&max_authors)) {
        if (!(*q > 0.0 && *q <= 1.0))
            throw DataError("invalid filter: percentile must be in (0, 1]");
    }
}

std::uint64_t percentile_threshold(const Corpus& corpus, double q) {
    if (corpus.paper_count() == 0) throw DataError("percentile_threshold: no papers");
    if (!(q > 0.0 && q <= 1.0)) throw DataError("percentile must be in (0, 1]");
    auto hist = corpus.byline_size_histogram();
    const std::uint64_t total = corpus.paper_count();
    // smallest k with count(<= k authors) >= q * total; epsilon guards the
    // binary representation of q (0.98 * 100 must accept 98).
    const long double need = static_cast<long double>(q) * static_cast<long double>(total) - 1e-9L;
    std::uint64_t cum = 0;
    for (const auto& [k, c] : hist) {
        cum += c;
        if (static_cast<long double>(cum) >= need) return k;
    }
    return hist.rbegin()->first; // q <= 1 always reaches the last bucket
}

Corpus apply_filters(const Corpus& corpus, const FilterConfig& cfg, FilterReport* report) {
    cfg.validate();
    FilterReport rep;

    std::vector<const PaperRecord*> kept;
    kept.reserve(corpus.paper_count());
    for (const auto& p : corpus.papers()) {
        if (p.year < cfg.min_year || p.year > cfg.max_year) {
            ++rep.dropped_year;
            continue;
        }
        kept.push_back(&p);
    }

    auto drop_single = [&] {
        std::vector<const PaperRecord*> next;
        next.reserve(kept.size());
        for (const auto* p : kept) {
            if (p->authors.size() < 2) ++rep.dropped_single;
            else next.push_back(p);
        }
        kept = std::move(next);
    };

    auto resolve_cap = [&]() -> std::uint64_t {
        if (const auto* cap = std::get_if<std::uint64_t>(&cfg.max_authors)) return *cap;
        const double q = std::get<double>(cfg.max_authors);
        std::map<std::size_t, std::uint64_t> hist;
        for (const auto* p : kept) ++hist[p->authors.size()];
        if (kept.empty()) return 0;
        const long double need =
            static_cast<long double>(q) * static_cast<long double>(kept.size()) - 1e-9L;
        std::uint64_t cum = 0;
        for (const auto& [k, c] : hist) {
            cum += c;
            if (static_cast<long double>(cum) >= need) return k;
        }
        return hist.rbegin()->first;
    };

    const bool has_cap = !std::holds_alternative<std::monostate>(cfg.max_authors);
    std::uint64_t cap = 0;
    if (cfg.drop_single_authored && !cfg.percentile_before_drop) {
        drop_single();
        if (has_cap) cap = resolve_cap();
    } else {
        if (has_cap) cap = resolve_cap();
        if (cfg.drop_single_authored) drop_single();
    }
    if (has_cap && cap > 0) {
        rep.cap_used = cap;
        std::vector<const PaperRecord*> next;
        next.reserve(kept.size());
        for (const auto* p : kept) {
            if (p->authors.size() > cap) ++rep.dropped_cap;
            else next.push_back(p);
        }
        kept = std::move(next);
    }

    std::vector<PaperRecord> papers;
    papers.reserve(kept.size());
    for (const auto* p : kept) papers.push_back(*p);
    if (report) *report = rep;
    return Corpus(corpus.author_table(), std::move(papers), corpus.duplicate_author_warnings());
}

Corpus slice_window(const Corpus& corpus, int from_year, int to_year) {
    if (from_year > to_year) throw DataError("slice_window: inverted year range");
    std::vector<PaperRecord> papers;
    for (const auto& p : corpus.papers())
        if (p.year >= from_year && p.year <= to_year) papers.push_back(p);
    return Corpus(corpus.author_table(), std::move(papers), 0);
}

std::set<AuthorId> author_activity_set(const Corpus& corpus) {
    std::set<AuthorId> out;
    for (const auto& p : corpus.papers())
        out.insert(p.authors.begin(), p.authors.end());
    return out;
}

} // namespace triclose
