// triclose: triadic-closure analytics for temporal coauthorship corpora.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "triclose/corpus.hpp"
#include "triclose/experiments.hpp"
#include "triclose/oracle.hpp"
#include "triclose/parallel.hpp"
#include "triclose/projection.hpp"
#include "triclose/static_metrics.hpp"
#include "triclose/temporal_metrics.hpp"

using json = nlohmann::json;
using namespace triclose;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    std::string input;
    std::string format = "jsonl";
    std::string out;
    unsigned threads = 0; // 0 = all cores
    bool oracle = false;

    int min_year = -1000000;
    int max_year = 1000000;
    std::optional<std::uint64_t> max_authors;
    std::optional<double> percentile;
    bool keep_single = false;
    bool percentile_before_drop = false;

    unsigned effective_threads() const {
        return threads == 0 ? default_thread_count() : threads;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_filters = true) {
    cmd->add_option("--input", o.input, "input corpus file")->required();
    cmd->add_option("--format", o.format, "jsonl|tsv")
        ->check(CLI::IsMember({"jsonl", "tsv"}));
    cmd->add_option("--out", o.out, "write data to file instead of stdout");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    if (with_filters) {
        cmd->add_option("--min-year", o.min_year, "drop papers before this year");
        cmd->add_option("--max-year", o.max_year, "drop papers after this year");
        auto* cap = cmd->add_option("--max-authors", o.max_authors, "explicit authors-per-paper cap");
        cmd->add_option("--percentile", o.percentile,
                        "authors-per-paper cap as percentile q in (0,1]")
            ->excludes(cap);
        cmd->add_flag("--keep-single", o.keep_single, "keep single-authored papers");
        cmd->add_flag("--percentile-before-drop", o.percentile_before_drop,
                      "compute percentile cap before dropping single-authored papers");
    }
}

CorpusFormat to_format(const std::string& f) {
    return f == "tsv" ? CorpusFormat::Tsv : CorpusFormat::Jsonl;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i)
            h = (h ^ static_cast<unsigned char>(buf[i])) * 1099511628211ull;
        if (!in) break;
    }
    return h;
}

json make_manifest(const std::string& subcommand, const CommonOpts& o, json config) {
    json m;
    m["tool"] = "triclose";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    config["input"] = o.input;
    config["format"] = o.format;
    config["threads"] = o.effective_threads();
    m["config"] = std::move(config);
    if (!o.input.empty()) {
        char hex[20];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64_file(o.input)));
        m["input_digest_fnv1a64"] = hex;
    }
    m["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    return m;
}

// Data goes to --out or stdout; when writing a file a manifest sidecar
// accompanies it.
void emit(const CommonOpts& o, const std::string& data, const json& manifest) {
    if (o.out.empty()) {
        std::cout << data;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw DataError("cannot open output file: " + o.out);
        f << data;
        std::ofstream mf(o.out + ".manifest.json");
        mf << manifest.dump(2) << '\n';
    }
}

Corpus load_filtered(const CommonOpts& o, FilterReport* rep = nullptr) {
    Corpus c = parse_corpus_file(o.input, to_format(o.format));
    FilterConfig cfg;
    cfg.min_year = o.min_year;
    cfg.max_year = o.max_year;
    if (o.max_authors) cfg.max_authors = *o.max_authors;
    else if (o.percentile) cfg.max_authors = *o.percentile;
    cfg.drop_single_authored = !o.keep_single;
    cfg.percentile_before_drop = o.percentile_before_drop;
    return apply_filters(c, cfg, rep);
}

json ratio_json(const Rational& r) {
    json j;
    j["ratio"] = r.defined() ? json(r.to_string()) : json(nullptr);
    j["decimal"] = r.defined() ? json(r.to_double()) : json(nullptr);
    return j;
}

json metric_json(const MetricReport& r) {
    json j;
    j["metric"] = r.metric_name;
    j["numerator"] = r.numerator;
    j["denominator"] = r.denominator;
    j["ratio"] = r.defined ? json(r.ratio.to_string()) : json(nullptr);
    j["decimal"] = r.defined ? json(r.ratio.to_double()) : json(nullptr);
    j["defined"] = r.defined;
    return j;
}

std::string metric_csv(const MetricReport& r) {
    std::ostringstream os;
    os << "metric,numerator,denominator,ratio,decimal,defined\n";
    os << r.metric_name << ',' << r.numerator << ',' << r.denominator << ',';
    if (r.defined) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", r.ratio.to_double());
        os << r.ratio.to_string() << ',' << buf << ",true\n";
    } else {
        os << ",,false\n";
    }
    return os.str();
}

Eligibility parse_eligibility(const std::string& s) {
    return s == "literal" ? Eligibility::Literal : Eligibility::Strict;
}

json tcc_json(const TccReport& rep, const Corpus& corpus) {
    json j;
    j["metric"] = "TCC";
    j["target_year"] = rep.window.target_year;
    j["window"] = rep.window.preceding_len;
    j["eligibility"] = rep.eligibility == Eligibility::Strict ? "strict" : "literal";
    j["dual_activity"] = rep.dual_activity_filtered;
    j["numerator"] = rep.closed_pairs;
    j["denominator"] = rep.eligible_pairs;
    j["ratio"] = rep.defined ? json(rep.ratio.to_string()) : json(nullptr);
    j["decimal"] = rep.defined ? json(rep.ratio.to_double()) : json(nullptr);
    j["defined"] = rep.defined;
    if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
    (void)corpus;
    return j;
}

void write_details(const TccReport& rep, const Corpus& corpus, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw DataError("cannot open details file: " + path);
    for (const auto& obs : rep.observations) {
        json j;
        j["pair"] = {corpus.authors().name(obs.a), corpus.authors().name(obs.b)};
        json mids = json::array();
        for (AuthorId m : obs.middle_authors) mids.push_back(corpus.authors().name(m));
        j["middle_authors"] = std::move(mids);
        j["n_shared"] = obs.middle_authors.size();
        j["closed"] = obs.closed;
        j["closing_papers"] = obs.closing_paper_ids;
        j["involvement"] = obs.involvement;
        f << j.dump() << '\n';
    }
}

AuthorsPerPaperDist parse_dist(const std::string& spec) {
    AuthorsPerPaperDist d;
    d.choices.clear();
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) {
            d.choices.emplace_back(std::stoul(tok), 1.0);
        } else {
            d.choices.emplace_back(std::stoul(tok.substr(0, colon)),
                                   std::stod(tok.substr(colon + 1)));
        }
    }
    if (d.choices.empty()) throw DataError("empty authors-per-paper spec");
    return d;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triadic-closure metrics for temporal coauthorship corpora"};
    app.require_subcommand(1);

    CommonOpts common;
    bool oracle_flag = false;

    // validate / stats
    auto* cmd_validate = app.add_subcommand("validate", "parse, filter, and report");
    CommonOpts o_validate;
    add_common(cmd_validate, o_validate);
    auto* cmd_stats = app.add_subcommand("stats", "corpus summary statistics");
    CommonOpts o_stats;
    add_common(cmd_stats, o_stats);

    // ncc / occ
    CommonOpts o_ncc, o_occ;
    int from_year = -1000000, to_year = 1000000;
    bool csv_out = false;
    auto* cmd_ncc = app.add_subcommand("ncc", "one-mode clustering coefficient");
    add_common(cmd_ncc, o_ncc);
    cmd_ncc->add_option("--from-year", from_year, "slice start year");
    cmd_ncc->add_option("--to-year", to_year, "slice end year");
    cmd_ncc->add_flag("--csv", csv_out, "CSV row instead of JSON");
    cmd_ncc->add_flag("--oracle", oracle_flag, "brute-force reference (small inputs only)");
    auto* cmd_occ = app.add_subcommand("occ", "two-mode clustering coefficient");
    add_common(cmd_occ, o_occ);
    cmd_occ->add_option("--from-year", from_year, "slice start year");
    cmd_occ->add_option("--to-year", to_year, "slice end year");
    cmd_occ->add_flag("--csv", csv_out, "CSV row instead of JSON");
    cmd_occ->add_flag("--oracle", oracle_flag, "brute-force reference (small inputs only)");

    // temporal family
    int target_year = 0, window_len = 5;
    std::string eligibility = "strict", dual_activity = "on", details_path;
    std::vector<int> sweep_windows = {1, 2, 3, 4, 5};
    CommonOpts o_tcc, o_sweep, o_inv, o_curve, o_overlap;
    auto add_temporal = [&](CLI::App* cmd, CommonOpts& o, bool need_target = true) {
        add_common(cmd, o);
        auto* t = cmd->add_option("--target-year", target_year, "target year t_{x+1}");
        if (need_target) t->required();
        cmd->add_option("--window", window_len, "preceding window length (years)");
        cmd->add_option("--eligibility", eligibility, "strict|literal")
            ->check(CLI::IsMember({"strict", "literal"}));
        cmd->add_option("--dual-activity", dual_activity, "on|off")
            ->check(CLI::IsMember({"on", "off"}));
        cmd->add_option("--details", details_path, "write one pair observation per line (JSONL)");
        cmd->add_flag("--oracle", oracle_flag, "brute-force reference (small inputs only)");
    };
    auto* cmd_tcc = app.add_subcommand("tcc", "over-time clustering coefficient");
    add_temporal(cmd_tcc, o_tcc);
    auto* cmd_sweep = app.add_subcommand("sweep", "TCC over varying window lengths");
    add_temporal(cmd_sweep, o_sweep);
    cmd_sweep->add_option("--windows", sweep_windows, "window lengths to sweep");
    auto* cmd_inv = app.add_subcommand("involvement", "shared-coauthor involvement in closures");
    add_temporal(cmd_inv, o_inv);
    auto* cmd_curve = app.add_subcommand("shared-curve", "closure ratio by shared-collaborator count");
    add_temporal(cmd_curve, o_curve);
    auto* cmd_overlap = app.add_subcommand("overlap", "dual-activity author overlap ratios");
    CommonOpts& o_ov = o_overlap;
    add_common(cmd_overlap, o_ov);
    cmd_overlap->add_option("--target-year", target_year, "target year")->required();
    cmd_overlap->add_option("--window", window_len, "preceding window length (years)");

    // timeseries
    CommonOpts o_ts;
    int ts_from = 0, ts_to = 0;
    bool ts_json = false;
    auto* cmd_ts = app.add_subcommand("timeseries", "per-year NCC/OCC/TCC series");
    add_common(cmd_ts, o_ts);
    cmd_ts->add_option("--from", ts_from, "first target year")->required();
    cmd_ts->add_option("--to", ts_to, "last target year")->required();
    cmd_ts->add_option("--window", window_len, "window length for NCC/OCC and default TCC");
    cmd_ts->add_option("--sweep", sweep_windows, "TCC window lengths");
    cmd_ts->add_option("--eligibility", eligibility, "strict|literal")
        ->check(CLI::IsMember({"strict", "literal"}));
    cmd_ts->add_option("--dual-activity", dual_activity, "on|off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd_ts->add_flag("--json", ts_json, "JSON output instead of CSV");

    // synth
    CommonOpts o_synth;
    SynthConfig synth_cfg;
    std::string dist_spec = "3";
    auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic corpus");
    cmd_synth->add_option("--out", o_synth.out, "output corpus file (JSONL)")->required();
    cmd_synth->add_option("--years", synth_cfg.years, "number of years");
    cmd_synth->add_option("--start-year", synth_cfg.start_year, "first year");
    cmd_synth->add_option("--papers-per-year", synth_cfg.papers_per_year, "papers per year");
    cmd_synth->add_option("--authors-per-paper", dist_spec,
                          "fixed size or categorical 'k:w,k:w,...'");
    cmd_synth->add_option("--pool-growth", synth_cfg.author_pool_growth, "new authors per year");
    cmd_synth->add_option("--repeat-prob", synth_cfg.repeat_collab_prob,
                          "past-pair byline seed probability");
    cmd_synth->add_option("--closure-prob", synth_cfg.closure_prob,
                          "open-pair byline seed probability");
    cmd_synth->add_option("--seed", synth_cfg.seed, "RNG seed");

    // edge list export
    CommonOpts o_edges;
    auto* cmd_edges = app.add_subcommand("edges", "export the one-mode projection edge list");
    add_common(cmd_edges, o_edges);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const bool dual = dual_activity == "on";
        const Eligibility elig = parse_eligibility(eligibility);

        if (cmd_validate->parsed()) {
            FilterReport rep;
            Corpus raw = parse_corpus_file(o_validate.input, to_format(o_validate.format));
            Corpus filtered = load_filtered(o_validate, &rep);
            json j;
            j["papers_read"] = raw.paper_count();
            j["papers_kept"] = filtered.paper_count();
            j["duplicate_author_warnings"] = raw.duplicate_author_warnings();
            j["dropped_by_year_range"] = rep.dropped_year;
            j["dropped_single_authored"] = rep.dropped_single;
            j["dropped_by_author_cap"] = rep.dropped_cap;
            if (rep.cap_used) j["author_cap_used"] = rep.cap_used;
            json hist = json::object();
            for (const auto& [k, c] : raw.byline_size_histogram())
                hist[std::to_string(k)] = c;
            j["authors_per_paper_histogram"] = std::move(hist);
            emit(o_validate, j.dump(2) + "\n", make_manifest("validate", o_validate, {}));
        } else if (cmd_stats->parsed()) {
            Corpus c = load_filtered(o_stats);
            json j;
            j["papers"] = c.paper_count();
            j["authors"] = c.author_count();
            if (!c.year_index().empty()) {
                j["min_year"] = c.year_index().begin()->first;
                j["max_year"] = c.year_index().rbegin()->first;
            }
            json hist = json::object();
            for (const auto& [k, cnt] : c.byline_size_histogram())
                hist[std::to_string(k)] = cnt;
            j["authors_per_paper_histogram"] = std::move(hist);
            emit(o_stats, j.dump(2) + "\n", make_manifest("stats", o_stats, {}));
        } else if (cmd_ncc->parsed() || cmd_occ->parsed()) {
            const bool is_ncc = cmd_ncc->parsed();
            CommonOpts& o = is_ncc ? o_ncc : o_occ;
            Corpus c = slice_window(load_filtered(o), from_year, to_year);
            MetricReport rep;
            if (o.oracle || oracle_flag) {
                if (is_ncc) {
                    auto counts = oracle::brute_two_paths(project_one_mode(c));
                    rep = MetricReport::make("NCC", counts.closed, counts.total);
                } else {
                    auto paths = oracle::brute_four_paths(c);
                    std::uint64_t closed = 0;
                    for (const auto& [p, cl] : paths) closed += cl;
                    rep = MetricReport::make("OCC", closed, paths.size());
                }
            } else if (is_ncc) {
                rep = ncc(project_one_mode(c), o.effective_threads());
            } else {
                rep = occ(c, o.effective_threads());
            }
            json cfg = {{"from_year", from_year}, {"to_year", to_year}};
            emit(o, csv_out ? metric_csv(rep) : metric_json(rep).dump(2) + "\n",
                 make_manifest(rep.metric_name, o, cfg));
        } else if (cmd_tcc->parsed() || cmd_inv->parsed() || cmd_curve->parsed()) {
            CommonOpts& o = cmd_tcc->parsed() ? o_tcc : cmd_inv->parsed() ? o_inv : o_curve;
            Corpus c = load_filtered(o);
            WindowSpec w{target_year, window_len};
            TccReport rep = (o.oracle || oracle_flag)
                                ? oracle::brute_tcc(c, w, dual, elig)
                                : tcc(c, w, dual, elig, o.effective_threads());
            if (!details_path.empty()) write_details(rep, c, details_path);
            json cfg = {{"target_year", target_year}, {"window", window_len},
                        {"eligibility", eligibility}, {"dual_activity", dual_activity}};
            if (cmd_tcc->parsed()) {
                emit(o, tcc_json(rep, c).dump(2) + "\n", make_manifest("tcc", o, cfg));
            } else if (cmd_inv->parsed()) {
                Rational r = involvement_ratio(rep);
                json j = ratio_json(r);
                j["metric"] = "involvement";
                j["closed_pairs"] = rep.closed_pairs;
                j["defined"] = r.defined();
                emit(o, j.dump(2) + "\n", make_manifest("involvement", o, cfg));
            } else {
                auto buckets = closure_by_shared_count(rep);
                std::string csv = "n_shared,eligible,closed,ratio\n";
                for (const auto& [n, b] : buckets) {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%.6f", b.ratio.to_double());
                    csv += std::to_string(n) + ',' + std::to_string(b.eligible) + ',' +
                           std::to_string(b.closed) + ',' + buf + '\n';
                }
                emit(o, csv, make_manifest("shared-curve", o, cfg));
            }
        } else if (cmd_sweep->parsed()) {
            Corpus c = load_filtered(o_sweep);
            auto reports = window_sweep(c, target_year, sweep_windows, dual, elig,
                                        o_sweep.effective_threads());
            json arr = json::array();
            for (const auto& rep : reports) arr.push_back(tcc_json(rep, c));
            json cfg = {{"target_year", target_year}, {"windows", sweep_windows},
                        {"eligibility", eligibility}, {"dual_activity", dual_activity}};
            emit(o_sweep, arr.dump(2) + "\n", make_manifest("sweep", o_sweep, cfg));
        } else if (cmd_overlap->parsed()) {
            Corpus c = load_filtered(o_ov);
            OverlapRatios r = overlap_ratios(c, WindowSpec{target_year, window_len});
            json j;
            j["target_year"] = target_year;
            j["window"] = window_len;
            j["overlap_target"] = r.target.defined() ? json(r.target.to_string()) : json(nullptr);
            j["overlap_target_decimal"] =
                r.target.defined() ? json(r.target.to_double()) : json(nullptr);
            j["overlap_preceding"] =
                r.preceding.defined() ? json(r.preceding.to_string()) : json(nullptr);
            j["overlap_preceding_decimal"] =
                r.preceding.defined() ? json(r.preceding.to_double()) : json(nullptr);
            json cfg = {{"target_year", target_year}, {"window", window_len}};
            emit(o_ov, j.dump(2) + "\n", make_manifest("overlap", o_ov, cfg));
        } else if (cmd_ts->parsed()) {
            Corpus c = load_filtered(o_ts);
            TimeseriesOptions opts;
            opts.window_len = window_len;
            opts.sweep_lengths = sweep_windows;
            opts.require_dual_activity = dual;
            opts.eligibility = elig;
            opts.threads = o_ts.effective_threads();
            auto rows = run_timeseries(c, ts_from, ts_to, opts);
            json cfg = {{"from", ts_from}, {"to", ts_to}, {"window", window_len},
                        {"sweep", sweep_windows}, {"eligibility", eligibility},
                        {"dual_activity", dual_activity}};
            if (ts_json) {
                json arr = json::array();
                for (const auto& row : rows) {
                    json j;
                    j["year"] = row.year;
                    j["ncc"] = row.ncc.defined() ? json(row.ncc.to_string()) : json(nullptr);
                    j["occ"] = row.occ.defined() ? json(row.occ.to_string()) : json(nullptr);
                    json tw = json::object();
                    for (const auto& [len, r] : row.tcc_by_window)
                        tw[std::to_string(len)] = r.defined() ? json(r.to_string()) : json(nullptr);
                    j["tcc_by_window"] = std::move(tw);
                    j["overlap_target"] = row.overlap_target.defined()
                                              ? json(row.overlap_target.to_string()) : json(nullptr);
                    j["overlap_preceding"] = row.overlap_preceding.defined()
                                                 ? json(row.overlap_preceding.to_string())
                                                 : json(nullptr);
                    j["involvement"] = row.involvement.defined()
                                           ? json(row.involvement.to_string()) : json(nullptr);
                    if (!row.warnings.empty()) j["warnings"] = row.warnings;
                    arr.push_back(std::move(j));
                }
                emit(o_ts, arr.dump(2) + "\n", make_manifest("timeseries", o_ts, cfg));
            } else {
                emit(o_ts, timeseries_to_csv(rows, opts), make_manifest("timeseries", o_ts, cfg));
            }
        } else if (cmd_synth->parsed()) {
            synth_cfg.authors_per_paper = parse_dist(dist_spec);
            SynthLog log;
            Corpus c = generate_synthetic(synth_cfg, &log);
            std::ofstream f(o_synth.out, std::ios::binary);
            if (!f) throw DataError("cannot open output file: " + o_synth.out);
            serialize_corpus(c, f, CorpusFormat::Jsonl);
            json side;
            side["config"] = {{"start_year", synth_cfg.start_year},
                              {"years", synth_cfg.years},
                              {"papers_per_year", synth_cfg.papers_per_year},
                              {"authors_per_paper", dist_spec},
                              {"pool_growth", synth_cfg.author_pool_growth},
                              {"repeat_prob", synth_cfg.repeat_collab_prob},
                              {"closure_prob", synth_cfg.closure_prob},
                              {"seed", synth_cfg.seed}};
            side["log"]["planted_closures"] = log.planted_closures;
            side["log"]["planted_repeats"] = log.planted_repeats;
            json by_year = json::object();
            for (const auto& [y, n] : log.planted_closures_by_year)
                by_year[std::to_string(y)] = n;
            side["log"]["planted_closures_by_year"] = std::move(by_year);
            std::ofstream sf(o_synth.out + ".synth.json");
            sf << side.dump(2) << '\n';
        } else if (cmd_edges->parsed()) {
            Corpus c = load_filtered(o_edges);
            std::ostringstream os;
            export_edge_list(project_one_mode(c), c, os);
            emit(o_edges, os.str(), make_manifest("edges", o_edges, {}));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
