#include "fsel/run.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsel/csv.hpp"
#include "fsel/error.hpp"
#include "fsel/report.hpp"
#include "fsel/sfs.hpp"
#include "fsel/version.hpp"
#include "fsel/wrapper.hpp"

namespace fsel {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

FeatureSubset subset_from_names(const Dataset& d, const std::string& comma_list) {
    FeatureSubset s;
    s.dataset_name = d.name;
    std::istringstream in(comma_list);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        const int idx = d.feature_index(token);
        if (idx < 0)
            throw ConfigError("features: unknown feature name '" + token + "'");
        s.indices.push_back(idx);
    }
    if (s.indices.empty()) throw ConfigError("features: empty feature list");
    return s;
}

/// Surviving ranked order from an influence report CSV (rows with remain=Y,
/// in rank order).
FeatureSubset subset_from_ranking_file(const Dataset& d, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("ranking_file: cannot read " + path);
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("ranking_file: " + path + " is empty");
    const auto header = split_csv_line(line);
    int idx_col = -1, remain_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "feature_index") idx_col = static_cast<int>(c);
        if (header[c] == "remain") remain_col = static_cast<int>(c);
    }
    if (idx_col < 0 || remain_col < 0)
        throw ConfigError("ranking_file: " + path +
                          " lacks feature_index/remain columns (influence CSV expected)");
    FeatureSubset s;
    s.dataset_name = d.name;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells[static_cast<std::size_t>(remain_col)] != "Y") continue;
        int value = 0;
        const auto& cell = cells[static_cast<std::size_t>(idx_col)];
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc{} || ptr != cell.data() + cell.size())
            throw ConfigError("ranking_file: bad feature_index '" + cell + "'");
        s.indices.push_back(value);
    }
    if (s.indices.empty())
        throw ConfigError("ranking_file: no surviving features in " + path);
    return s;
}

std::vector<std::pair<std::string, std::string>> estimate_summary(
    const std::string& prefix, const AccuracyEstimate& est) {
    return {{prefix + "_mean", fmt_accuracy(est.mean)},
            {prefix + "_std", fmt_accuracy(est.stddev)},
            {prefix + "_repeats", std::to_string(est.repeats())}};
}

}  // namespace

std::string resolve_out_dir(const ExperimentConfig& cfg) {
    if (!cfg.out_dir.empty()) return cfg.out_dir;
    std::string root = "runs";
    if (const char* env = std::getenv("FSEL_OUT_ROOT"); env && *env) root = env;
    std::string name = cfg.dataset_name;
    if (name.empty()) {
        name = cfg.dataset_path;
        if (const auto slash = name.find_last_of("/\\"); slash != std::string::npos)
            name = name.substr(slash + 1);
        if (const auto dot = name.find_last_of('.'); dot != std::string::npos)
            name = name.substr(0, dot);
    }
    return root + "/" + name + "-" + cfg.classifier.kind_name() + "-" +
           to_string(cfg.pipeline);
}

RunManifest run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const auto started = std::chrono::steady_clock::now();

    CsvSchema schema;
    schema.label_column = cfg.label_column;
    schema.missing_sentinel = cfg.missing_sentinel;
    schema.numeric_columns = cfg.numeric_columns;
    schema.categorical_columns = cfg.categorical_columns;
    Dataset d = load_csv(cfg.dataset_path, schema);
    if (!cfg.dataset_name.empty()) d.name = cfg.dataset_name;
    if (cfg.missing_policy == ImputePolicy::drop_rows)
        d = impute_missing(d, ImputePolicy::drop_rows);

    EvalConfig eval;
    eval.folds = cfg.folds;
    eval.repeats = cfg.repeats;
    eval.seed = cfg.seed;
    eval.classifier = cfg.classifier;
    eval.threads = cfg.threads;

    const std::string out_dir = resolve_out_dir(cfg);
    ReportWriter writer(out_dir, cfg.format);

    RunManifest manifest;
    manifest.version = kVersion;
    manifest.seed = cfg.seed;
    manifest.config_text = serialize_config(cfg);

    auto finish = [&](const std::string& status, const std::string& error) {
        manifest.status = status;
        manifest.error = error;
        manifest.files = digest_files(out_dir, writer.written());
        manifest.duration_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count());
        write_manifest(manifest, out_dir + "/manifest.json");
    };

    try {
        switch (cfg.pipeline) {
            case Pipeline::evaluate: {
                const FeatureSubset subset = cfg.features.empty()
                                                 ? FeatureSubset::all_of(d)
                                                 : subset_from_names(d, cfg.features);
                const AccuracyEstimate est = repeated_cv(d, subset, eval);
                writer.write_table("evaluate", evaluate_table(d.name, cfg.classifier.kind_name(),
                                                              eval, subset.size(), est));
                writer.write_keyvalue("summary", estimate_summary("accuracy", est));
                break;
            }
            case Pipeline::influence: {
                const InfluenceReport report = influence_rank(d, eval);
                writer.write_table("influence", influence_table(report));
                auto summary = estimate_summary("baseline", report.baseline);
                summary.emplace_back("survivors", std::to_string(report.ranked_order.size()));
                summary.emplace_back(
                    "removed", std::to_string(report.entries.size() - report.ranked_order.size()));
                writer.write_keyvalue("summary", summary);
                break;
            }
            case Pipeline::lift: {
                const FeatureSubset ranked =
                    !cfg.ranking_file.empty() ? subset_from_ranking_file(d, cfg.ranking_file)
                                              : subset_from_names(d, cfg.features);
                const LiftingReport report =
                    lifting_select(d, ranked, eval, cfg.lifting_mode);
                writer.write_table("lifting", lifting_table(report));
                std::vector<std::pair<int, double>> series;
                for (std::size_t i = 0; i < report.steps.size(); ++i)
                    series.emplace_back(static_cast<int>(i + 1), report.steps[i].estimate.mean);
                writer.write_table("graph1", accuracy_series(series, "step"));
                auto summary = estimate_summary("selected", report.selected_estimate);
                summary.emplace_back("selected_size", std::to_string(report.selected.size()));
                writer.write_keyvalue("summary", summary);
                break;
            }
            case Pipeline::select: {
                const SelectionResult result = select_features(d, eval, cfg.lifting_mode);
                writer.write_table("select", selection_table(d.name, cfg.classifier.kind_name(),
                                                             d, result));
                writer.write_table("influence", influence_table(result.influence));
                writer.write_table("lifting", lifting_table(result.lifting));
                std::vector<std::pair<int, double>> series;
                for (std::size_t i = 0; i < result.lifting.steps.size(); ++i)
                    series.emplace_back(static_cast<int>(i + 1),
                                        result.lifting.steps[i].estimate.mean);
                writer.write_table("graph1", accuracy_series(series, "step"));
                auto summary = estimate_summary("before", result.before);
                const auto after = estimate_summary("after", result.after);
                summary.insert(summary.end(), after.begin(), after.end());
                summary.emplace_back("size_before", std::to_string(result.size_before));
                summary.emplace_back("size_after", std::to_string(result.size_after));
                writer.write_keyvalue("summary", summary);
                break;
            }
            case Pipeline::sfs: {
                FeatureSubset pool = FeatureSubset::all_of(d);
                if (!cfg.ranking_file.empty())
                    pool = subset_from_ranking_file(d, cfg.ranking_file);
                else if (!cfg.features.empty())
                    pool = subset_from_names(d, cfg.features);
                const SfsTrace trace = sfs_search(d, pool, eval);
                const auto [best, best_est] = best_subset(trace);
                writer.write_table("sfs", sfs_table(trace, d));
                writer.write_table("sfs_candidates", sfs_candidates_table(trace, d));
                std::vector<std::pair<int, double>> series;
                for (const auto& step : trace.steps)
                    series.emplace_back(static_cast<int>(step.subset.size()), step.best.mean);
                writer.write_table("graph2", accuracy_series(series, "size"));
                auto summary = estimate_summary("best", best_est);
                summary.emplace_back("best_size", std::to_string(best.size()));
                summary.emplace_back("best_combination",
                                     combination_string(best.indices, pool.indices));
                writer.write_keyvalue("summary", summary);
                break;
            }
        }
    } catch (const Error& e) {
        finish("failed", e.what());
        throw;
    }
    finish("ok", "");
    return manifest;
}

namespace {

struct ParsedTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

ParsedTable parse_table_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("compare: cannot read " + path);
    ParsedTable t;
    std::string line;
    if (std::getline(in, line)) t.columns = split_csv_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        t.rows.push_back(split_csv_line(line));
    }
    return t;
}

bool parse_number(const std::string& s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

CompareResult compare_manifests(const std::string& manifest_a, const std::string& manifest_b,
                                double tolerance) {
    const RunManifest ma = read_manifest(manifest_a);
    const RunManifest mb = read_manifest(manifest_b);
    const std::string dir_a = std::filesystem::path(manifest_a).parent_path().string();
    const std::string dir_b = std::filesystem::path(manifest_b).parent_path().string();

    if (ma.files.size() != mb.files.size())
        throw DataError("compare: manifests list different file counts (" +
                        std::to_string(ma.files.size()) + " vs " +
                        std::to_string(mb.files.size()) + ")");

    CompareResult result;
    for (const auto& fa : ma.files) {
        const FileDigest* fb = nullptr;
        for (const auto& candidate : mb.files)
            if (candidate.path == fa.path) {
                fb = &candidate;
                break;
            }
        if (!fb) throw DataError("compare: file " + fa.path + " missing from second manifest");

        const std::string path_a = (dir_a.empty() ? "." : dir_a) + "/" + fa.path;
        const std::string path_b = (dir_b.empty() ? "." : dir_b) + "/" + fb->path;

        if (ends_with(fa.path, ".csv") || ends_with(fa.path, ".kv")) {
            const bool kv = ends_with(fa.path, ".kv");
            ParsedTable ta, tb;
            if (kv) {
                // key = value lines become two-column rows
                auto parse_kv = [](const std::string& path) {
                    std::ifstream in(path, std::ios::binary);
                    if (!in) throw DataError("compare: cannot read " + path);
                    ParsedTable t;
                    t.columns = {"key", "value"};
                    std::string line;
                    while (std::getline(in, line)) {
                        const auto eq = line.find(" = ");
                        if (eq == std::string::npos) continue;
                        t.rows.push_back({line.substr(0, eq), line.substr(eq + 3)});
                    }
                    return t;
                };
                ta = parse_kv(path_a);
                tb = parse_kv(path_b);
            } else {
                ta = parse_table_file(path_a);
                tb = parse_table_file(path_b);
            }
            if (ta.columns != tb.columns)
                throw DataError("compare: " + fa.path + ": column mismatch");
            if (ta.rows.size() != tb.rows.size())
                throw DataError("compare: " + fa.path + ": row count " +
                                std::to_string(ta.rows.size()) + " vs " +
                                std::to_string(tb.rows.size()));
            for (std::size_t r = 0; r < ta.rows.size(); ++r) {
                if (ta.rows[r].size() != tb.rows[r].size())
                    throw DataError("compare: " + fa.path + ": ragged row " +
                                    std::to_string(r + 1));
                for (std::size_t c = 0; c < ta.rows[r].size(); ++c) {
                    double va, vb;
                    if (!parse_number(ta.rows[r][c], va) || !parse_number(tb.rows[r][c], vb))
                        continue;  // strings are not compared
                    const double diff = va > vb ? va - vb : vb - va;
                    if (diff > tolerance) {
                        result.within_tolerance = false;
                        result.differences.push_back(
                            fa.path + " row " + std::to_string(r + 1) + " col " +
                            (kv ? ta.rows[r][0] : ta.columns[c]) + ": " + ta.rows[r][c] +
                            " vs " + tb.rows[r][c]);
                    }
                }
            }
        } else if (fa.sha256 != fb->sha256) {
            result.within_tolerance = false;
            result.differences.push_back(fa.path + ": content digests differ");
        }
    }
    return result;
}

}  // namespace fsel
