#include "fsel/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fsel/error.hpp"

namespace fsel {

std::string fmt_accuracy(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

ReportWriter::ReportWriter(std::string out_dir, ReportFormat format)
    : out_dir_(std::move(out_dir)), format_(format) {
    std::filesystem::create_directories(out_dir_);
}

void ReportWriter::emit(const std::string& filename, const std::string& content) {
    const std::string path = out_dir_ + "/" + filename;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write report file: " + path);
    out << content;
    written_.push_back(filename);
}

namespace {

bool cell_is_number(const std::string& s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string render_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "," : "") << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << "\n";
    }
    return out.str();
}

std::string render_md(const Table& t) {
    std::ostringstream out;
    out << "|";
    for (const auto& col : t.columns) out << " " << col << " |";
    out << "\n|";
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << " --- |";
    out << "\n";
    for (const auto& row : t.rows) {
        out << "|";
        for (const auto& cell : row) out << " " << cell << " |";
        out << "\n";
    }
    return out.str();
}

std::string render_jsonl(const Table& t) {
    std::ostringstream out;
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < t.columns.size() && c < row.size(); ++c) {
            long long whole = 0;
            double num = 0.0;
            auto [p, ec] = std::from_chars(row[c].data(), row[c].data() + row[c].size(), whole);
            if (ec == std::errc{} && p == row[c].data() + row[c].size())
                obj[t.columns[c]] = whole;
            else if (cell_is_number(row[c], num))
                obj[t.columns[c]] = num;
            else
                obj[t.columns[c]] = row[c];
        }
        out << obj.dump() << "\n";
    }
    return out.str();
}

}  // namespace

void ReportWriter::write_table(const std::string& basename, const Table& table) {
    switch (format_) {
        case ReportFormat::csv: emit(basename + ".csv", render_csv(table)); break;
        case ReportFormat::md: emit(basename + ".md", render_md(table)); break;
        case ReportFormat::jsonl: emit(basename + ".jsonl", render_jsonl(table)); break;
    }
}

void ReportWriter::write_keyvalue(
    const std::string& basename,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::ostringstream out;
    for (const auto& [key, value] : pairs) out << key << " = " << value << "\n";
    emit(basename + ".kv", out.str());
}

Table evaluate_table(const std::string& dataset, const std::string& classifier,
                     const EvalConfig& cfg, std::size_t n_features,
                     const AccuracyEstimate& estimate) {
    Table t;
    t.columns = {"dataset", "classifier", "folds", "repeats", "seed",
                 "n_features", "mean", "std"};
    t.rows.push_back({dataset, classifier, std::to_string(cfg.folds),
                      std::to_string(cfg.repeats), std::to_string(cfg.seed),
                      std::to_string(n_features), fmt_accuracy(estimate.mean),
                      fmt_accuracy(estimate.stddev)});
    return t;
}

Table influence_table(const InfluenceReport& report) {
    Table t;
    t.columns = {"rank", "feature_index", "feature", "influence", "remain"};
    std::size_t rank = 1;
    for (std::size_t pos : report.display_order()) {
        const auto& e = report.entries[pos];
        t.rows.push_back({std::to_string(rank++), std::to_string(e.feature), e.name,
                          fmt_accuracy(e.influence), e.removed ? "N" : "Y"});
    }
    return t;
}

Table lifting_table(const LiftingReport& report) {
    Table t;
    t.columns = {"step", "feature_index", "feature", "accuracy", "lift", "remain"};
    int step = 1;
    for (const auto& s : report.steps) {
        t.rows.push_back({std::to_string(step++), std::to_string(s.feature), s.name,
                          fmt_accuracy(s.estimate.mean), fmt_accuracy(s.lift),
                          s.kept ? "Y" : "N"});
    }
    return t;
}

Table selection_table(const std::string& dataset, const std::string& classifier,
                      const Dataset& d, const SelectionResult& result) {
    std::string names;
    for (std::size_t i = 0; i < result.lifting.selected.indices.size(); ++i) {
        if (i) names += ";";
        names += d.features[static_cast<std::size_t>(result.lifting.selected.indices[i])].name;
    }
    Table t;
    t.columns = {"dataset",    "classifier",  "n_features_before", "mean_before",
                 "std_before", "n_features_after", "mean_after",   "std_after",
                 "selected_features"};
    t.rows.push_back({dataset, classifier, std::to_string(result.size_before),
                      fmt_accuracy(result.before.mean), fmt_accuracy(result.before.stddev),
                      std::to_string(result.size_after), fmt_accuracy(result.after.mean),
                      fmt_accuracy(result.after.stddev), names});
    return t;
}

std::string pool_alias(std::size_t position) {
    if (position < 26) return std::string(1, static_cast<char>('a' + position));
    return "f" + std::to_string(position);
}

std::string combination_string(const std::vector<int>& subset, const std::vector<int>& pool) {
    std::vector<std::size_t> positions;
    for (int feature : subset) {
        const auto it = std::find(pool.begin(), pool.end(), feature);
        if (it == pool.end()) continue;
        positions.push_back(static_cast<std::size_t>(it - pool.begin()));
    }
    std::sort(positions.begin(), positions.end());
    std::string out;
    for (auto p : positions) out += pool_alias(p);
    return out;
}

Table sfs_table(const SfsTrace& trace, const Dataset& d) {
    (void)d;
    Table t;
    t.columns = {"size", "accuracy", "std", "combination"};
    for (const auto& step : trace.steps) {
        t.rows.push_back({std::to_string(step.subset.size()), fmt_accuracy(step.best.mean),
                          fmt_accuracy(step.best.stddev),
                          combination_string(step.subset, trace.pool.indices)});
    }
    return t;
}

Table sfs_candidates_table(const SfsTrace& trace, const Dataset& d) {
    Table t;
    t.columns = {"step", "feature_index", "feature", "accuracy"};
    for (const auto& step : trace.steps) {
        for (const auto& cand : step.candidates) {
            t.rows.push_back({std::to_string(step.step), std::to_string(cand.feature),
                              d.features[static_cast<std::size_t>(cand.feature)].name,
                              fmt_accuracy(cand.accuracy)});
        }
    }
    return t;
}

Table accuracy_series(const std::vector<std::pair<int, double>>& points,
                      const std::string& x_name) {
    Table t;
    t.columns = {x_name, "accuracy"};
    for (const auto& [x, acc] : points)
        t.rows.push_back({std::to_string(x), fmt_accuracy(acc)});
    return t;
}

}  // namespace fsel
