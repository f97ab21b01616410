#include "fsel/config.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsel/error.hpp"

namespace fsel {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::string join_list(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i];
    }
    return out;
}

long long parse_int(const std::string& key, const std::string& value) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

}  // namespace

std::string to_string(Pipeline p) {
    switch (p) {
        case Pipeline::evaluate: return "evaluate";
        case Pipeline::influence: return "influence";
        case Pipeline::lift: return "lift";
        case Pipeline::select: return "select";
        case Pipeline::sfs: return "sfs";
    }
    return "evaluate";
}

std::string to_string(ReportFormat f) {
    switch (f) {
        case ReportFormat::csv: return "csv";
        case ReportFormat::md: return "md";
        case ReportFormat::jsonl: return "jsonl";
    }
    return "csv";
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    CartParams cart;
    KnnParams knn;
    std::string classifier_kind = "cart";

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            if (section != "cart" && section != "knn")
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (section == "cart") {
            if (key == "min_leaf_size") cart.min_leaf_size = static_cast<int>(parse_int(key, value));
            else if (key == "max_depth") cart.max_depth = static_cast<int>(parse_int(key, value));
            else if (key == "prune") cart.prune = parse_bool(key, value);
            else if (key == "prune_folds") cart.prune_folds = static_cast<int>(parse_int(key, value));
            else throw ConfigError("cart." + key + ": unknown key");
            continue;
        }
        if (section == "knn") {
            if (key == "k") knn.k = static_cast<int>(parse_int(key, value));
            else if (key == "metric") {
                if (value == "city-block") knn.metric = KnnMetric::city_block;
                else if (value == "euclidean") knn.metric = KnnMetric::euclidean;
                else throw ConfigError("knn.metric: expected city-block or euclidean");
            } else if (key == "weighting") {
                if (value == "squared-inverse") knn.weighting = KnnWeighting::squared_inverse;
                else if (value == "uniform") knn.weighting = KnnWeighting::uniform;
                else throw ConfigError("knn.weighting: expected squared-inverse or uniform");
            } else throw ConfigError("knn." + key + ": unknown key");
            continue;
        }

        if (key == "pipeline") {
            if (value == "evaluate") cfg.pipeline = Pipeline::evaluate;
            else if (value == "influence") cfg.pipeline = Pipeline::influence;
            else if (value == "lift") cfg.pipeline = Pipeline::lift;
            else if (value == "select") cfg.pipeline = Pipeline::select;
            else if (value == "sfs") cfg.pipeline = Pipeline::sfs;
            else throw ConfigError("pipeline: unknown pipeline '" + value + "'");
        } else if (key == "dataset") cfg.dataset_path = value;
        else if (key == "label") cfg.label_column = value;
        else if (key == "name") cfg.dataset_name = value;
        else if (key == "missing_sentinel") cfg.missing_sentinel = value;
        else if (key == "categorical") cfg.categorical_columns = split_list(value);
        else if (key == "numeric") cfg.numeric_columns = split_list(value);
        else if (key == "missing") {
            if (value == "median-mode") cfg.missing_policy = ImputePolicy::median_mode;
            else if (value == "drop-rows") cfg.missing_policy = ImputePolicy::drop_rows;
            else throw ConfigError("missing: expected median-mode or drop-rows");
        } else if (key == "classifier") {
            if (value != "cart" && value != "knn")
                throw ConfigError("classifier: expected cart or knn, got '" + value + "'");
            classifier_kind = value;
        } else if (key == "folds") cfg.folds = static_cast<int>(parse_int(key, value));
        else if (key == "repeats") cfg.repeats = static_cast<int>(parse_int(key, value));
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "threads") cfg.threads = static_cast<int>(parse_int(key, value));
        else if (key == "lifting_mode") {
            if (value == "cumulative") cfg.lifting_mode = LiftingMode::cumulative;
            else if (value == "revert") cfg.lifting_mode = LiftingMode::revert;
            else throw ConfigError("lifting_mode: expected cumulative or revert");
        } else if (key == "features") cfg.features = value;
        else if (key == "ranking_file") cfg.ranking_file = value;
        else if (key == "out") cfg.out_dir = value;
        else if (key == "format") {
            if (value == "csv") cfg.format = ReportFormat::csv;
            else if (value == "md") cfg.format = ReportFormat::md;
            else if (value == "jsonl") cfg.format = ReportFormat::jsonl;
            else throw ConfigError("format: expected csv, md or jsonl");
        } else throw ConfigError(key + ": unknown key");
    }

    if (classifier_kind == "cart")
        cfg.classifier.params = cart;
    else
        cfg.classifier.params = knn;
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "pipeline = " << to_string(cfg.pipeline) << "\n";
    out << "dataset = " << cfg.dataset_path << "\n";
    out << "label = " << cfg.label_column << "\n";
    if (!cfg.dataset_name.empty()) out << "name = " << cfg.dataset_name << "\n";
    out << "missing_sentinel = " << cfg.missing_sentinel << "\n";
    if (!cfg.categorical_columns.empty())
        out << "categorical = " << join_list(cfg.categorical_columns) << "\n";
    if (!cfg.numeric_columns.empty())
        out << "numeric = " << join_list(cfg.numeric_columns) << "\n";
    out << "missing = "
        << (cfg.missing_policy == ImputePolicy::median_mode ? "median-mode" : "drop-rows")
        << "\n";
    out << "classifier = " << cfg.classifier.kind_name() << "\n";
    out << "folds = " << cfg.folds << "\n";
    out << "repeats = " << cfg.repeats << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "threads = " << cfg.threads << "\n";
    out << "lifting_mode = "
        << (cfg.lifting_mode == LiftingMode::cumulative ? "cumulative" : "revert") << "\n";
    if (!cfg.features.empty()) out << "features = " << cfg.features << "\n";
    if (!cfg.ranking_file.empty()) out << "ranking_file = " << cfg.ranking_file << "\n";
    if (!cfg.out_dir.empty()) out << "out = " << cfg.out_dir << "\n";
    out << "format = " << to_string(cfg.format) << "\n";
    if (cfg.classifier.is_cart()) {
        const auto& p = cfg.classifier.cart();
        out << "\n[cart]\n";
        out << "min_leaf_size = " << p.min_leaf_size << "\n";
        out << "max_depth = " << p.max_depth << "\n";
        out << "prune = " << (p.prune ? "true" : "false") << "\n";
        out << "prune_folds = " << p.prune_folds << "\n";
    } else {
        const auto& p = cfg.classifier.knn();
        out << "\n[knn]\n";
        out << "k = " << p.k << "\n";
        out << "metric = "
            << (p.metric == KnnMetric::city_block ? "city-block" : "euclidean") << "\n";
        out << "weighting = "
            << (p.weighting == KnnWeighting::squared_inverse ? "squared-inverse" : "uniform")
            << "\n";
    }
    return out.str();
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.dataset_path.empty()) throw ConfigError("dataset: path is required");
    if (!std::filesystem::exists(cfg.dataset_path))
        throw ConfigError("dataset: path does not resolve: " + cfg.dataset_path);
    if (cfg.label_column.empty()) throw ConfigError("label: label column is required");
    if (cfg.folds < 2) throw ConfigError("folds: must be >= 2");
    if (cfg.repeats < 1) throw ConfigError("repeats: must be >= 1");
    if (cfg.threads < 0) throw ConfigError("threads: must be >= 0");
    cfg.classifier.validate();
    if (!cfg.ranking_file.empty() && !std::filesystem::exists(cfg.ranking_file))
        throw ConfigError("ranking_file: path does not resolve: " + cfg.ranking_file);
    if (cfg.pipeline == Pipeline::lift && cfg.ranking_file.empty() && cfg.features.empty())
        throw ConfigError("lift: needs `features` or `ranking_file` for the ranked order");
}

}  // namespace fsel
