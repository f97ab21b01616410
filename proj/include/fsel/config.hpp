#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsel/classifier.hpp"
#include "fsel/preprocess.hpp"
#include "fsel/wrapper.hpp"

namespace fsel {

enum class Pipeline { evaluate, influence, lift, select, sfs };
enum class ReportFormat { csv, md, jsonl };

std::string to_string(Pipeline p);
std::string to_string(ReportFormat f);

/// Declarative experiment description. The on-disk form is a flat,
/// line-oriented `key = value` text with optional [cart] / [knn] sections,
/// friendly to version-control diffs. parse -> serialize -> parse is the
/// identity.
struct ExperimentConfig {
    Pipeline pipeline = Pipeline::evaluate;

    std::string dataset_path;
    std::string label_column = "class";
    std::string dataset_name;  // defaults to the file stem
    std::string missing_sentinel = "?";
    std::vector<std::string> categorical_columns;
    std::vector<std::string> numeric_columns;
    ImputePolicy missing_policy = ImputePolicy::median_mode;

    ClassifierSpec classifier;

    int folds = 5;
    int repeats = 20;  // desk-scale default; raise via `repeats` or --repeats
    std::uint64_t seed = 42;
    int threads = 0;  // 0 = all cores

    LiftingMode lifting_mode = LiftingMode::cumulative;

    /// Optional comma list of feature names: the subset for `evaluate`, the
    /// pool for `sfs`, or the ranking for `lift`.
    std::string features;
    /// Optional influence report (CSV) whose surviving ranked order feeds
    /// `lift` or `sfs`.
    std::string ranking_file;

    std::string out_dir;  // empty -> <FSEL_OUT_ROOT|runs>/<name>-<classifier>-<pipeline>
    ReportFormat format = ReportFormat::csv;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

/// Field-level validation; throws ConfigError naming the offending key.
/// Checks that referenced paths resolve.
void validate_config(const ExperimentConfig& cfg);

}  // namespace fsel
