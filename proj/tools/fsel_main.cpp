// fsel: run feature-selection experiments from declarative configs.
//
// Exit codes: 0 success / within tolerance, 2 config error, 3 runtime error,
// 4 compare outside tolerance.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fsel/config.hpp"
#include "fsel/error.hpp"
#include "fsel/run.hpp"
#include "fsel/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitTolerance = 4;

struct CommonFlags {
    std::string config_path;
    std::string dataset;
    std::string label;
    std::string out;
    std::string format;
    std::string features;
    std::string ranking_file;
    std::string classifier;
    std::string lifting_mode;
    std::int64_t seed = -1;
    int repeats = -1;
    int folds = -1;
    int threads = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Config file (key = value lines)");
    cmd->add_option("--dataset", flags.dataset, "Dataset CSV path (overrides config)");
    cmd->add_option("--label", flags.label, "Label column name (overrides config)");
    cmd->add_option("--classifier", flags.classifier, "cart or knn (overrides config)");
    cmd->add_option("--seed", flags.seed, "RNG seed (overrides config)");
    cmd->add_option("--repeats", flags.repeats, "Repeated CV count (overrides config)");
    cmd->add_option("--folds", flags.folds, "CV folds (overrides config)");
    cmd->add_option("--threads", flags.threads, "Max worker threads, 0 = all cores");
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_option("--format", flags.format, "Report format: csv, md or jsonl");
    cmd->add_option("--features", flags.features, "Comma-separated feature names");
    cmd->add_option("--ranking-file", flags.ranking_file,
                    "Influence report CSV supplying a ranked order");
    cmd->add_option("--lifting-mode", flags.lifting_mode, "cumulative or revert");
}

fsel::ExperimentConfig build_config(const CommonFlags& flags, fsel::Pipeline pipeline) {
    fsel::ExperimentConfig cfg;
    if (!flags.config_path.empty()) cfg = fsel::load_config(flags.config_path);
    cfg.pipeline = pipeline;
    if (!flags.dataset.empty()) cfg.dataset_path = flags.dataset;
    if (!flags.label.empty()) cfg.label_column = flags.label;
    if (!flags.classifier.empty()) {
        if (flags.classifier == "cart")
            cfg.classifier.params = fsel::CartParams{};
        else if (flags.classifier == "knn")
            cfg.classifier.params = fsel::KnnParams{};
        else
            throw fsel::ConfigError("--classifier: expected cart or knn");
    }
    if (flags.seed >= 0) cfg.seed = static_cast<std::uint64_t>(flags.seed);
    if (flags.repeats >= 0) cfg.repeats = flags.repeats;
    if (flags.folds >= 0) cfg.folds = flags.folds;
    if (flags.threads >= 0) cfg.threads = flags.threads;
    if (!flags.out.empty()) cfg.out_dir = flags.out;
    if (!flags.features.empty()) cfg.features = flags.features;
    if (!flags.ranking_file.empty()) cfg.ranking_file = flags.ranking_file;
    if (!flags.format.empty()) {
        if (flags.format == "csv") cfg.format = fsel::ReportFormat::csv;
        else if (flags.format == "md") cfg.format = fsel::ReportFormat::md;
        else if (flags.format == "jsonl") cfg.format = fsel::ReportFormat::jsonl;
        else throw fsel::ConfigError("--format: expected csv, md or jsonl");
    }
    if (!flags.lifting_mode.empty()) {
        if (flags.lifting_mode == "cumulative")
            cfg.lifting_mode = fsel::LiftingMode::cumulative;
        else if (flags.lifting_mode == "revert")
            cfg.lifting_mode = fsel::LiftingMode::revert;
        else
            throw fsel::ConfigError("--lifting-mode: expected cumulative or revert");
    }
    return cfg;
}

int run_pipeline(const CommonFlags& flags, fsel::Pipeline pipeline) {
    const fsel::ExperimentConfig cfg = build_config(flags, pipeline);
    const fsel::RunManifest manifest = fsel::run_experiment(cfg);
    std::cout << "wrote " << manifest.files.size() << " report file(s) to "
              << fsel::resolve_out_dir(cfg) << " in " << manifest.duration_ms << " ms\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wrapper feature selection experiment runner"};
    app.set_version_flag("--version", std::string("fsel ") + fsel::kVersion);
    app.require_subcommand(1);

    CommonFlags flags;
    auto* evaluate = app.add_subcommand("evaluate", "Repeated CV accuracy of a feature set");
    auto* influence = app.add_subcommand("influence", "Leave-one-feature-out influence ranking");
    auto* lift = app.add_subcommand("lift", "Forward recursion over a ranked feature order");
    auto* select = app.add_subcommand("select", "Two-pass selection: influence then lifting");
    auto* sfs = app.add_subcommand("sfs", "Sequential forward selection over a pool");
    for (auto* cmd : {evaluate, influence, lift, select, sfs}) add_common(cmd, flags);

    auto* compare = app.add_subcommand("compare", "Numeric diff of two run manifests");
    std::string manifest_a, manifest_b;
    double tolerance = 0.0;
    compare->add_option("manifest_a", manifest_a, "First manifest.json")->required();
    compare->add_option("manifest_b", manifest_b, "Second manifest.json")->required();
    compare->add_option("--tolerance", tolerance,
                        "Max numeric difference in percentage points (default 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (evaluate->parsed()) return run_pipeline(flags, fsel::Pipeline::evaluate);
        if (influence->parsed()) return run_pipeline(flags, fsel::Pipeline::influence);
        if (lift->parsed()) return run_pipeline(flags, fsel::Pipeline::lift);
        if (select->parsed()) return run_pipeline(flags, fsel::Pipeline::select);
        if (sfs->parsed()) return run_pipeline(flags, fsel::Pipeline::sfs);
        if (compare->parsed()) {
            const auto result = fsel::compare_manifests(manifest_a, manifest_b, tolerance);
            for (const auto& line : result.differences) std::cout << line << "\n";
            if (result.within_tolerance) {
                std::cout << "reports agree within tolerance " << tolerance << "\n";
                return kExitOk;
            }
            std::cout << result.differences.size() << " field(s) outside tolerance "
                      << tolerance << "\n";
            return kExitTolerance;
        }
    } catch (const fsel::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fsel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
