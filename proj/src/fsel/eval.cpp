#include "fsel/eval.hpp"

#include <algorithm>
#include <cmath>

#include "fsel/error.hpp"
#include "fsel/parallel.hpp"
#include "fsel/preprocess.hpp"

namespace fsel {

void EvalConfig::validate(const Dataset& d) const {
    if (folds < 2) throw ConfigError("eval.folds: must be >= 2");
    if (repeats < 1) throw ConfigError("eval.repeats: must be >= 1");
    classifier.validate();
    const auto counts = d.class_counts();
    for (std::size_t c = 0; c < d.n_classes(); ++c) {
        const auto count = counts[c];
        if (count < static_cast<std::size_t>(folds))
            throw EvalError("eval: class '" + d.class_names[c] + "' has " +
                            std::to_string(count) + " samples, fewer than folds=" +
                            std::to_string(folds));
    }
}

std::vector<int> FoldAssignment::test_rows(int fold) const {
    std::vector<int> rows;
    for (std::size_t i = 0; i < fold_of_sample.size(); ++i)
        if (fold_of_sample[i] == fold) rows.push_back(static_cast<int>(i));
    return rows;
}

std::vector<int> FoldAssignment::train_rows(int fold) const {
    std::vector<int> rows;
    for (std::size_t i = 0; i < fold_of_sample.size(); ++i)
        if (fold_of_sample[i] != fold) rows.push_back(static_cast<int>(i));
    return rows;
}

FoldAssignment stratified_folds(const std::vector<std::int32_t>& labels, int folds, Rng& rng) {
    if (folds < 2) throw ConfigError("stratified_folds: folds must be >= 2");
    std::int32_t n_classes = 0;
    for (auto label : labels) n_classes = std::max(n_classes, label + 1);

    std::vector<std::vector<int>> by_class(static_cast<std::size_t>(n_classes));
    for (std::size_t i = 0; i < labels.size(); ++i)
        by_class[static_cast<std::size_t>(labels[i])].push_back(static_cast<int>(i));

    FoldAssignment fa;
    fa.folds = folds;
    fa.fold_of_sample.assign(labels.size(), -1);
    std::vector<std::size_t> fold_load(static_cast<std::size_t>(folds), 0);

    for (std::size_t c = 0; c < by_class.size(); ++c) {
        auto& members = by_class[c];
        if (members.size() < static_cast<std::size_t>(folds))
            throw EvalError("stratified_folds: class index " + std::to_string(c) + " has " +
                            std::to_string(members.size()) + " samples, fewer than folds=" +
                            std::to_string(folds));
        rng.shuffle(members);
        const std::size_t base = members.size() / static_cast<std::size_t>(folds);
        const std::size_t rem = members.size() % static_cast<std::size_t>(folds);

        // The `rem` extra samples go to the currently least-loaded folds
        // (ties toward the lowest fold index), keeping overall sizes within 1.
        std::vector<int> fold_order(static_cast<std::size_t>(folds));
        for (int f = 0; f < folds; ++f) fold_order[static_cast<std::size_t>(f)] = f;
        std::stable_sort(fold_order.begin(), fold_order.end(), [&](int a, int b) {
            return fold_load[static_cast<std::size_t>(a)] < fold_load[static_cast<std::size_t>(b)];
        });

        std::size_t cursor = 0;
        for (std::size_t pos = 0; pos < fold_order.size(); ++pos) {
            const int fold = fold_order[pos];
            const std::size_t take = base + (pos < rem ? 1 : 0);
            for (std::size_t i = 0; i < take; ++i)
                fa.fold_of_sample[static_cast<std::size_t>(members[cursor++])] = fold;
            fold_load[static_cast<std::size_t>(fold)] += take;
        }
    }
    return fa;
}

FoldAssignment folds_for_repeat(const std::vector<std::int32_t>& labels,
                                const EvalConfig& cfg, int repeat) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(repeat)));
    return stratified_folds(labels, cfg.folds, rng);
}

AccuracyEstimate make_estimate(std::vector<double> run_accuracies) {
    AccuracyEstimate est;
    est.run_accuracies = std::move(run_accuracies);
    const std::size_t n = est.run_accuracies.size();
    if (n == 0) return est;
    double sum = 0.0;
    for (double a : est.run_accuracies) sum += a;
    est.mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (double a : est.run_accuracies) sq += (a - est.mean) * (a - est.mean);
    est.stddev = std::sqrt(sq / static_cast<double>(n));
    return est;
}

double cross_val_accuracy(const Dataset& d, const FeatureSubset& s, const EvalConfig& cfg,
                          const FoldAssignment& fa, const ClassifierFactory& factory) {
    if (fa.fold_of_sample.size() != d.n_samples())
        throw EvalError("cross_val_accuracy: fold assignment does not match dataset");
    const Dataset projected = project(d, s);

    std::size_t correct = 0;
    for (int fold = 0; fold < fa.folds; ++fold) {
        try {
            const auto train_idx = fa.train_rows(fold);
            const auto test_idx = fa.test_rows(fold);
            Dataset train = slice_rows(projected, train_idx);
            Dataset test = slice_rows(projected, test_idx);

            // Preprocessing statistics come from the training part only.
            if (train.has_missing() || test.has_missing()) {
                const ImputeStats stats = fit_impute(train);
                train = apply_impute(train, stats);
                test = apply_impute(test, stats);
            }
            auto model = factory ? factory(cfg.classifier) : make_classifier(cfg.classifier);
            if (model->wants_normalization()) {
                const NormStats stats = fit_normalize(train, NormMethod::min_max);
                train = apply_normalize(train, stats);
                test = apply_normalize(test, stats);
            }
            model->fit(train);
            const auto predictions = model->predict(test);
            for (std::size_t i = 0; i < predictions.size(); ++i)
                correct += predictions[i] == test.labels[i];
        } catch (const Error& e) {
            throw EvalError("fold " + std::to_string(fold) + ": " + e.what());
        }
    }
    return 100.0 * static_cast<double>(correct) / static_cast<double>(d.n_samples());
}

AccuracyEstimate repeated_cv(const Dataset& d, const FeatureSubset& s, const EvalConfig& cfg,
                             const ClassifierFactory& factory) {
    cfg.validate(d);
    std::vector<double> runs(static_cast<std::size_t>(cfg.repeats), 0.0);
    parallel_for(runs.size(), cfg.threads, [&](std::size_t r) {
        const FoldAssignment fa = folds_for_repeat(d.labels, cfg, static_cast<int>(r));
        runs[r] = cross_val_accuracy(d, s, cfg, fa, factory);
    });
    return make_estimate(std::move(runs));
}

}  // namespace fsel
