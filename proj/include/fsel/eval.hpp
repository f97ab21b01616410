#pragma once

#include <cstdint>
#include <vector>

#include "fsel/classifier.hpp"
#include "fsel/dataset.hpp"
#include "fsel/rng.hpp"

namespace fsel {

/// Cross-validation protocol: stratified `folds`-fold, repeated `repeats`
/// times, everything derived deterministically from `seed`. `threads` is an
/// execution knob only; results are bit-identical for any value.
struct EvalConfig {
    int folds = 5;
    int repeats = 100;
    std::uint64_t seed = 0;
    ClassifierSpec classifier;
    int threads = 1;

    /// Throws ConfigError/EvalError unless folds >= 2, repeats >= 1 and every
    /// class has at least `folds` samples (stratification feasibility).
    void validate(const Dataset& d) const;
};

struct FoldAssignment {
    int folds = 0;
    std::vector<int> fold_of_sample;

    std::vector<int> test_rows(int fold) const;
    std::vector<int> train_rows(int fold) const;
};

/// Stratified partition: per class and per fold the sample counts differ by
/// at most 1, and overall fold sizes differ by at most 1. Classes are dealt
/// in shuffled order with each remainder going to the currently smallest
/// fold. Deterministic given the rng state. Throws EvalError when a class
/// has fewer samples than folds.
FoldAssignment stratified_folds(const std::vector<std::int32_t>& labels, int folds, Rng& rng);

/// The assignment used by repeat `r`: stratified_folds seeded with
/// derive_seed(cfg.seed, r). Depends only on (seed, r, labels) — never on the
/// feature subset — so every subset evaluated under the same config sees
/// identical folds (paired comparisons).
FoldAssignment folds_for_repeat(const std::vector<std::int32_t>& labels,
                                const EvalConfig& cfg, int repeat);

/// Mean and dispersion of repeated cross-validated accuracy, in percent.
/// mean is the left-to-right arithmetic mean of run_accuracies and std the
/// population (divide by n) standard deviation, both recomputable exactly
/// from the stored runs.
struct AccuracyEstimate {
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<double> run_accuracies;

    int repeats() const { return static_cast<int>(run_accuracies.size()); }
};

AccuracyEstimate make_estimate(std::vector<double> run_accuracies);

/// One stratified CV pass: per fold, fit imputation (median/mode) on the
/// training part, min-max scaling too when the classifier asks for it, train,
/// score the held-out fold. Returns 100 * correct / total. Failures are
/// rethrown with the fold index attached.
double cross_val_accuracy(const Dataset& d, const FeatureSubset& s, const EvalConfig& cfg,
                          const FoldAssignment& fa,
                          const ClassifierFactory& factory = nullptr);

/// cfg.repeats independent fold draws (seeds derived from cfg.seed and the
/// repeat index), evaluated and aggregated. Repeats may run concurrently;
/// results are identical to sequential execution.
AccuracyEstimate repeated_cv(const Dataset& d, const FeatureSubset& s, const EvalConfig& cfg,
                             const ClassifierFactory& factory = nullptr);

}  // namespace fsel
