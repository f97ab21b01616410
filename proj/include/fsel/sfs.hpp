#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fsel/dataset.hpp"
#include "fsel/eval.hpp"

namespace fsel {

struct SfsCandidate {
    int feature = -1;
    double accuracy = 0.0;  // mean repeated-CV accuracy of subset + feature
};

struct SfsStep {
    int step = 0;                         // 1-based
    std::vector<SfsCandidate> candidates; // ascending by feature index
    int chosen = -1;                      // argmax accuracy, tie -> lowest index
    std::vector<int> subset;              // X_j = X_{j-1} + chosen
    AccuracyEstimate best;                // the chosen candidate's estimate
};

/// Complete greedy forward-selection trace: step j holds the m - j + 1
/// candidate evaluations, the winner, and the nested subset X_j.
struct SfsTrace {
    FeatureSubset pool;
    std::vector<SfsStep> steps;
};

/// Config for one SFS step: cfg with the seed advanced deterministically per
/// step, so all candidates inside a step share fold draws while distinct
/// steps draw fresh folds.
EvalConfig sfs_step_config(const EvalConfig& cfg, int step);

/// Greedy forward selection run to exhaustion of `pool` (m(m+1)/2 repeated-CV
/// runs). Candidate evaluations inside a step may run concurrently.
SfsTrace sfs_search(const Dataset& d, const FeatureSubset& pool, const EvalConfig& cfg,
                    const ClassifierFactory& factory = nullptr);

/// The subset with the highest recorded mean accuracy; ties go to the
/// smaller subset.
std::pair<FeatureSubset, AccuracyEstimate> best_subset(const SfsTrace& trace);

}  // namespace fsel
