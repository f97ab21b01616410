#pragma once

#include <string>
#include <vector>

#include "fsel/dataset.hpp"
#include "fsel/eval.hpp"

namespace fsel {

/// One leave-one-feature-out record. influence = (mean accuracy without this
/// feature) - (baseline mean), in percentage points; negative means the
/// feature was helping.
struct InfluenceEntry {
    int feature = -1;
    std::string name;
    AccuracyEstimate estimate;  // accuracy with this feature removed
    double influence = 0.0;
    bool removed = false;
};

/// Step 1 output: baseline estimate, per-feature influences, and the
/// surviving features sorted ascending by influence (most helpful first).
struct InfluenceReport {
    AccuracyEstimate baseline;
    std::vector<InfluenceEntry> entries;  // in original feature order
    FeatureSubset ranked_order;

    /// Entry positions in presentation order: survivors ascending by
    /// influence, then removed features ascending by influence.
    std::vector<std::size_t> display_order() const;
};

/// Marks removed ⇔ influence > sigma0 (strictly) and rebuilds ranked_order;
/// ties in the sort fall back to ascending feature index. Throws
/// AllFeaturesRemovedError when nothing survives.
void rank_and_filter(InfluenceReport& report, double sigma0);

/// Step 1: baseline on the full feature set, then one evaluation per
/// left-out feature, all under the same derived fold assignments so the
/// influences isolate the feature change. (feature count + 1) repeated-CV
/// runs; the per-feature runs may execute concurrently.
InfluenceReport influence_rank(const Dataset& d, const EvalConfig& cfg,
                               const ClassifierFactory& factory = nullptr);

/// What the forward recursion evaluates after a rejection: `cumulative`
/// keeps rejected features inside later prefixes (each step's baseline is
/// simply the previous step's accuracy); `revert` drops them.
enum class LiftingMode { cumulative, revert };

struct LiftingStep {
    int feature = -1;
    std::string name;
    AccuracyEstimate estimate;  // accuracy of the subset evaluated at this step
    double lift = 0.0;          // estimate.mean - previous step's mean (step 1: - 0)
    bool kept = false;          // lift > 0, strictly
};

struct LiftingReport {
    LiftingMode mode = LiftingMode::cumulative;
    std::vector<LiftingStep> steps;
    FeatureSubset selected;             // kept features, in step order
    AccuracyEstimate selected_estimate; // the kept set re-evaluated on its own
};

/// Step 2: walks `ranked` in order, evaluating the growing subset with the
/// same paired folds as Step 1 and keeping features with a strictly positive
/// lift. |ranked| + 1 repeated-CV runs. Throws EmptySelectionError (carrying
/// the best prefix as a fallback suggestion) when no lift is positive.
LiftingReport lifting_select(const Dataset& d, const FeatureSubset& ranked,
                             const EvalConfig& cfg,
                             LiftingMode mode = LiftingMode::cumulative,
                             const ClassifierFactory& factory = nullptr);

struct SelectionResult {
    InfluenceReport influence;
    LiftingReport lifting;
    AccuracyEstimate before;  // full feature set
    AccuracyEstimate after;   // selected subset
    std::size_t size_before = 0;
    std::size_t size_after = 0;
};

/// The full two-pass algorithm: influence ranking then lifting selection.
SelectionResult select_features(const Dataset& d, const EvalConfig& cfg,
                                LiftingMode mode = LiftingMode::cumulative,
                                const ClassifierFactory& factory = nullptr);

}  // namespace fsel
