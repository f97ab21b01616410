#include "fsel/wrapper.hpp"

#include <algorithm>

#include "fsel/error.hpp"
#include "fsel/parallel.hpp"

namespace fsel {

std::vector<std::size_t> InfluenceReport::display_order() const {
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (entries[a].removed != entries[b].removed) return !entries[a].removed;
        if (entries[a].influence != entries[b].influence)
            return entries[a].influence < entries[b].influence;
        return entries[a].feature < entries[b].feature;
    });
    return order;
}

void rank_and_filter(InfluenceReport& report, double sigma0) {
    for (auto& entry : report.entries) entry.removed = entry.influence > sigma0;

    std::vector<const InfluenceEntry*> survivors;
    for (const auto& entry : report.entries)
        if (!entry.removed) survivors.push_back(&entry);
    if (survivors.empty())
        throw AllFeaturesRemovedError(
            "influence threshold sigma0=" + std::to_string(sigma0) +
            " removed every feature; nothing left to rank");

    std::stable_sort(survivors.begin(), survivors.end(),
                     [](const InfluenceEntry* a, const InfluenceEntry* b) {
                         if (a->influence != b->influence) return a->influence < b->influence;
                         return a->feature < b->feature;
                     });
    report.ranked_order.indices.clear();
    for (const auto* entry : survivors) report.ranked_order.indices.push_back(entry->feature);
}

InfluenceReport influence_rank(const Dataset& d, const EvalConfig& cfg,
                               const ClassifierFactory& factory) {
    if (d.n_features() < 2)
        throw EvalError("influence_rank: need at least 2 features");
    cfg.validate(d);

    const std::size_t l = d.n_features();
    InfluenceReport report;
    report.ranked_order.dataset_name = d.name;
    report.entries.resize(l);

    // Slot 0 is the full-set baseline, slots 1..l the leave-one-out runs.
    // All of them derive folds from cfg.seed alone, so the comparisons are
    // paired; the evaluations are independent and run concurrently, one
    // thread each.
    EvalConfig inner = cfg;
    inner.threads = 1;
    std::vector<AccuracyEstimate> estimates(l + 1);
    parallel_for(l + 1, cfg.threads, [&](std::size_t slot) {
        const FeatureSubset subset =
            slot == 0 ? FeatureSubset::all_of(d)
                      : FeatureSubset::complement_of(d, static_cast<int>(slot - 1));
        estimates[slot] = repeated_cv(d, subset, inner, factory);
    });

    report.baseline = std::move(estimates[0]);
    for (std::size_t i = 0; i < l; ++i) {
        auto& entry = report.entries[i];
        entry.feature = static_cast<int>(i);
        entry.name = d.features[i].name;
        entry.estimate = std::move(estimates[i + 1]);
        entry.influence = entry.estimate.mean - report.baseline.mean;
    }
    rank_and_filter(report, report.baseline.stddev);
    return report;
}

LiftingReport lifting_select(const Dataset& d, const FeatureSubset& ranked,
                             const EvalConfig& cfg, LiftingMode mode,
                             const ClassifierFactory& factory) {
    if (ranked.indices.empty())
        throw EvalError("lifting_select: ranked feature set is empty");
    cfg.validate(d);

    LiftingReport report;
    report.mode = mode;
    report.selected.dataset_name = d.name;

    FeatureSubset prefix;
    prefix.dataset_name = d.name;
    double previous_mean = 0.0;  // empty-set baseline: step 1's lift equals its accuracy

    for (int feature : ranked.indices) {
        prefix.indices.push_back(feature);
        LiftingStep step;
        step.feature = feature;
        step.name = d.features[static_cast<std::size_t>(feature)].name;
        step.estimate = repeated_cv(d, prefix, cfg, factory);
        step.lift = step.estimate.mean - previous_mean;
        step.kept = step.lift > 0.0;
        if (step.kept) report.selected.indices.push_back(feature);

        if (mode == LiftingMode::cumulative) {
            // Rejected features stay in later prefixes; the next baseline is
            // this step's accuracy either way.
            previous_mean = step.estimate.mean;
        } else {
            if (!step.kept) prefix.indices.pop_back();
            if (step.kept) previous_mean = step.estimate.mean;
        }
        report.steps.push_back(std::move(step));
    }

    if (report.selected.indices.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < report.steps.size(); ++i)
            if (report.steps[i].estimate.mean > report.steps[best].estimate.mean) best = i;
        std::vector<int> best_prefix;
        for (std::size_t i = 0; i <= best; ++i)
            best_prefix.push_back(report.steps[i].feature);
        throw EmptySelectionError(
            "lifting_select: no feature had a positive lifting coefficient; best prefix "
            "reached " + std::to_string(report.steps[best].estimate.mean) + "% at size " +
            std::to_string(best + 1), std::move(best_prefix));
    }

    report.selected_estimate = repeated_cv(d, report.selected, cfg, factory);
    return report;
}

SelectionResult select_features(const Dataset& d, const EvalConfig& cfg, LiftingMode mode,
                                const ClassifierFactory& factory) {
    SelectionResult result;
    result.influence = influence_rank(d, cfg, factory);
    result.lifting = lifting_select(d, result.influence.ranked_order, cfg, mode, factory);
    result.before = result.influence.baseline;
    result.after = result.lifting.selected_estimate;
    result.size_before = d.n_features();
    result.size_after = result.lifting.selected.indices.size();
    return result;
}

}  // namespace fsel
