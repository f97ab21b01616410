#include "fsel/sfs.hpp"

#include <algorithm>

#include "fsel/error.hpp"
#include "fsel/parallel.hpp"

namespace fsel {

namespace {
// Separate derivation domain so step seeds never collide with the repeat
// seeds derived inside repeated_cv.
constexpr std::uint64_t kSfsDomain = 0x5F5E1A7B0C93D201ull;
}  // namespace

EvalConfig sfs_step_config(const EvalConfig& cfg, int step) {
    EvalConfig out = cfg;
    out.seed = derive_seed(cfg.seed ^ kSfsDomain, static_cast<std::uint64_t>(step));
    return out;
}

SfsTrace sfs_search(const Dataset& d, const FeatureSubset& pool, const EvalConfig& cfg,
                    const ClassifierFactory& factory) {
    if (pool.indices.empty()) throw EvalError("sfs_search: empty candidate pool");
    cfg.validate(d);

    SfsTrace trace;
    trace.pool = pool;

    std::vector<int> remaining = pool.indices;
    std::vector<int> chosen_so_far;
    const int m = static_cast<int>(pool.indices.size());

    for (int step = 1; step <= m; ++step) {
        const EvalConfig step_cfg = sfs_step_config(cfg, step);
        EvalConfig inner = step_cfg;
        inner.threads = 1;

        // All candidates share the step's fold draws; evaluations are
        // independent, one thread each.
        std::vector<AccuracyEstimate> estimates(remaining.size());
        parallel_for(remaining.size(), cfg.threads, [&](std::size_t i) {
            FeatureSubset subset;
            subset.dataset_name = d.name;
            subset.indices = chosen_so_far;
            subset.indices.push_back(remaining[i]);
            estimates[i] = repeated_cv(d, subset, inner, factory);
        });

        SfsStep record;
        record.step = step;
        record.candidates.reserve(remaining.size());
        std::size_t winner = 0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            record.candidates.push_back({remaining[i], estimates[i].mean});
            const bool better = estimates[i].mean > estimates[winner].mean ||
                                (estimates[i].mean == estimates[winner].mean &&
                                 remaining[i] < remaining[winner]);
            if (better) winner = i;
        }
        record.chosen = remaining[winner];
        record.best = estimates[winner];
        chosen_so_far.push_back(record.chosen);
        record.subset = chosen_so_far;
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(winner));
        trace.steps.push_back(std::move(record));
    }
    return trace;
}

std::pair<FeatureSubset, AccuracyEstimate> best_subset(const SfsTrace& trace) {
    if (trace.steps.empty()) throw EvalError("best_subset: empty trace");
    std::size_t best = 0;
    for (std::size_t j = 1; j < trace.steps.size(); ++j)
        if (trace.steps[j].best.mean > trace.steps[best].best.mean) best = j;
    FeatureSubset subset;
    subset.dataset_name = trace.pool.dataset_name;
    subset.indices = trace.steps[best].subset;
    return {std::move(subset), trace.steps[best].best};
}

}  // namespace fsel
