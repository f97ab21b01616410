#include "fsel/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "fsel/error.hpp"

namespace fsel {

ImputeStats fit_impute(const Dataset& d) {
    ImputeStats stats;
    stats.columns.reserve(d.n_features());
    for (const auto& f : d.features) {
        ColumnImputeStats cs;
        if (f.kind == FeatureKind::numeric) {
            std::vector<double> present;
            present.reserve(f.numeric.size());
            for (std::size_t r = 0; r < f.numeric.size(); ++r)
                if (!f.is_missing(r)) present.push_back(f.numeric[r]);
            if (present.empty())
                throw DataError("impute: column '" + f.name +
                                "' is entirely missing, no median computable");
            std::sort(present.begin(), present.end());
            const std::size_t n = present.size();
            cs.median = (n % 2 == 1) ? present[n / 2]
                                     : 0.5 * (present[n / 2 - 1] + present[n / 2]);
        } else {
            std::vector<std::size_t> counts(f.alphabet.size(), 0);
            std::size_t present = 0;
            for (std::size_t r = 0; r < f.codes.size(); ++r) {
                if (f.is_missing(r)) continue;
                counts[static_cast<std::size_t>(f.codes[r])]++;
                ++present;
            }
            if (present == 0)
                throw DataError("impute: column '" + f.name +
                                "' is entirely missing, no mode computable");
            std::size_t best = 0;
            for (std::size_t c = 1; c < counts.size(); ++c)
                if (counts[c] > counts[best]) best = c;  // tie keeps lowest code
            cs.mode_code = static_cast<std::int32_t>(best);
        }
        stats.columns.push_back(cs);
    }
    return stats;
}

Dataset apply_impute(const Dataset& d, const ImputeStats& stats) {
    if (stats.columns.size() != d.n_features())
        throw DataError("impute: statistics shape does not match dataset");
    Dataset out = d;
    for (std::size_t i = 0; i < out.features.size(); ++i) {
        auto& f = out.features[i];
        const auto& cs = stats.columns[i];
        for (std::size_t r = 0; r < f.missing.size(); ++r) {
            if (!f.is_missing(r)) continue;
            if (f.kind == FeatureKind::numeric)
                f.numeric[r] = cs.median;
            else
                f.codes[r] = cs.mode_code;
        }
        std::fill(f.missing.begin(), f.missing.end(), 0);
    }
    return out;
}

Dataset impute_missing(const Dataset& d, ImputePolicy policy) {
    if (policy == ImputePolicy::median_mode) return apply_impute(d, fit_impute(d));

    std::vector<int> keep;
    keep.reserve(d.n_samples());
    for (std::size_t r = 0; r < d.n_samples(); ++r) {
        bool complete = true;
        for (const auto& f : d.features)
            if (f.is_missing(r)) {
                complete = false;
                break;
            }
        if (complete) keep.push_back(static_cast<int>(r));
    }
    Dataset out = slice_rows(d, keep);
    std::vector<bool> present(out.class_names.size(), false);
    for (auto label : out.labels) present[static_cast<std::size_t>(label)] = true;
    if (std::count(present.begin(), present.end(), true) < 2)
        throw DataError("impute: dropping incomplete rows of '" + d.name +
                        "' leaves fewer than 2 classes");
    return out;
}

NormStats fit_normalize(const Dataset& d, NormMethod method) {
    NormStats stats;
    stats.method = method;
    stats.columns.resize(d.n_features());
    if (method == NormMethod::none) return stats;
    for (std::size_t i = 0; i < d.n_features(); ++i) {
        const auto& f = d.features[i];
        if (f.kind != FeatureKind::numeric) continue;
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (std::size_t r = 0; r < f.numeric.size(); ++r) {
            if (f.is_missing(r))
                throw DataError("normalize: column '" + f.name + "' has missing cells");
            const double v = f.numeric[r];
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
        stats.columns[i] = {true, lo, hi};
    }
    return stats;
}

Dataset apply_normalize(const Dataset& d, const NormStats& stats) {
    if (stats.method == NormMethod::none) return d;
    if (stats.columns.size() != d.n_features())
        throw DataError("normalize: statistics shape does not match dataset");
    Dataset out = d;
    for (std::size_t i = 0; i < out.features.size(); ++i) {
        auto& f = out.features[i];
        const auto& cs = stats.columns[i];
        if (!cs.scaled) continue;
        const double range = cs.max - cs.min;
        if (range <= 0.0) {
            std::fill(f.numeric.begin(), f.numeric.end(), 0.0);
        } else {
            for (auto& v : f.numeric) v = (v - cs.min) / range;
        }
    }
    return out;
}

std::pair<Dataset, NormStats> normalize(const Dataset& d, NormMethod method) {
    NormStats stats = fit_normalize(d, method);
    return {apply_normalize(d, stats), std::move(stats)};
}

}  // namespace fsel
