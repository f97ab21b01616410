#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fsel {

enum class FeatureKind { numeric, categorical };

/// One feature column. Numeric columns keep doubles, categorical columns keep
/// codes into a per-column alphabet recorded at load time. Missing cells are
/// flagged, never silently dropped; a missing numeric cell holds NaN and a
/// missing categorical cell holds code -1.
struct FeatureColumn {
    std::string name;
    FeatureKind kind = FeatureKind::numeric;
    std::vector<double> numeric;
    std::vector<std::int32_t> codes;
    std::vector<std::string> alphabet;
    std::vector<std::uint8_t> missing;

    std::size_t size() const {
        return kind == FeatureKind::numeric ? numeric.size() : codes.size();
    }
    bool is_missing(std::size_t row) const { return missing[row] != 0; }
    std::size_t missing_count() const;
};

/// Immutable-by-convention tabular classification dataset: feature columns
/// plus one label column. All transforms produce new values, so Dataset is
/// safe to share across concurrent evaluation tasks.
struct Dataset {
    std::string name;
    std::vector<FeatureColumn> features;
    std::vector<std::int32_t> labels;     // indices into class_names
    std::vector<std::string> class_names; // order of first appearance

    std::size_t n_samples() const { return labels.size(); }
    std::size_t n_features() const { return features.size(); }
    std::size_t n_classes() const { return class_names.size(); }

    int feature_index(std::string_view feature_name) const;  // -1 when absent
    std::vector<std::size_t> class_counts() const;
    std::size_t missing_cell_count() const;
    bool has_missing() const { return missing_cell_count() > 0; }

    /// Throws DataError on any structural invariant violation: ragged
    /// columns, duplicate feature names, fewer than 2 classes, label out of
    /// range, non-finite present numeric cell, or code outside the alphabet.
    void validate() const;
};

/// Ordered, duplicate-free view of feature indices of one dataset. Order is
/// significant: the forward recursion adds features in ranked order.
struct FeatureSubset {
    std::string dataset_name;
    std::vector<int> indices;

    std::size_t size() const { return indices.size(); }
    bool contains(int idx) const;

    static FeatureSubset all_of(const Dataset& d);
    /// Every feature except `dropped`, in natural order.
    static FeatureSubset complement_of(const Dataset& d, int dropped);
};

/// Columns of `s` in `s`'s order, labels unchanged. Pure; `d` is not touched.
/// Throws DataError on out-of-range or duplicate index.
Dataset project(const Dataset& d, const FeatureSubset& s);

/// Row subset in the given order; class_names are kept as-is so label codes
/// stay comparable across fold slices.
Dataset slice_rows(const Dataset& d, const std::vector<int>& rows);

bool datasets_equal(const Dataset& a, const Dataset& b);

}  // namespace fsel
