#include "fsel/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fsel/error.hpp"

namespace fsel {

std::size_t FeatureColumn::missing_count() const {
    std::size_t n = 0;
    for (auto m : missing) n += m != 0;
    return n;
}

int Dataset::feature_index(std::string_view feature_name) const {
    for (std::size_t i = 0; i < features.size(); ++i)
        if (features[i].name == feature_name) return static_cast<int>(i);
    return -1;
}

std::vector<std::size_t> Dataset::class_counts() const {
    std::vector<std::size_t> counts(class_names.size(), 0);
    for (auto label : labels) counts[static_cast<std::size_t>(label)]++;
    return counts;
}

std::size_t Dataset::missing_cell_count() const {
    std::size_t n = 0;
    for (const auto& f : features) n += f.missing_count();
    return n;
}

void Dataset::validate() const {
    const std::size_t n = labels.size();
    std::unordered_set<std::string> seen;
    for (const auto& f : features) {
        if (f.size() != n || f.missing.size() != n)
            throw DataError("dataset '" + name + "': column '" + f.name +
                            "' length does not match sample count");
        if (!seen.insert(f.name).second)
            throw DataError("dataset '" + name + "': duplicate feature name '" + f.name + "'");
        if (f.kind == FeatureKind::numeric) {
            for (std::size_t r = 0; r < n; ++r)
                if (!f.is_missing(r) && !std::isfinite(f.numeric[r]))
                    throw DataError("dataset '" + name + "': non-finite value in column '" +
                                    f.name + "' row " + std::to_string(r + 1));
        } else {
            const auto m = static_cast<std::int32_t>(f.alphabet.size());
            for (std::size_t r = 0; r < n; ++r) {
                if (f.is_missing(r)) continue;
                if (f.codes[r] < 0 || f.codes[r] >= m)
                    throw DataError("dataset '" + name + "': code outside alphabet in column '" +
                                    f.name + "' row " + std::to_string(r + 1));
            }
        }
    }
    if (class_names.size() < 2)
        throw DataError("dataset '" + name + "': fewer than 2 classes");
    std::vector<bool> used(class_names.size(), false);
    for (auto label : labels) {
        if (label < 0 || static_cast<std::size_t>(label) >= class_names.size())
            throw DataError("dataset '" + name + "': label index out of range");
        used[static_cast<std::size_t>(label)] = true;
    }
    for (std::size_t c = 0; c < used.size(); ++c)
        if (!used[c])
            throw DataError("dataset '" + name + "': class '" + class_names[c] +
                            "' has no samples");
}

bool FeatureSubset::contains(int idx) const {
    return std::find(indices.begin(), indices.end(), idx) != indices.end();
}

FeatureSubset FeatureSubset::all_of(const Dataset& d) {
    FeatureSubset s;
    s.dataset_name = d.name;
    s.indices.resize(d.n_features());
    for (std::size_t i = 0; i < s.indices.size(); ++i) s.indices[i] = static_cast<int>(i);
    return s;
}

FeatureSubset FeatureSubset::complement_of(const Dataset& d, int dropped) {
    FeatureSubset s;
    s.dataset_name = d.name;
    s.indices.reserve(d.n_features() - 1);
    for (std::size_t i = 0; i < d.n_features(); ++i)
        if (static_cast<int>(i) != dropped) s.indices.push_back(static_cast<int>(i));
    return s;
}

Dataset project(const Dataset& d, const FeatureSubset& s) {
    std::unordered_set<int> seen;
    Dataset out;
    out.name = d.name;
    out.labels = d.labels;
    out.class_names = d.class_names;
    out.features.reserve(s.indices.size());
    for (int idx : s.indices) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= d.n_features())
            throw DataError("project: feature index " + std::to_string(idx) +
                            " out of range for dataset '" + d.name + "'");
        if (!seen.insert(idx).second)
            throw DataError("project: duplicate feature index " + std::to_string(idx));
        out.features.push_back(d.features[static_cast<std::size_t>(idx)]);
    }
    return out;
}

Dataset slice_rows(const Dataset& d, const std::vector<int>& rows) {
    Dataset out;
    out.name = d.name;
    out.class_names = d.class_names;
    out.labels.reserve(rows.size());
    for (int r : rows) out.labels.push_back(d.labels[static_cast<std::size_t>(r)]);
    out.features.reserve(d.features.size());
    for (const auto& f : d.features) {
        FeatureColumn c;
        c.name = f.name;
        c.kind = f.kind;
        c.alphabet = f.alphabet;
        c.missing.reserve(rows.size());
        if (f.kind == FeatureKind::numeric) {
            c.numeric.reserve(rows.size());
            for (int r : rows) {
                c.numeric.push_back(f.numeric[static_cast<std::size_t>(r)]);
                c.missing.push_back(f.missing[static_cast<std::size_t>(r)]);
            }
        } else {
            c.codes.reserve(rows.size());
            for (int r : rows) {
                c.codes.push_back(f.codes[static_cast<std::size_t>(r)]);
                c.missing.push_back(f.missing[static_cast<std::size_t>(r)]);
            }
        }
        out.features.push_back(std::move(c));
    }
    return out;
}

bool datasets_equal(const Dataset& a, const Dataset& b) {
    if (a.name != b.name || a.labels != b.labels || a.class_names != b.class_names)
        return false;
    if (a.features.size() != b.features.size()) return false;
    for (std::size_t i = 0; i < a.features.size(); ++i) {
        const auto& fa = a.features[i];
        const auto& fb = b.features[i];
        if (fa.name != fb.name || fa.kind != fb.kind || fa.missing != fb.missing)
            return false;
        if (fa.kind == FeatureKind::numeric) {
            if (fa.numeric.size() != fb.numeric.size()) return false;
            for (std::size_t r = 0; r < fa.numeric.size(); ++r) {
                if (fa.missing[r]) continue;  // NaN payloads are not compared
                if (fa.numeric[r] != fb.numeric[r]) return false;
            }
        } else {
            if (fa.codes != fb.codes || fa.alphabet != fb.alphabet) return false;
        }
    }
    return true;
}

}  // namespace fsel
