#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fsel/dataset.hpp"

namespace fsel {

enum class ImputePolicy { median_mode, drop_rows };

/// Fill statistics for one column: the median of present numeric cells or the
/// mode of present categorical cells (tie -> lowest code).
struct ColumnImputeStats {
    double median = 0.0;
    std::int32_t mode_code = 0;
};

struct ImputeStats {
    std::vector<ColumnImputeStats> columns;
};

/// Computes per-column fill statistics. Throws DataError when a column is
/// entirely missing (no statistic computable). Fit this on training rows and
/// apply to held-out rows so test values never leak into the statistics.
ImputeStats fit_impute(const Dataset& d);

/// Fills every missing cell from the statistics; missing mask becomes all
/// false. Sample count is unchanged.
Dataset apply_impute(const Dataset& d, const ImputeStats& stats);

/// Whole-dataset imputation op. median_mode fits and applies on the same
/// data; drop_rows removes any row containing a missing cell and throws
/// DataError when fewer than 2 classes would remain.
Dataset impute_missing(const Dataset& d, ImputePolicy policy);

enum class NormMethod { min_max, none };

struct ColumnNormStats {
    bool scaled = false;  // numeric column under min_max
    double min = 0.0;
    double max = 0.0;
};

struct NormStats {
    NormMethod method = NormMethod::none;
    std::vector<ColumnNormStats> columns;
};

/// Records per-numeric-column min/max. Requires no missing cells.
NormStats fit_normalize(const Dataset& d, NormMethod method);

/// Affine map of each scaled column onto [0,1] in terms of the fitted stats;
/// a constant fitted column maps to 0. Values from rows outside the fitted
/// data may fall outside [0,1]. Categorical columns are untouched.
Dataset apply_normalize(const Dataset& d, const NormStats& stats);

/// Fit-and-apply on the same data, returning the stats so disjoint test rows
/// can be transformed with training statistics.
std::pair<Dataset, NormStats> normalize(const Dataset& d, NormMethod method);

}  // namespace fsel
