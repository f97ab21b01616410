#pragma once

#include <string>
#include <vector>

#include "fsel/config.hpp"
#include "fsel/manifest.hpp"

namespace fsel {

/// Executes the configured pipeline, writes its reports and chart series to
/// the output directory, and writes manifest.json last. On a pipeline error
/// the files produced so far stay on disk, a manifest with status "failed"
/// is still written, and the error is rethrown.
RunManifest run_experiment(const ExperimentConfig& cfg);

/// Resolved output directory: cfg.out_dir, or
/// <FSEL_OUT_ROOT or "runs">/<dataset>-<classifier>-<pipeline>.
std::string resolve_out_dir(const ExperimentConfig& cfg);

struct CompareResult {
    bool within_tolerance = true;
    std::vector<std::string> differences;  // one line per out-of-tolerance field
};

/// Field-by-field numeric diff of the report files listed by two manifests.
/// Numeric cells must agree within `tolerance` (percentage points); string
/// cells are not compared. Throws DataError on shape mismatch (different
/// file sets, columns, or row counts).
CompareResult compare_manifests(const std::string& manifest_a,
                                const std::string& manifest_b, double tolerance);

}  // namespace fsel
