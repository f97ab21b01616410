#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fsel/config.hpp"
#include "fsel/sfs.hpp"
#include "fsel/wrapper.hpp"

namespace fsel {

/// In-memory table; all report files render from this one shape.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt_accuracy(double value);  // fixed, 4 decimals (table style)

/// Renders tables and key-value summaries into an output directory in the
/// configured format and remembers what it wrote (relative paths, in write
/// order) for the manifest. File content carries no timestamps, so reruns
/// are byte-identical.
class ReportWriter {
public:
    ReportWriter(std::string out_dir, ReportFormat format);

    void write_table(const std::string& basename, const Table& table);
    void write_keyvalue(const std::string& basename,
                        const std::vector<std::pair<std::string, std::string>>& pairs);

    const std::vector<std::string>& written() const { return written_; }
    const std::string& out_dir() const { return out_dir_; }

private:
    void emit(const std::string& filename, const std::string& content);

    std::string out_dir_;
    ReportFormat format_;
    std::vector<std::string> written_;
};

// Report builders, one per pipeline surface. Columns are stable and
// documented in the README.
Table evaluate_table(const std::string& dataset, const std::string& classifier,
                     const EvalConfig& cfg, std::size_t n_features,
                     const AccuracyEstimate& estimate);
Table influence_table(const InfluenceReport& report);
Table lifting_table(const LiftingReport& report);
Table selection_table(const std::string& dataset, const std::string& classifier,
                      const Dataset& d, const SelectionResult& result);
Table sfs_table(const SfsTrace& trace, const Dataset& d);
Table sfs_candidates_table(const SfsTrace& trace, const Dataset& d);
Table accuracy_series(const std::vector<std::pair<int, double>>& points,
                      const std::string& x_name);

/// Single-letter aliases for pool positions (a, b, c, ...), the combination
/// string style of the SFS report; positions past 'z' fall back to f<index>.
std::string pool_alias(std::size_t position);
std::string combination_string(const std::vector<int>& subset,
                               const std::vector<int>& pool);

}  // namespace fsel
