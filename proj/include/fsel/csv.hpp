#pragma once

#include <string>
#include <vector>

#include "fsel/dataset.hpp"

namespace fsel {

/// Column-role declaration for CSV loading. Exactly one label column; kinds
/// of the remaining columns may be declared or left to auto-detection (a
/// column is numeric when every present cell parses as a finite double).
struct CsvSchema {
    std::string label_column;
    std::string missing_sentinel = "?";
    std::vector<std::string> numeric_columns;
    std::vector<std::string> categorical_columns;
};

/// Loads a comma-separated UTF-8 file with a header row. Empty cells and the
/// sentinel are recorded in the missing mask. Throws DataError for an
/// unreadable file, ragged rows, a single-class label column, or a declared
/// numeric column with an unparseable cell (reported with row/column).
Dataset load_csv(const std::string& path, const CsvSchema& schema);

/// Same, from an in-memory buffer; `name` becomes the dataset name.
Dataset load_csv_text(const std::string& text, const std::string& name,
                      const CsvSchema& schema);

/// Writes header plus rows. Numerics use shortest round-trip formatting, so
/// load(write(d)) reproduces the exact doubles; missing cells become the
/// sentinel.
void write_csv(const Dataset& d, const std::string& path,
               const std::string& label_column = "class",
               const std::string& missing_sentinel = "?");

std::string to_csv_text(const Dataset& d, const std::string& label_column = "class",
                        const std::string& missing_sentinel = "?");

}  // namespace fsel
