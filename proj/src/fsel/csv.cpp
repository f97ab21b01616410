#include "fsel/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "fsel/error.hpp"

namespace fsel {
namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

struct RawColumn {
    std::string name;
    std::vector<std::string> cells;
    std::vector<std::uint8_t> missing;
};

}  // namespace

Dataset load_csv_text(const std::string& text, const std::string& name,
                      const CsvSchema& schema) {
    if (schema.label_column.empty())
        throw DataError("csv schema for '" + name + "' does not name a label column");

    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw DataError("csv '" + name + "': empty file");
    const auto header = split_line(line);
    const std::size_t ncols = header.size();

    int label_col = -1;
    for (std::size_t i = 0; i < ncols; ++i)
        if (header[i] == schema.label_column) label_col = static_cast<int>(i);
    if (label_col < 0)
        throw DataError("csv '" + name + "': label column '" + schema.label_column +
                        "' not found in header");

    std::vector<RawColumn> raw(ncols);
    for (std::size_t i = 0; i < ncols; ++i) raw[i].name = header[i];

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto cells = split_line(line);
        ++row;
        if (cells.size() != ncols)
            throw DataError("csv '" + name + "': row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(ncols));
        for (std::size_t i = 0; i < ncols; ++i) {
            const bool miss = cells[i].empty() || cells[i] == schema.missing_sentinel;
            raw[i].missing.push_back(miss ? 1 : 0);
            raw[i].cells.push_back(cells[i]);
        }
    }
    if (row == 0) throw DataError("csv '" + name + "': no data rows");

    Dataset d;
    d.name = name;

    // Label column: missing not allowed, classes in order of first appearance.
    {
        const auto& lc = raw[static_cast<std::size_t>(label_col)];
        std::unordered_map<std::string, std::int32_t> index;
        for (std::size_t r = 0; r < row; ++r) {
            if (lc.missing[r])
                throw DataError("csv '" + name + "': missing label in row " +
                                std::to_string(r + 1));
            auto [it, inserted] = index.try_emplace(
                lc.cells[r], static_cast<std::int32_t>(d.class_names.size()));
            if (inserted) d.class_names.push_back(lc.cells[r]);
            d.labels.push_back(it->second);
        }
        if (d.class_names.size() < 2)
            throw DataError("csv '" + name + "': label column '" + schema.label_column +
                            "' has a single class");
    }

    auto declared = [](const std::vector<std::string>& list, const std::string& col) {
        return std::find(list.begin(), list.end(), col) != list.end();
    };

    for (std::size_t i = 0; i < ncols; ++i) {
        if (static_cast<int>(i) == label_col) continue;
        const auto& rc = raw[i];
        const bool want_numeric = declared(schema.numeric_columns, rc.name);
        const bool want_categorical = declared(schema.categorical_columns, rc.name);
        if (want_numeric && want_categorical)
            throw DataError("csv '" + name + "': column '" + rc.name +
                            "' declared both numeric and categorical");

        bool numeric = true;
        if (want_categorical) {
            numeric = false;
        } else {
            double v;
            for (std::size_t r = 0; r < row && numeric; ++r) {
                if (rc.missing[r]) continue;
                if (!parse_double(rc.cells[r], v)) {
                    if (want_numeric)
                        throw DataError("csv '" + name + "': unparseable numeric cell '" +
                                        rc.cells[r] + "' at row " + std::to_string(r + 1) +
                                        ", column '" + rc.name + "'");
                    numeric = false;
                }
            }
        }

        FeatureColumn col;
        col.name = rc.name;
        col.missing = rc.missing;
        if (numeric) {
            col.kind = FeatureKind::numeric;
            col.numeric.resize(row);
            for (std::size_t r = 0; r < row; ++r) {
                if (rc.missing[r]) {
                    col.numeric[r] = std::numeric_limits<double>::quiet_NaN();
                } else {
                    parse_double(rc.cells[r], col.numeric[r]);
                }
            }
        } else {
            col.kind = FeatureKind::categorical;
            col.codes.resize(row);
            std::unordered_map<std::string, std::int32_t> index;
            for (std::size_t r = 0; r < row; ++r) {
                if (rc.missing[r]) {
                    col.codes[r] = -1;
                    continue;
                }
                auto [it, inserted] = index.try_emplace(
                    rc.cells[r], static_cast<std::int32_t>(col.alphabet.size()));
                if (inserted) col.alphabet.push_back(rc.cells[r]);
                col.codes[r] = it->second;
            }
        }
        d.features.push_back(std::move(col));
    }

    d.validate();
    return d;
}

Dataset load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read csv file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (const auto slash = name.find_last_of("/\\"); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (const auto dot = name.find_last_of('.'); dot != std::string::npos)
        name = name.substr(0, dot);
    return load_csv_text(buf.str(), name, schema);
}

std::string to_csv_text(const Dataset& d, const std::string& label_column,
                        const std::string& missing_sentinel) {
    std::ostringstream out;
    for (const auto& f : d.features) out << f.name << ',';
    out << label_column << '\n';
    for (std::size_t r = 0; r < d.n_samples(); ++r) {
        for (const auto& f : d.features) {
            if (f.is_missing(r))
                out << missing_sentinel;
            else if (f.kind == FeatureKind::numeric)
                out << format_double(f.numeric[r]);
            else
                out << f.alphabet[static_cast<std::size_t>(f.codes[r])];
            out << ',';
        }
        out << d.class_names[static_cast<std::size_t>(d.labels[r])] << '\n';
    }
    return out.str();
}

void write_csv(const Dataset& d, const std::string& path, const std::string& label_column,
               const std::string& missing_sentinel) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write csv file: " + path);
    out << to_csv_text(d, label_column, missing_sentinel);
}

}  // namespace fsel
