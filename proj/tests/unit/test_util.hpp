#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>

#include "fsel/csv.hpp"
#include "fsel/dataset.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(FSEL_DATA_DIR) + "/" + name;
}

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = (std::filesystem::temp_directory_path() /
                 ("fsel_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter.fetch_add(1))))
                    .string();
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return path_ + "/" + name; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    return content;
}

/// Small all-numeric dataset builder for synthetic cases.
inline fsel::Dataset make_numeric_dataset(
    const std::string& name, const std::vector<std::string>& feature_names,
    const std::vector<std::vector<double>>& columns, const std::vector<int>& labels,
    const std::vector<std::string>& class_names) {
    fsel::Dataset d;
    d.name = name;
    d.class_names = class_names;
    for (int label : labels) d.labels.push_back(label);
    for (std::size_t f = 0; f < feature_names.size(); ++f) {
        fsel::FeatureColumn c;
        c.name = feature_names[f];
        c.kind = fsel::FeatureKind::numeric;
        c.numeric = columns[f];
        c.missing.assign(columns[f].size(), 0);
        d.features.push_back(std::move(c));
    }
    return d;
}

}  // namespace testutil
