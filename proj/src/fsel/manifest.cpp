#include "fsel/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fsel/error.hpp"
#include "fsel/sha256.hpp"

namespace fsel {

void write_manifest(const RunManifest& manifest, const std::string& path) {
    nlohmann::ordered_json j;
    j["version"] = manifest.version;
    j["status"] = manifest.status;
    if (!manifest.error.empty()) j["error"] = manifest.error;
    j["seed"] = manifest.seed;
    j["duration_ms"] = manifest.duration_ms;
    j["config"] = manifest.config_text;
    j["files"] = nlohmann::ordered_json::array();
    for (const auto& f : manifest.files)
        j["files"].push_back({{"path", f.path}, {"bytes", f.bytes}, {"sha256", f.sha256}});
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write manifest: " + path);
    out << j.dump(2) << "\n";
}

RunManifest read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read manifest: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("manifest " + path + " is not valid JSON: " + e.what());
    }
    RunManifest m;
    m.version = j.value("version", "");
    m.status = j.value("status", "");
    m.error = j.value("error", "");
    m.seed = j.value("seed", std::uint64_t{0});
    m.duration_ms = j.value("duration_ms", std::uint64_t{0});
    m.config_text = j.value("config", "");
    if (j.contains("files")) {
        for (const auto& f : j["files"]) {
            FileDigest d;
            d.path = f.value("path", "");
            d.bytes = f.value("bytes", std::uint64_t{0});
            d.sha256 = f.value("sha256", "");
            m.files.push_back(std::move(d));
        }
    }
    return m;
}

std::vector<FileDigest> digest_files(const std::string& dir,
                                     const std::vector<std::string>& relative_paths) {
    std::vector<FileDigest> out;
    out.reserve(relative_paths.size());
    for (const auto& rel : relative_paths) {
        const std::string full = dir + "/" + rel;
        FileDigest d;
        d.path = rel;
        d.bytes = static_cast<std::uint64_t>(std::filesystem::file_size(full));
        d.sha256 = sha256_file_hex(full);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace fsel
