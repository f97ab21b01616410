#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsel {

struct FileDigest {
    std::string path;  // relative to the manifest's directory
    std::uint64_t bytes = 0;
    std::string sha256;
};

/// Record of one pipeline run: config snapshot, outcome, and the inventory
/// of every report file with its content digest. Written last, after all
/// reports. Rerunning the same config reproduces every digest.
struct RunManifest {
    std::string version;
    std::string status;  // "ok" or "failed"
    std::string error;   // set when failed
    std::uint64_t seed = 0;
    std::uint64_t duration_ms = 0;
    std::string config_text;
    std::vector<FileDigest> files;
};

void write_manifest(const RunManifest& manifest, const std::string& path);
RunManifest read_manifest(const std::string& path);

/// Digests `relative_paths` under `dir` in place.
std::vector<FileDigest> digest_files(const std::string& dir,
                                     const std::vector<std::string>& relative_paths);

}  // namespace fsel
