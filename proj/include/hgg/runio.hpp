#pragma once

// Run manifests: every CLI command writes its artifacts into one output
// directory together with a manifest recording parameters, seeds,
// content digests, verification summaries and timing.  Identical command
// + seed must reproduce identical artifact digests.

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

namespace hgg {

inline constexpr const char* kToolVersion = "hggraph 0.1.0";

std::string sha256_hex(const std::string& bytes);

// write-temp-then-rename
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

std::string read_file(const std::filesystem::path& path);

struct RunManifest {
    std::string command;
    nlohmann::json parameters;                    // flags, seeds
    std::map<std::string, std::string> inputs;    // name -> sha256
    std::map<std::string, std::string> artifacts; // name -> sha256
    nlohmann::json verification;
    double elapsed_seconds = 0.0;

    nlohmann::json to_json() const;
};

// Serializes json with sorted keys and a trailing newline (stable bytes).
std::string json_bytes(const nlohmann::json& j);

// Writes an artifact into dir, records its digest in the manifest.
void write_artifact(RunManifest& manifest, const std::filesystem::path& dir,
                    const std::string& name, const std::string& bytes);

void write_manifest(const RunManifest& manifest, const std::filesystem::path& dir);

} // namespace hgg
