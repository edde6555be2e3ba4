#include "hgg/runio.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "hgg/errors.hpp"

namespace hgg {

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr ||
        EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw io_error("sha256 computation failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw io_error("cannot open " + tmp.string() + " for writing");
        os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!os) throw io_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string json_bytes(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["parameters"] = parameters;
    j["inputs"] = inputs;
    j["artifacts"] = artifacts;
    j["verification"] = verification;
    j["elapsed_seconds"] = elapsed_seconds;
    return j;
}

void write_artifact(RunManifest& manifest, const std::filesystem::path& dir,
                    const std::string& name, const std::string& bytes) {
    std::filesystem::create_directories(dir);
    atomic_write(dir / name, bytes);
    manifest.artifacts[name] = sha256_hex(bytes);
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    atomic_write(dir / "manifest.json", json_bytes(manifest.to_json()));
}

} // namespace hgg
