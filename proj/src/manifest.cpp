#include "touchsound/manifest.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "touchsound/errors.hpp"

namespace touchsound {
namespace {

void check_unique_paths(const DatasetManifest& manifest) {
    std::unordered_set<std::string> seen;
    for (const auto& e : manifest.entries) {
        if (!seen.insert(e.path).second) {
            throw ParseError("duplicate entry path: " + e.path);
        }
    }
}

}  // namespace

std::string to_string(Split split) {
    return split == Split::Train ? "Train" : "Test";
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open manifest: " + path.string());

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }

    DatasetManifest manifest;
    try {
        manifest.version = doc.at("version").get<int>();
        manifest.sample_rate_hz = doc.at("sample_rate_hz").get<int>();
        for (const auto& item : doc.at("entries")) {
            ManifestEntry entry;
            entry.path = item.at("path").get<std::string>();
            entry.label = parse_label(item.at("label").get<std::string>());
            if (item.contains("split")) {
                const auto s = item.at("split").get<std::string>();
                if (s == "Train") {
                    entry.split = Split::Train;
                } else if (s == "Test") {
                    entry.split = Split::Test;
                } else {
                    throw ParseError(path.string() + ": bad split value \"" + s + "\"");
                }
            }
            manifest.entries.push_back(std::move(entry));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }

    check_unique_paths(manifest);
    return manifest;
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
    check_unique_paths(manifest);

    nlohmann::ordered_json doc;
    doc["version"] = manifest.version;
    doc["sample_rate_hz"] = manifest.sample_rate_hz;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : manifest.entries) {
        nlohmann::ordered_json item;
        item["path"] = e.path;
        item["label"] = to_string(e.label);
        if (e.split) item["split"] = to_string(*e.split);
        doc["entries"].push_back(std::move(item));
    }

    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoFailure("cannot open manifest for writing: " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw IoFailure("manifest write failed: " + path.string());
}

}  // namespace touchsound
