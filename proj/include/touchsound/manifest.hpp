#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "touchsound/audio_clip.hpp"

namespace touchsound {

enum class Split { Train, Test };

std::string to_string(Split split);

struct ManifestEntry {
    std::string path;  // relative to the manifest's directory
    TouchLabel label = TouchLabel::Knock;
    std::optional<Split> split;

    bool operator==(const ManifestEntry&) const = default;
};

struct DatasetManifest {
    int version = 1;
    int sample_rate_hz = 44100;
    std::vector<ManifestEntry> entries;

    bool operator==(const DatasetManifest&) const = default;
};

// JSON on disk:
//   {"version":1,"sample_rate_hz":44100,
//    "entries":[{"path":"knock/001.wav","label":"Knock","split":"Train"},...]}
// "split" is omitted for unassigned entries. Entry order is preserved.
//
// load throws ParseError (with position) or UnknownLabel; both throw on
// duplicate paths.
DatasetManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

}  // namespace touchsound
