#pragma once

#include <filesystem>

#include "touchsound/audio_clip.hpp"

namespace touchsound {

// Reads a RIFF/WAVE file. Accepts PCM 16-bit and IEEE float 32-bit, mono or
// stereo; stereo is mixed down by per-sample channel average. 16-bit samples
// are scaled by 1/32768.
//
// Throws IoFailure, MalformedWav, UnsupportedFormat.
AudioClip read_wav(const std::filesystem::path& path);

// Writes a mono WAV file. bit_depth is 16 (PCM) or 32 (IEEE float). For
// 16-bit output samples are clamped to [-1, 1 - 1/32768] before quantization;
// 32-bit output is written as-is.
//
// Throws IoFailure, InvalidConfig (bad bit depth or non-finite samples).
void write_wav(const AudioClip& clip, const std::filesystem::path& path, int bit_depth);

}  // namespace touchsound
