#pragma once

#include <vector>

#include "touchsound/audio_clip.hpp"

namespace touchsound {

struct StftConfig {
    int window_size = 1024;  // power of two; Hann window
    int hop = 256;           // 0 < hop <= window_size
    int freq_bins_out = 64;
    int time_frames_out = 64;
    double floor_db = -80.0;
};

// Dense row-major grid, rows = frequency bins (low to high), cols = frames.
struct MagnitudeGrid {
    std::vector<double> values;
    int bins = 0;
    int frames = 0;

    double at(int bin, int frame) const { return values[static_cast<size_t>(bin) * frames + frame]; }
    double& at(int bin, int frame) { return values[static_cast<size_t>(bin) * frames + frame]; }
};

// Fixed-size log-magnitude grid, the classifier input.
struct Spectrogram {
    std::vector<double> values;  // row-major [freq_bucket][frame]
    int freq_bins = 0;
    int frames = 0;
    double freq_resolution_hz = 0.0;  // raw bin spacing: sample_rate / window_size
    double hop_s = 0.0;
    double floor_db = -80.0;

    double at(int bin, int frame) const { return values[static_cast<size_t>(bin) * frames + frame]; }
    double& at(int bin, int frame) { return values[static_cast<size_t>(bin) * frames + frame]; }
};

// Hann-windowed STFT magnitudes. Frame t covers samples [t*hop, t*hop +
// window_size); clips shorter than one window are zero-padded. Grid has
// window_size/2 + 1 rows and floor((N - window)/hop) + 1 columns.
MagnitudeGrid stft_magnitude(const AudioClip& clip, const StftConfig& config);

// Converts to dB relative to the grid maximum, clamped below at floor_db, so
// the output maximum is exactly 0. Throws DegenerateAllZero on an all-zero
// grid.
MagnitudeGrid to_log(const MagnitudeGrid& grid, double floor_db = -80.0);

// Shapes a log grid to (freq_bins_out, time_frames_out): frequency rows are
// averaged in contiguous buckets (remainder rows folded into the last
// bucket); the time axis is center-cropped or symmetrically padded with
// floor_db.
Spectrogram fit_to_shape(const MagnitudeGrid& log_grid, const StftConfig& config,
                         double sample_rate_hz);

// stft_magnitude -> to_log -> fit_to_shape.
Spectrogram compute_spectrogram(const AudioClip& clip, const StftConfig& config = {});

}  // namespace touchsound
