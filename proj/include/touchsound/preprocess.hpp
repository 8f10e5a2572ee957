#pragma once

#include <span>
#include <vector>

#include "touchsound/audio_clip.hpp"

namespace touchsound {

// High-pass filter design request.
struct FilterSpec {
    double cutoff_hz = 1000.0;
    int order = 4;  // 2, 4 or 8
};

// One second-order section, normalized so a0 = 1.
struct BiquadCoefficients {
    double b0 = 0, b1 = 0, b2 = 0;
    double a1 = 0, a2 = 0;
};

// Frame-RMS silence gate. threshold_db is relative to the loudest frame.
struct TrimConfig {
    double frame_ms = 10.0;
    double threshold_db = -40.0;
};

struct PreprocessConfig {
    FilterSpec filter;
    TrimConfig trim;
};

// Subtracts the signal mean; length unchanged.
AudioClip remove_dc(AudioClip clip);

// Butterworth high-pass as a cascade of order/2 biquads, bilinear transform
// with frequency pre-warping. Cascade magnitude at cutoff_hz is -3 dB.
// Throws InvalidCutoff if cutoff_hz is not inside (0, Nyquist), InvalidConfig
// for an unsupported order.
std::vector<BiquadCoefficients> design_highpass(const FilterSpec& spec, int sample_rate_hz);

// Runs the cascade with zero initial state, direct form II transposed.
AudioClip apply_filter(AudioClip clip, std::span<const BiquadCoefficients> cascade);

// Keeps the contiguous sample range from the first to the last frame whose
// RMS exceeds peak-frame RMS + threshold_db. Throws EmptyAfterTrim when no
// frame passes the gate.
AudioClip trim_silence(AudioClip clip, const TrimConfig& config);

// Scales so max |sample| is exactly 1. An all-zero clip is returned unchanged
// and *degenerate (when given) is set.
AudioClip normalize_peak(AudioClip clip, bool* degenerate = nullptr);

// remove_dc -> trim_silence -> high-pass -> normalize_peak.
AudioClip preprocess_pipeline(AudioClip clip, const PreprocessConfig& config = {});

}  // namespace touchsound
